#pragma once

// Fixture generators and brute-force oracles shared by the unit and
// acceptance tests. The oracles avoid the library's face lattice.

#include "toric_ic/error.hpp"
#include "toric_ic/lattice.hpp"
#include "toric_ic/poly.hpp"
#include "toric_ic/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace toric;

inline RatVector rv(std::initializer_list<long> c) { return make_rat_vector(c); }
inline LatticeVector lv(std::initializer_list<long> c) { return make_lattice_vector(c); }

inline Polytope from_points(int n, std::vector<RatVector> pts) {
    return Polytope::from_vrep({n, std::move(pts), {}});
}

inline Polytope simplex(int n, long k = 1) {
    std::vector<RatVector> pts{RatVector(n, Rat(0))};
    for (int i = 0; i < n; ++i) {
        RatVector e(n, Rat(0));
        e[i] = k;
        pts.push_back(e);
    }
    return from_points(n, pts);
}

inline Polytope cube(int n, long k = 1) {
    std::vector<RatVector> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        RatVector x(n);
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? k : 0;
        pts.push_back(x);
    }
    return from_points(n, pts);
}

inline Polytope square() { return cube(2); }

inline Polytope octahedron() {
    return from_points(3, {rv({1, 0, 0}), rv({-1, 0, 0}), rv({0, 1, 0}), rv({0, -1, 0}), rv({0, 0, 1}),
                           rv({0, 0, -1})});
}

inline Polytope square_pyramid() {
    return from_points(3, {rv({0, 0, 0}), rv({2, 0, 0}), rv({0, 2, 0}), rv({2, 2, 0}), rv({1, 1, 2})});
}

/// Convex lattice k-gon, 3 <= k <= 8.
inline std::vector<RatVector> lattice_polygon(int k) {
    const std::vector<RatVector> octagon{rv({1, 0}), rv({2, 0}), rv({3, 1}), rv({3, 2}),
                                         rv({2, 3}), rv({1, 3}), rv({0, 2}), rv({0, 1})};
    switch (k) {
    case 3: return {rv({0, 0}), rv({1, 0}), rv({0, 1})};
    case 4: return {rv({0, 0}), rv({1, 0}), rv({1, 1}), rv({0, 1})};
    case 5: return {rv({0, 0}), rv({1, 0}), rv({2, 1}), rv({1, 2}), rv({0, 1})};
    case 6: return {rv({0, 0}), rv({1, 0}), rv({2, 1}), rv({2, 2}), rv({1, 2}), rv({0, 1})};
    case 7: return {octagon.begin(), octagon.end() - 1};
    default: return octagon;
    }
}

/// Cone R>=0 · (Q × {1}) with apex at the origin.
inline Polytope cone_over(const std::vector<RatVector>& base) {
    const int n = static_cast<int>(base.front().size()) + 1;
    VRep v{n, {RatVector(n, Rat(0))}, {}};
    for (const auto& x : base) {
        RatVector lifted = x;
        lifted.emplace_back(1);
        v.rays.push_back(primitive_vector(lifted));
    }
    return Polytope::from_vrep(v);
}

inline Polytope kgon_cone(int k) { return cone_over(lattice_polygon(k)); }

/// Full-dimensional hull of random lattice points in [-2,2]^n with at most
/// max_vertices vertices.
inline Polytope random_lattice_polytope(std::mt19937& rng, int n, int max_vertices) {
    std::uniform_int_distribution<int> coord(-2, 2);
    std::uniform_int_distribution<int> count(n + 1, max_vertices);
    while (true) {
        VRep v{n, {}, {}};
        const int m = count(rng);
        for (int i = 0; i < m; ++i) {
            RatVector x(n);
            for (auto& c : x) c = coord(rng);
            v.vertices.push_back(x);
        }
        VRep hull = convex_hull(v);
        if (static_cast<int>(hull.vertices.size()) > max_vertices) continue;
        RatMatrix diffs;
        for (const auto& x : hull.vertices) diffs.push_back(sub(x, hull.vertices.front()));
        if (rank(diffs) < n) continue;
        return Polytope::from_vrep(hull);
    }
}

/// Box [-3,3]^n cut by random rational halfspaces, kept only when simple.
inline Polytope random_simple_polytope(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> extra(1, 3);
    while (true) {
        HRep h{n, {}};
        for (int i = 0; i < n; ++i) {
            RatVector e(n, Rat(0));
            e[i] = 1;
            h.rows.push_back({e, Rat(-3)});
            e[i] = -1;
            h.rows.push_back({e, Rat(-3)});
        }
        const int k = extra(rng);
        for (int j = 0; j < k; ++j) {
            RatVector a(n);
            for (auto& c : a) c = coef(rng);
            if (is_zero(a)) continue;
            h.rows.push_back({a, Rat(-(2 + coef(rng) + 3), 2)});
        }
        try {
            Polytope p = Polytope::from_hrep(h);
            if (is_prime(p)) return p;
        } catch (const Error&) {
        }
    }
}

/// Product of random elementary matrices and a signed permutation.
inline IntMatrix random_unimodular(std::mt19937& rng, int n) {
    IntMatrix u = identity_matrix(n);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int step = 0; step < 3 * n; ++step) {
        const int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const int c = mult(rng);
        for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = u[perm[i]];
        if (mult(rng) < 0)
            for (auto& x : out[i]) x = -x;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oracles

/// Vertex sets of all nonempty faces of a compact full-dimensional polytope,
/// found from brute-force facets (n affinely independent vertices spanning a
/// supporting hyperplane) closed under intersection. Includes the polytope.
struct OracleFace {
    std::vector<int> vertices;
    int dim = 0;
};

inline int affine_dim(const std::vector<RatVector>& pts, const std::vector<int>& ids) {
    RatMatrix diffs;
    for (int i : ids) diffs.push_back(sub(pts[i], pts[ids.front()]));
    return rank(diffs);
}

inline std::vector<OracleFace> oracle_faces(const std::vector<RatVector>& pts) {
    const int n = static_cast<int>(pts.front().size());
    const int m = static_cast<int>(pts.size());
    std::set<std::vector<int>> facets;
    // Enumerate n-subsets.
    std::vector<bool> sel(m, false);
    std::fill(sel.begin(), sel.begin() + std::min(n, m), true);
    do {
        std::vector<int> ids;
        for (int i = 0; i < m; ++i)
            if (sel[i]) ids.push_back(i);
        if (affine_dim(pts, ids) != n - 1) continue;
        RatMatrix rows;
        for (int i : ids) {
            RatVector r = sub(pts[i], pts[ids.front()]);
            rows.push_back(r);
        }
        const RatVector normal = nullspace(rows, n).front();
        const Rat level = dot(normal, pts[ids.front()]);
        int pos = 0, neg = 0;
        std::vector<int> on;
        for (int i = 0; i < m; ++i) {
            const Rat s = dot(normal, pts[i]) - level;
            if (s > 0) ++pos;
            if (s < 0) ++neg;
            if (s == 0) on.push_back(i);
        }
        if (pos == 0 || neg == 0) facets.insert(on);
    } while (std::prev_permutation(sel.begin(), sel.end()));

    std::set<std::vector<int>> faces(facets.begin(), facets.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(faces.begin(), faces.end());
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (const auto& f : facets) {
                std::vector<int> meet;
                std::set_intersection(cur[a].begin(), cur[a].end(), f.begin(), f.end(), std::back_inserter(meet));
                if (!meet.empty() && faces.insert(meet).second) grew = true;
            }
    }
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    faces.insert(all);
    std::vector<OracleFace> out;
    for (const auto& f : faces) out.push_back({f, affine_dim(pts, f)});
    return out;
}

/// f_0, ..., f_n from the oracle faces.
inline std::vector<Integer> oracle_f_vector(const std::vector<RatVector>& pts) {
    const int n = static_cast<int>(pts.front().size());
    std::vector<Integer> f(n + 1, Integer(0));
    for (const auto& face : oracle_faces(pts)) f[face.dim] += 1;
    return f;
}

/// Σ_i f*_{i-1} (t-1)^{d-i} with f* the f-vector of the dual simplicial
/// polytope: f*_{i-1} = f_{d-i}, and f*_{-1} = 1 is the polytope itself.
inline TatePoly oracle_h_polynomial(const std::vector<RatVector>& pts) {
    const auto f = oracle_f_vector(pts);
    const int d = static_cast<int>(f.size()) - 1;
    TatePoly h;
    for (int i = 0; i <= d; ++i) h += TatePoly(std::vector<Integer>{f[d - i]}) * TatePoly::t_minus_one_pow(d - i);
    return h;
}

/// Lattice points of a compact polytope in the bounding box of its vertices.
inline long brute_count(const Polytope& p, bool interior) {
    const int n = p.ambient_dim();
    std::vector<long> lo(n, 0), hi(n, 0);
    for (int i = 0; i < n; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = floor(mn).convert_to<long>();
        hi[i] = ceil(mx).convert_to<long>();
    }
    long count = 0;
    std::vector<long> cur = lo;
    while (true) {
        RatVector x(n);
        for (int i = 0; i < n; ++i) x[i] = cur[i];
        bool in = true, strict = true;
        for (const auto& f : p.facets()) {
            const Rat s = pairing(x, f.normal) - f.offset;
            if (s < 0) in = false;
            if (s == 0) strict = false;
        }
        if (in && (!interior || strict)) ++count;
        int i = 0;
        for (; i < n; ++i) {
            if (cur[i] < hi[i]) { ++cur[i]; break; }
            cur[i] = lo[i];
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace fixtures
