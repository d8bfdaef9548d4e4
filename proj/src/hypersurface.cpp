#include "toric_ic/hypersurface.hpp"

#include "toric_ic/error.hpp"
#include "toric_ic/lattice_count.hpp"

#include <algorithm>

namespace toric {

namespace {

void require_lattice_polytope(const Polytope& p) {
    if (!p.is_compact()) throw Error(Errc::unbounded, "expected a compact polytope");
    if (!p.is_lattice()) throw Error(Errc::non_lattice, "expected a lattice polytope");
}

void require_face(const FaceLattice& lattice, int face) {
    if (face < 0 || face >= static_cast<int>(lattice.size()))
        throw Error(Errc::not_a_face, "face id " + std::to_string(face) + " is not in the lattice");
}

int top_dim(const FaceLattice& lattice) { return lattice.face(FaceLattice::top()).dim; }

}  // namespace

MonomialSupport make_support(int ambient_dim, std::vector<LatticeVector> exponents) {
    if (exponents.empty()) throw Error(Errc::invalid_argument, "empty support");
    for (const auto& e : exponents)
        if (static_cast<int>(e.size()) != ambient_dim)
            throw Error(Errc::dimension_mismatch, "exponent of wrong dimension in support");
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    return {ambient_dim, std::move(exponents)};
}

VRep newton_polytope(const MonomialSupport& s) {
    if (s.exponents.empty()) throw Error(Errc::invalid_argument, "empty support");
    VRep v{s.ambient_dim, {}, {}};
    for (const auto& e : s.exponents) v.vertices.push_back(to_rat(e));
    return convex_hull(v);
}

MonomialSupport face_support(const MonomialSupport& s, const Polytope& newton, const FaceLattice& lattice,
                             int face) {
    require_face(lattice, face);
    const Face& f = lattice.face(face);
    MonomialSupport out{s.ambient_dim, {}};
    for (const auto& e : s.exponents) {
        const RatVector x = to_rat(e);
        if (!newton.contains(x)) continue;
        const bool on = std::all_of(f.active_set.begin(), f.active_set.end(), [&](int k) {
            return pairing(x, newton.facets()[k].normal) == newton.facets()[k].offset;
        });
        if (on) out.exponents.push_back(e);
    }
    return out;
}

HodgeTable high_weight_table(int n) {
    if (n < 2) throw Error(Errc::invalid_argument, "high-weight table needs n >= 2");
    HodgeTable t;
    for (int i = 0; i <= n - 2; ++i) t.push_back({2 * n - 2 - i, n - 1 - i, n - 1 - i, binomial(n, i)});
    return t;
}

std::optional<Integer> high_weight_value(int n, int j, int p, int q) {
    if (n < 2) throw Error(Errc::invalid_argument, "high-weight table needs n >= 2");
    if (j < n - 1) return Integer(0);
    if (j == n - 1) {
        if (p + q > n - 1) return Integer(0);
        return std::nullopt;
    }
    if (j <= 2 * n - 2 && p == q && p == j - n + 1) return binomial(n, 2 * n - 2 - j);
    return Integer(0);
}

std::map<int, Integer> frontier_hodge(const Polytope& p, const FaceLattice& lattice) {
    require_lattice_polytope(p);
    const int n = p.ambient_dim();
    if (n < 2) throw Error(Errc::invalid_argument, "frontier Hodge numbers need dimension >= 2");
    std::map<int, Integer> out;
    out[0] = skeleton_count(p, lattice) - 1;
    for (int q = 1; q <= n - 1; ++q) {
        Integer sum = 0;
        for (int f : lattice.faces_of_dim(q + 1)) sum += Integer(interior_lattice_points(p, lattice, f).size());
        out[q] = sum;
    }
    return out;
}

Integer geometric_genus_count(const Polytope& p) {
    require_lattice_polytope(p);
    return count_interior_lattice_points(p);
}

std::vector<EulerViolation> euler_relation_check(const FaceLattice& lattice) {
    const int n = top_dim(lattice);
    std::vector<EulerViolation> out;
    for (int id : lattice.report_order()) {
        if (id == FaceLattice::top()) continue;
        int sum = 0;
        for (const auto& s : lattice.faces())
            if (lattice.leq(id, s.id)) sum += ((n - s.dim) % 2) ? -1 : 1;
        if (sum != 0) out.push_back({id, sum});
    }
    return out;
}

FaceAssignment closed_open_transform(const FaceLattice& lattice, const FaceAssignment& a, Direction dir) {
    if (a.size() != lattice.size())
        throw Error(Errc::invalid_argument, "partial assignment: " + std::to_string(a.size()) + " classes for " +
                                                std::to_string(lattice.size()) + " faces");
    FaceAssignment out(a.size());
    if (dir == Direction::open_to_closed) {
        for (const auto& s : lattice.faces())
            for (const auto& t : lattice.faces())
                if (lattice.leq(t.id, s.id)) out[s.id] += a[t.id];
        return out;
    }
    // Möbius inversion, smallest faces first.
    std::vector<int> order = lattice.report_order();
    for (int s : order) {
        out[s] = a[s];
        for (int t : order)
            if (t != s && lattice.leq(t, s)) out[s] -= out[t];
    }
    return out;
}

EPoly2 alternating_sum(const FaceLattice& lattice, const FaceAssignment& closed) {
    if (closed.size() != lattice.size()) throw Error(Errc::invalid_argument, "partial assignment");
    const int n = top_dim(lattice);
    EPoly2 sum;
    for (const auto& s : lattice.faces()) {
        if ((n - s.dim) % 2) sum -= closed[s.id];
        else sum += closed[s.id];
    }
    return sum;
}

bool alternating_identity_holds(const FaceLattice& lattice, const FaceAssignment& open) {
    const auto closed = closed_open_transform(lattice, open, Direction::open_to_closed);
    return alternating_sum(lattice, closed) == open[FaceLattice::top()];
}

Integer stratum_component_count(const Polytope& p, const FaceLattice& lattice, int edge) {
    require_face(lattice, edge);
    if (lattice.face(edge).dim != 1)
        throw Error(Errc::invalid_argument, "component count is defined for 1-dimensional faces only");
    require_lattice_polytope(p);
    return Integer(interior_lattice_points(p, lattice, edge).size()) + 1;
}

FrontierCrosscheck frontier_crosscheck(const Polytope& p, const FaceLattice& lattice) {
    require_lattice_polytope(p);
    FrontierCrosscheck r;
    r.skeleton = skeleton_count(p, lattice);
    r.vertices = Integer(lattice.faces_of_dim(0).size());
    for (int e : lattice.faces_of_dim(1)) r.edge_interior += Integer(interior_lattice_points(p, lattice, e).size());
    const Integer b = r.vertices - 1;
    r.p0_chase = b + r.edge_interior;
    r.p0_frontier = frontier_hodge(p, lattice).at(0);
    r.ok = r.skeleton == r.vertices + r.edge_interior && r.p0_chase == r.p0_frontier;
    return r;
}

std::vector<EPoly2> prime_cut_multipliers(const std::vector<int>& face_map, const FaceLattice& original,
                                          const FaceLattice& cut) {
    if (face_map.size() != cut.size()) throw Error(Errc::invalid_argument, "face map is not total");
    std::vector<EPoly2> out(original.size());
    const EPoly2 lm1 = EPoly2::L() - 1;
    for (std::size_t t = 0; t < face_map.size(); ++t) {
        const int s = face_map[t];
        if (s < 0 || s >= static_cast<int>(original.size()))
            throw Error(Errc::invalid_argument, "face map is not total");
        const int drop = cut.face(static_cast<int>(t)).dim - original.face(s).dim;
        if (drop < 0) throw Error(Errc::invariant_violation, "face map raises dimension");
        out[s] += pow(lm1, drop);
    }
    return out;
}

EPoly2 curve_e_polynomial(const Polytope& p, const FaceLattice& lattice, int components) {
    if (p.ambient_dim() != 2) throw Error(Errc::invalid_argument, "curve E-polynomial needs a polygon");
    if (components < 1) throw Error(Errc::invalid_argument, "component count must be positive");
    require_lattice_polytope(p);
    const Integer interior = count_interior_lattice_points(p);
    const Integer pi = skeleton_count(p, lattice);
    const Integer c = components;
    return EPoly2::monomial(1, 1, c) - EPoly2::monomial(1, 0, interior) - EPoly2::monomial(0, 1, interior) +
           EPoly2::monomial(0, 0, c - pi);
}

EPoly2 torus_class(int d) {
    if (d < 0) throw Error(Errc::invalid_argument, "negative torus dimension");
    return pow(EPoly2::L() - 1, d);
}

}  // namespace toric
