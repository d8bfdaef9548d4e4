#include "toric_ic/lattice_count.hpp"

#include "toric_ic/error.hpp"

#include <functional>
#include <set>

namespace toric {

namespace {

void require_compact(const Polytope& p) {
    if (!p.is_compact()) throw Error(Errc::unbounded, "lattice counting needs a compact polytope");
}

// Visits every lattice point base + Σ c_i basis_i whose frame coordinates
// lie in the bounding box of `corners`.
void scan_box(const AffineLatticeFrame& frame, const std::vector<RatVector>& corners,
              const std::function<void(const LatticeVector&)>& visit) {
    const int d = frame.dim();
    std::vector<Integer> lo(d), hi(d);
    bool first = true;
    for (const auto& c : corners) {
        const auto coords = frame.coordinates(c);
        if (!coords) throw Error(Errc::invariant_violation, "vertex is off its face's span");
        for (int i = 0; i < d; ++i) {
            const Integer f = floor((*coords)[i]);
            const Integer g = ceil((*coords)[i]);
            if (first || f < lo[i]) lo[i] = f;
            if (first || g > hi[i]) hi[i] = g;
        }
        first = false;
    }
    std::vector<Integer> cur = lo;
    while (true) {
        visit(frame.point(cur));
        int i = 0;
        for (; i < d; ++i) {
            if (cur[i] < hi[i]) { ++cur[i]; break; }
            cur[i] = lo[i];
        }
        if (i == d) return;
    }
}

std::vector<LatticeVector> face_points(const Polytope& p, const FaceLattice& lattice, int face, bool interior) {
    require_compact(p);
    if (face < 0 || face >= static_cast<int>(lattice.size()))
        throw Error(Errc::not_a_face, "face id " + std::to_string(face) + " is not in the lattice");
    const Face& f = lattice.face(face);
    std::vector<RatVector> corners;
    for (int v : f.vertex_ids) corners.push_back(p.vertices()[v]);

    AffineLatticeFrame frame;
    try {
        frame = affine_frame(corners);
    } catch (const Error& e) {
        if (e.code() == Errc::non_integral_span) return {};
        throw;
    }
    std::vector<bool> active(p.facets().size(), false);
    for (int a : f.active_set) active[a] = true;

    std::vector<LatticeVector> out;
    scan_box(frame, corners, [&](const LatticeVector& x) {
        const RatVector xq = to_rat(x);
        for (std::size_t k = 0; k < p.facets().size(); ++k) {
            const Rat s = pairing(xq, p.facets()[k].normal) - p.facets()[k].offset;
            if (s < 0) return;
            if (interior && !active[k] && s == 0) return;
        }
        out.push_back(x);
    });
    return out;
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Polytope& p, const FaceLattice& lattice, int face) {
    return face_points(p, lattice, face, false);
}

std::vector<LatticeVector> interior_lattice_points(const Polytope& p, const FaceLattice& lattice, int face) {
    return face_points(p, lattice, face, true);
}

Integer count_lattice_points(const Polytope& p) {
    return Integer(lattice_points(p, FaceLattice(p), FaceLattice::top()).size());
}

Integer count_interior_lattice_points(const Polytope& p) {
    return Integer(interior_lattice_points(p, FaceLattice(p), FaceLattice::top()).size());
}

Integer skeleton_count(const Polytope& p, const FaceLattice& lattice) {
    require_compact(p);
    std::set<LatticeVector> pts;
    Integer vertex_count = 0;
    for (const auto& v : p.vertices())
        if (is_integral(v)) vertex_count += 1;
    Integer edge_interior = 0;
    const auto edges = lattice.faces_of_dim(1);
    for (int e : edges) {
        for (auto& x : lattice_points(p, lattice, e)) pts.insert(std::move(x));
        edge_interior += Integer(interior_lattice_points(p, lattice, e).size());
    }
    const Integer pi(pts.size());
    if (!edges.empty() && pi != vertex_count + edge_interior)
        throw Error(Errc::invariant_violation, "skeleton count differs from vertices + edge interiors");
    return pi;
}

Rat EhrhartPolynomial::operator()(const Rat& k) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

EhrhartPolynomial ehrhart_polynomial(const Polytope& p) {
    require_compact(p);
    if (!p.is_lattice())
        throw Error(Errc::non_lattice, "Ehrhart quasi-polynomial not supported for rational vertices");
    const int n = p.ambient_dim();
    RatMatrix vandermonde;
    RatVector values;
    for (int k = 0; k <= n; ++k) {
        RatVector row;
        Rat pw = 1;
        for (int j = 0; j <= n; ++j) { row.push_back(pw); pw *= k; }
        vandermonde.push_back(std::move(row));
        values.emplace_back(k == 0 ? Integer(1) : count_lattice_points(p.dilate(Rat(k))));
    }
    return EhrhartPolynomial(*solve(vandermonde, values, n + 1));
}

bool reciprocity_check(const Polytope& p, int kmax) {
    const auto poly = ehrhart_polynomial(p);
    const int n = p.ambient_dim();
    for (int k = 1; k <= kmax; ++k) {
        Rat lhs = poly(Rat(-k));
        if (n % 2) lhs = -lhs;
        if (lhs != Rat(count_interior_lattice_points(p.dilate(Rat(k))))) return false;
    }
    return true;
}

ConeOverPolytope cone_over_polytope(const Polytope& p) {
    require_compact(p);
    const int n = p.ambient_dim();
    VRep v{n + 1, {RatVector(n + 1, Rat(0))}, {}};
    for (const auto& x : p.vertices()) {
        RatVector lifted = x;
        lifted.emplace_back(1);
        v.rays.push_back(primitive_vector(lifted));
    }
    LatticeVector grading(n + 1, Integer(0));
    grading[n] = 1;
    return {Polytope::from_vrep(v), grading};
}

Integer count_at_grade(const ConeOverPolytope& c, const Integer& k) {
    if (k < 0) throw Error(Errc::invalid_argument, "grade must be nonnegative");
    const int dim = c.cone.ambient_dim();
    const int n = dim - 1;
    // Points of the slice at height k along each ray bound the scan box.
    std::vector<RatVector> corners;
    for (const auto& r : c.cone.rays()) {
        const Rat h = pairing(to_rat(r), c.grading);
        RatVector x(n);
        for (int i = 0; i < n; ++i) x[i] = Rat(k) * Rat(r[i]) / h;
        corners.push_back(std::move(x));
    }
    AffineLatticeFrame box{LatticeVector(n, Integer(0)), {}};
    for (int i = 0; i < n; ++i) {
        LatticeVector e(n, Integer(0));
        e[i] = 1;
        box.basis.push_back(std::move(e));
    }
    Integer count = 0;
    scan_box(box, corners, [&](const LatticeVector& x) {
        RatVector lifted = to_rat(x);
        lifted.emplace_back(k);
        if (c.cone.contains(lifted)) count += 1;
    });
    return count;
}

CountReport count_report(const Polytope& p, const FaceLattice& lattice) {
    CountReport r;
    for (int id : lattice.report_order())
        r.faces.push_back({id, Integer(lattice_points(p, lattice, id).size()),
                           Integer(interior_lattice_points(p, lattice, id).size())});
    r.skeleton = skeleton_count(p, lattice);
    if (p.is_lattice()) {
        const auto poly = ehrhart_polynomial(p);
        r.ehrhart_coeffs = poly.coeffs();
        for (int k = 0; k <= p.ambient_dim(); ++k) r.ehrhart_values.push_back(numerator(poly(Rat(k))));
    }
    return r;
}

}  // namespace toric
