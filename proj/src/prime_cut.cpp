#include "toric_ic/prime_cut.hpp"

#include "toric_ic/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace toric {

namespace {

struct Built {
    Polytope cut;
    HRep rows;
};

Rat power(const Rat& base, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

HRep cut_rows(const Polytope& p, const CutSpec& spec, const Rat& eps) {
    HRep h{p.ambient_dim(), {}};
    for (const auto& f : p.facets()) h.rows.push_back({to_rat(f.normal), f.offset});
    for (const auto& c : spec.cuts) h.rows.push_back({to_rat(c.normal), c.base_value + power(eps, c.order)});
    return h;
}

std::optional<Built> build(const Polytope& p, const CutSpec& spec, const Rat& eps) {
    HRep h = cut_rows(p, spec, eps);
    try {
        Polytope cut = Polytope::from_hrep(h);
        return Built{std::move(cut), std::move(h)};
    } catch (const Error& e) {
        if (e.code() == Errc::empty_polyhedron || e.code() == Errc::not_full_dimensional) return std::nullopt;
        throw;
    }
}

int limit_face(const Polytope& p, const FaceLattice& lattice, const RatVector& x) {
    std::vector<int> tight;
    for (std::size_t k = 0; k < p.facets().size(); ++k)
        if (pairing(x, p.facets()[k].normal) == p.facets()[k].offset) tight.push_back(static_cast<int>(k));
    std::vector<int> vids;
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
        if (std::all_of(tight.begin(), tight.end(), [&](int k) { return p.vertex_on_facet(static_cast<int>(v), k); }))
            vids.push_back(static_cast<int>(v));
    return lattice.find(vids, {});
}

// Faces of Δ' keyed by the input rows they lie on, with their π images.
using Signature = std::map<std::vector<int>, int>;

struct Labelled {
    Signature signature;
    std::vector<int> face_map;
};

std::optional<Labelled> label(const Built& b, const FaceLattice& cut_lattice, const Polytope& p,
                              const FaceLattice& lattice, const CutSpec& spec) {
    const int n = p.ambient_dim();
    const int nf = static_cast<int>(p.facets().size());
    const auto& facets = b.cut.facets();
    for (const auto& f : facets)
        if (f.source_row < 0) return std::nullopt;

    auto limit_offset = [&](int row) {
        return row < nf ? p.facets()[row].offset : spec.cuts[row - nf].base_value;
    };

    // Limit of each vertex as ε -> 0: same tight rows, unshifted offsets.
    std::vector<RatVector> limit(b.cut.vertices().size());
    for (std::size_t v = 0; v < limit.size(); ++v) {
        RatMatrix a;
        RatVector rhs;
        for (std::size_t k = 0; k < facets.size() && static_cast<int>(a.size()) < n; ++k) {
            if (!b.cut.vertex_on_facet(static_cast<int>(v), static_cast<int>(k))) continue;
            const int row = facets[k].source_row;
            RatMatrix trial = a;
            trial.push_back(b.rows.rows[row].normal);
            if (rank(trial) == static_cast<int>(trial.size())) {
                a = std::move(trial);
                rhs.push_back(limit_offset(row));
            }
        }
        auto x = solve(a, rhs, n);
        if (static_cast<int>(a.size()) < n || !x) return std::nullopt;
        limit[v] = std::move(*x);
    }

    Labelled out;
    out.face_map.resize(cut_lattice.size());
    for (const auto& tau : cut_lattice.faces()) {
        RatVector bary(n, Rat(0));
        for (int v : tau.vertex_ids) bary = add(bary, limit[v]);
        bary = scale(Rat(1, static_cast<long>(tau.vertex_ids.size())), bary);
        const int s = limit_face(p, lattice, bary);
        if (s < 0) return std::nullopt;
        std::vector<int> key;
        for (int k : tau.active_set) key.push_back(facets[k].source_row);
        std::sort(key.begin(), key.end());
        out.signature[key] = s;
        out.face_map[tau.id] = s;
    }
    return out;
}

}  // namespace

CutSpec choose_cut_functionals(const Polytope& p, const FaceLattice& lattice) {
    if (!p.is_compact()) throw Error(Errc::unsupported_shape, "prime cutting needs a compact polytope");
    CutSpec spec;
    for (int id : lattice.report_order()) {
        const Face& f = lattice.face(id);
        if (id == FaceLattice::top() || static_cast<int>(f.active_set.size()) == f.codim) continue;
        LatticeVector v(p.ambient_dim(), Integer(0));
        for (int k : f.active_set)
            for (int i = 0; i < p.ambient_dim(); ++i) v[i] += p.facets()[k].normal[i];
        Rat a = pairing(p.vertices()[f.vertex_ids.front()], v);
        spec.cuts.push_back({id, std::move(v), a, f.dim + 1});
    }
    return spec;
}

CutResult prime_cut(const Polytope& p, const FaceLattice& lattice, const CutSpec& spec, const Rat& epsilon,
                    int max_rounds) {
    if (epsilon <= 0) throw Error(Errc::invalid_argument, "epsilon must be positive");
    if (!p.is_compact()) throw Error(Errc::unsupported_shape, "prime cutting needs a compact polytope");
    if (spec.cuts.empty()) {
        std::vector<int> identity(lattice.size());
        for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
        return {p, lattice, std::move(identity), epsilon, spec, 0};
    }
    const std::size_t nrows = p.facets().size() + spec.cuts.size();
    Rat eps = epsilon;
    for (int round = 1; round <= max_rounds; ++round, eps /= 2) {
        auto coarse = build(p, spec, eps);
        auto fine = build(p, spec, eps / 2);
        if (!coarse || !fine) continue;
        if (coarse->cut.facets().size() != nrows || fine->cut.facets().size() != nrows) continue;
        FaceLattice cl(coarse->cut);
        FaceLattice fl(fine->cut);
        if (!is_prime(coarse->cut, cl) || !is_prime(fine->cut, fl)) continue;
        auto a = label(*coarse, cl, p, lattice, spec);
        auto b = label(*fine, fl, p, lattice, spec);
        if (!a || !b || a->signature != b->signature) continue;
        return {std::move(coarse->cut), std::move(cl), std::move(a->face_map), eps, spec, round};
    }
    throw Error(Errc::epsilon_unstable,
                "epsilon unstable: no stable cut after " + std::to_string(max_rounds) + " halvings");
}

bool fan_refines(const Polytope& fine, const FaceLattice& fine_lattice, const Polytope& coarse,
                 const FaceLattice& coarse_lattice) {
    if (!fine.is_compact() || !coarse.is_compact())
        throw Error(Errc::unsupported_shape, "fan refinement is checked for compact polytopes");
    if (fine.ambient_dim() != coarse.ambient_dim()) throw Error(Errc::dimension_mismatch, "ambient dims differ");
    (void)coarse_lattice;
    // A direction g lies in the normal cone of coarse vertex w iff w minimizes <·, g>.
    auto minimizes = [&](std::size_t w, const LatticeVector& g) {
        const Rat m = pairing(coarse.vertices()[w], g);
        return std::all_of(coarse.vertices().begin(), coarse.vertices().end(),
                           [&](const RatVector& u) { return pairing(u, g) >= m; });
    };
    for (int vf : fine_lattice.faces_of_dim(0)) {
        const Face& f = fine_lattice.face(vf);
        int containing = 0;
        for (std::size_t w = 0; w < coarse.vertices().size(); ++w) {
            const bool inside = std::all_of(f.active_set.begin(), f.active_set.end(),
                                            [&](int k) { return minimizes(w, fine.facets()[k].normal); });
            if (inside) ++containing;
        }
        if (containing != 1) return false;
    }
    return true;
}

VertexBlowup vertex_blowup(const Polytope& cone, const FaceLattice& lattice, const LatticeVector& v, const Rat& c) {
    if (lattice.shape() != Shape::cone_with_vertex)
        throw Error(Errc::unsupported_shape, "vertex blow-up needs a cone with a vertex");
    const int n = cone.ambient_dim();
    if (static_cast<int>(v.size()) != n) throw Error(Errc::dimension_mismatch, "functional has wrong dimension");
    if (n < 2) throw Error(Errc::invalid_argument, "vertex blow-up needs dimension >= 2");
    if (c <= 0) throw Error(Errc::invalid_argument, "cut level must be positive");
    for (const auto& r : cone.rays())
        if (pairing(to_rat(r), v) <= 0) throw Error(Errc::invalid_argument, "not interior to dual cone");

    const RatVector& apex = cone.vertices().front();
    const Rat level = c + pairing(apex, v);
    HRep h = cone.hrep();
    h.rows.push_back({to_rat(v), level});
    Polytope cut = Polytope::from_hrep(h);

    std::vector<RatVector> slice;
    for (const auto& r : cone.rays()) {
        const RatVector rq = to_rat(r);
        slice.push_back(add(apex, scale(c / pairing(rq, v), rq)));
    }
    SpanReduction frame = reduce_to_affine_span(slice);
    Polytope section = Polytope::from_vrep({n - 1, frame.coordinates, {}});
    FaceLattice section_lattice(section);

    // Section vertex -> cone ray, by matching coordinates.
    std::vector<int> ray_of(section.vertices().size(), -1);
    for (std::size_t j = 0; j < section.vertices().size(); ++j)
        for (std::size_t i = 0; i < frame.coordinates.size(); ++i)
            if (frame.coordinates[i] == section.vertices()[j]) ray_of[j] = static_cast<int>(i);

    const int apex_id = lattice.face(lattice.apex()).vertex_ids.front();
    std::vector<int> to_cone(section_lattice.size(), -1);
    for (const auto& tau : section_lattice.faces()) {
        std::vector<int> rays;
        for (int j : tau.vertex_ids) rays.push_back(ray_of[j]);
        std::sort(rays.begin(), rays.end());
        to_cone[tau.id] = lattice.closure({apex_id}, rays);
        if (to_cone[tau.id] < 0 || lattice.face(to_cone[tau.id]).dim != tau.dim + 1)
            throw Error(Errc::invariant_violation, "section face does not match a cone face");
    }
    return {std::move(cut), std::move(section), std::move(section_lattice), std::move(frame), std::move(to_cone)};
}

}  // namespace toric
