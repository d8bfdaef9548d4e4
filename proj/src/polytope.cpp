#include "toric_ic/polytope.hpp"

#include "toric_ic/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace toric {

namespace {

// Calls fn on every k-subset of {0, ..., n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_length(const RatVector& v, int n, const char* what) {
    if (static_cast<int>(v.size()) != n)
        throw Error(Errc::dimension_mismatch,
                    std::string(what) + " has length " + std::to_string(v.size()) +
                        ", expected " + std::to_string(n));
}

int affine_rank(const std::vector<RatVector>& points, const std::vector<LatticeVector>& rays) {
    if (points.empty()) return -1;
    RatMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points[0]));
    for (const auto& r : rays) dirs.push_back(to_rat(r));
    return rank(dirs);
}

std::vector<RatVector> dedupe_points(const std::vector<RatVector>& points) {
    std::vector<RatVector> out;
    std::set<RatVector> seen;
    for (const auto& p : points)
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

std::vector<LatticeVector> dedupe_rays(const std::vector<LatticeVector>& rays) {
    std::vector<LatticeVector> out;
    std::set<LatticeVector> seen;
    for (const auto& r : rays) {
        auto p = primitive_vector(r);
        if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; })) continue;
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

struct RawFacet {
    LatticeVector normal;
    Rat offset;
};

// Supporting hyperplanes through n affinely independent generators (at least
// one point). Assumes the generators span R^n affinely.
std::vector<RawFacet> facets_of_generators(int n, const std::vector<RatVector>& points,
                                           const std::vector<LatticeVector>& rays) {
    std::vector<RawFacet> out;
    if (n == 0) return out;
    std::set<std::pair<LatticeVector, Rat>> seen;
    const int np = static_cast<int>(points.size());
    const int total = np + static_cast<int>(rays.size());
    std::vector<RatVector> ray_q;
    for (const auto& r : rays) ray_q.push_back(to_rat(r));

    for_each_subset(total, n, [&](const std::vector<int>& pick) {
        if (pick.front() >= np) return;
        const RatVector& base = points[pick.front()];
        RatMatrix dirs;
        for (std::size_t i = 1; i < pick.size(); ++i) {
            const int g = pick[i];
            dirs.push_back(g < np ? sub(points[g], base) : ray_q[g - np]);
        }
        if (!dirs.empty() && rank(dirs) != n - 1) return;
        auto ns = nullspace(dirs, n);
        if (ns.size() != 1) return;
        LatticeVector a = primitive_vector(ns.front());
        const Rat off = pairing(base, a);
        int pos = 0, neg = 0;
        for (const auto& p : points) {
            const Rat s = pairing(p, a) - off;
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
        }
        for (const auto& r : rays) {
            Integer s = 0;
            for (int i = 0; i < n; ++i) s += r[i] * a[i];
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
        }
        if (pos > 0 && neg > 0) return;
        if (pos == 0 && neg == 0) return;
        Rat b = off;
        if (neg > 0) {
            for (auto& x : a) x = -x;
            b = -b;
        }
        if (seen.insert({a, b}).second) out.push_back({std::move(a), std::move(b)});
    });
    return out;
}

Integer int_pairing(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Hull of full-dimensional generators; returns indices of extreme points
// and extreme rays.
std::pair<std::vector<int>, std::vector<int>> extreme_full_dim(int n, const std::vector<RatVector>& points,
                                                               const std::vector<LatticeVector>& rays) {
    const auto facets = facets_of_generators(n, points, rays);
    RatMatrix all_normals;
    for (const auto& f : facets) all_normals.push_back(to_rat(f.normal));
    if (n > 0 && rank(all_normals) < n) throw Error(Errc::not_pointed, "polyhedron contains a line");

    std::vector<int> pts, rys;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatMatrix tight;
        for (const auto& f : facets)
            if (pairing(points[i], f.normal) == f.offset) tight.push_back(to_rat(f.normal));
        if (rank(tight) == n) pts.push_back(static_cast<int>(i));
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
        RatMatrix tight;
        for (const auto& f : facets)
            if (int_pairing(rays[j], f.normal) == 0) tight.push_back(to_rat(f.normal));
        if (rank(tight) == n - 1) rys.push_back(static_cast<int>(j));
    }
    return {pts, rys};
}

}  // namespace

VRep convex_hull(const VRep& generators) {
    const int n = generators.ambient_dim;
    for (const auto& p : generators.vertices) check_length(p, n, "vertex");
    for (const auto& r : generators.rays)
        if (static_cast<int>(r.size()) != n) throw Error(Errc::dimension_mismatch, "ray has wrong length");
    auto points = dedupe_points(generators.vertices);
    auto rays = dedupe_rays(generators.rays);
    if (points.empty()) throw Error(Errc::empty_polyhedron, "no vertices given");

    const int d = affine_rank(points, rays);
    std::vector<int> keep_pts, keep_rays;
    if (d == n) {
        std::tie(keep_pts, keep_rays) = extreme_full_dim(n, points, rays);
    } else {
        // Work in coordinates of the affine span.
        std::vector<RatVector> dirs;
        for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points[0]));
        for (const auto& r : rays) dirs.push_back(to_rat(r));
        const auto basis = saturated_basis(dirs, n);
        RatMatrix cols(n, RatVector(basis.size()));
        for (int i = 0; i < n; ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) cols[i][j] = basis[j][i];
        std::vector<RatVector> red_pts;
        for (const auto& p : points) red_pts.push_back(*solve(cols, sub(p, points[0]), d));
        std::vector<LatticeVector> red_rays;
        for (const auto& r : rays) red_rays.push_back(primitive_vector(*solve(cols, to_rat(r), d)));
        std::tie(keep_pts, keep_rays) = extreme_full_dim(d, red_pts, red_rays);
    }
    VRep out{n, {}, {}};
    for (int i : keep_pts) out.vertices.push_back(points[i]);
    for (int j : keep_rays) out.rays.push_back(rays[j]);
    return out;
}

VRep hrep_to_vrep(const HRep& h) {
    const int n = h.ambient_dim;
    if (n < 1) throw Error(Errc::invalid_argument, "H-representation needs ambient dimension >= 1");
    std::vector<Halfspace> rows;
    for (const auto& row : h.rows) {
        check_length(row.normal, n, "inequality normal");
        if (is_zero(row.normal)) {
            if (row.offset > 0) throw Error(Errc::empty_polyhedron, "infeasible row 0 >= " + to_string(row.offset));
            continue;
        }
        rows.push_back(row);
    }
    RatMatrix a;
    for (const auto& r : rows) a.push_back(r.normal);
    const int m = static_cast<int>(rows.size());

    auto feasible_point = [&](const std::vector<int>& pick, const RatMatrix& extra) -> std::optional<RatVector> {
        RatMatrix sys;
        RatVector rhs;
        for (int i : pick) { sys.push_back(rows[i].normal); rhs.push_back(rows[i].offset); }
        for (const auto& e : extra) { sys.push_back(e); rhs.push_back(0); }
        if (rank(sys) != n) return std::nullopt;
        auto x = solve(sys, rhs, n);
        if (!x) return std::nullopt;
        for (const auto& r : rows)
            if (dot(r.normal, *x) < r.offset) return std::nullopt;
        return x;
    };

    const int r = rank(a);
    if (r < n) {
        // Restrict to a complement of the lineality space to decide feasibility.
        const auto lineality = nullspace(a, n);
        bool feasible = false;
        for_each_subset(m, r, [&](const std::vector<int>& pick) {
            if (!feasible && feasible_point(pick, lineality)) feasible = true;
        });
        if (r == 0) feasible = true;
        if (feasible) throw Error(Errc::not_pointed, "polyhedron contains a line");
        throw Error(Errc::empty_polyhedron, "inequalities are infeasible");
    }

    VRep out{n, {}, {}};
    std::set<RatVector> seen;
    for_each_subset(m, n, [&](const std::vector<int>& pick) {
        if (auto x = feasible_point(pick, {}); x && seen.insert(*x).second) out.vertices.push_back(*x);
    });
    if (out.vertices.empty()) throw Error(Errc::empty_polyhedron, "inequalities are infeasible");

    std::set<LatticeVector> seen_rays;
    for_each_subset(m, n - 1, [&](const std::vector<int>& pick) {
        RatMatrix sys;
        for (int i : pick) sys.push_back(rows[i].normal);
        if (!sys.empty() && rank(sys) != n - 1) return;
        auto ns = nullspace(sys, n);
        if (ns.size() != 1) return;
        for (int sign : {1, -1}) {
            RatVector d = scale(Rat(sign), ns.front());
            bool ok = true;
            for (const auto& row : rows)
                if (dot(row.normal, d) < 0) { ok = false; break; }
            if (!ok) continue;
            auto p = primitive_vector(d);
            if (seen_rays.insert(p).second) out.rays.push_back(std::move(p));
        }
    });
    return out;
}

HRep vrep_to_hrep(const VRep& v) { return Polytope::from_vrep(v).hrep(); }

Polytope Polytope::from_vrep(const VRep& v) {
    VRep hull = convex_hull(v);
    const int n = hull.ambient_dim;
    if (affine_rank(hull.vertices, hull.rays) != n)
        throw Error(Errc::not_full_dimensional, "not full-dimensional; reduce to affine span first");
    Polytope p;
    p.dim_ = n;
    p.vertices_ = std::move(hull.vertices);
    p.rays_ = std::move(hull.rays);
    for (auto& f : facets_of_generators(n, p.vertices_, p.rays_))
        p.facets_.push_back({std::move(f.normal), std::move(f.offset), -1});
    p.build_incidence();
    return p;
}

// hrep_to_vrep already yields extreme generators, and every facet is one of
// the input rows, so no second hull pass is needed.
Polytope Polytope::from_hrep(const HRep& h) {
    VRep v = hrep_to_vrep(h);
    const int n = h.ambient_dim;
    if (affine_rank(v.vertices, v.rays) != n)
        throw Error(Errc::not_full_dimensional, "inequalities cut out a lower-dimensional set");
    Polytope p;
    p.dim_ = n;
    p.vertices_ = std::move(v.vertices);
    p.rays_ = std::move(v.rays);
    std::set<std::pair<LatticeVector, Rat>> seen;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        const auto& row = h.rows[i];
        if (is_zero(row.normal)) continue;
        LatticeVector a = primitive_vector(row.normal);
        // row.normal = λ·a with λ > 0.
        Rat lambda;
        for (int k = 0; k < n; ++k)
            if (a[k] != 0) { lambda = row.normal[k] / Rat(a[k]); break; }
        const Rat b = row.offset / lambda;
        if (seen.count({a, b})) continue;
        RatMatrix dirs;
        const RatVector* base = nullptr;
        for (const auto& x : p.vertices_) {
            if (pairing(x, a) != b) continue;
            if (!base) base = &x;
            else dirs.push_back(sub(x, *base));
        }
        if (!base) continue;
        for (const auto& r : p.rays_)
            if (int_pairing(r, a) == 0) dirs.push_back(to_rat(r));
        if (n > 1 && rank(dirs) != n - 1) continue;
        seen.insert({a, b});
        p.facets_.push_back({std::move(a), b, static_cast<int>(i)});
    }
    p.build_incidence();
    return p;
}

void Polytope::build_incidence() {
    vertex_inc_.assign(vertices_.size(), std::vector<bool>(facets_.size(), false));
    ray_inc_.assign(rays_.size(), std::vector<bool>(facets_.size(), false));
    for (std::size_t f = 0; f < facets_.size(); ++f) {
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            vertex_inc_[v][f] = pairing(vertices_[v], facets_[f].normal) == facets_[f].offset;
        for (std::size_t r = 0; r < rays_.size(); ++r)
            ray_inc_[r][f] = int_pairing(rays_[r], facets_[f].normal) == 0;
    }
}

Shape Polytope::shape() const {
    if (rays_.empty()) return Shape::compact;
    if (vertices_.size() == 1) return Shape::cone_with_vertex;
    return Shape::other;
}

bool Polytope::is_lattice() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) { return is_integral(v); });
}

bool Polytope::contains(const RatVector& point) const {
    check_length(point, dim_, "point");
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return pairing(point, f.normal) >= f.offset; });
}

VRep Polytope::vrep() const { return {dim_, vertices_, rays_}; }

HRep Polytope::hrep() const {
    HRep h{dim_, {}};
    for (const auto& f : facets_) h.rows.push_back({to_rat(f.normal), f.offset});
    return h;
}

Polytope Polytope::dilate(const Rat& k) const {
    if (k <= 0) throw Error(Errc::invalid_argument, "dilation factor must be positive");
    Polytope p = *this;
    for (auto& v : p.vertices_) v = scale(k, v);
    for (auto& f : p.facets_) f.offset *= k;
    return p;
}

std::vector<RatVector> unimodular_image(std::span<const RatVector> points, const IntMatrix& u) {
    if (!is_unimodular(u)) throw Error(Errc::not_unimodular, "matrix is not unimodular");
    std::vector<RatVector> out;
    for (const auto& p : points) out.push_back(apply(u, p));
    return out;
}

Polytope unimodular_image(const Polytope& p, const IntMatrix& u) {
    if (static_cast<int>(u.size()) != p.ambient_dim())
        throw Error(Errc::dimension_mismatch, "matrix size does not match ambient dimension");
    VRep img{p.ambient_dim(), unimodular_image(p.vertices(), u), {}};
    for (const auto& r : p.rays()) img.rays.push_back(apply(u, r));
    return Polytope::from_vrep(img);
}

// ---------------------------------------------------------------------------
// Face lattice

FaceLattice::FaceLattice(const Polytope& p)
    : ambient_dim_(p.ambient_dim()), shape_(p.shape()), facet_count_(static_cast<int>(p.facets().size())) {
    const int nv = static_cast<int>(p.vertices().size());
    const int nr = static_cast<int>(p.rays().size());
    facet_vertices_.assign(facet_count_, std::vector<bool>(nv));
    facet_rays_.assign(facet_count_, std::vector<bool>(nr));
    for (int f = 0; f < facet_count_; ++f) {
        for (int v = 0; v < nv; ++v) facet_vertices_[f][v] = p.vertex_on_facet(v, f);
        for (int r = 0; r < nr; ++r) facet_rays_[f][r] = p.ray_on_facet(r, f);
    }

    struct Raw {
        std::vector<int> active, verts, rays;
    };
    auto close = [&](const std::vector<int>& verts, const std::vector<int>& rays) {
        Raw out;
        for (int f = 0; f < facet_count_; ++f) {
            bool all = true;
            for (int v : verts) all = all && facet_vertices_[f][v];
            for (int r : rays) all = all && facet_rays_[f][r];
            if (all) out.active.push_back(f);
        }
        for (int v = 0; v < nv; ++v) {
            bool all = true;
            for (int f : out.active) all = all && facet_vertices_[f][v];
            if (all) out.verts.push_back(v);
        }
        for (int r = 0; r < nr; ++r) {
            bool all = true;
            for (int f : out.active) all = all && facet_rays_[f][r];
            if (all) out.rays.push_back(r);
        }
        return out;
    };

    std::vector<int> all_v(nv), all_r(nr);
    std::iota(all_v.begin(), all_v.end(), 0);
    std::iota(all_r.begin(), all_r.end(), 0);

    std::vector<Raw> raw{close(all_v, all_r)};
    std::set<std::vector<int>> seen{raw.front().active};
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Raw cur = raw[i];
        for (int f = 0; f < facet_count_; ++f) {
            if (std::binary_search(cur.active.begin(), cur.active.end(), f)) continue;
            std::vector<int> vs, rs;
            for (int v : cur.verts)
                if (facet_vertices_[f][v]) vs.push_back(v);
            if (vs.empty()) continue;
            for (int r : cur.rays)
                if (facet_rays_[f][r]) rs.push_back(r);
            Raw next = close(vs, rs);
            if (seen.insert(next.active).second) raw.push_back(std::move(next));
        }
    }

    std::vector<Face> faces;
    for (auto& r : raw) {
        Face face;
        RatMatrix normals;
        for (int f : r.active) normals.push_back(to_rat(p.facets()[f].normal));
        face.dim = ambient_dim_ - rank(normals);
        face.codim = ambient_dim_ - face.dim;
        face.active_set = std::move(r.active);
        face.vertex_ids = std::move(r.verts);
        face.ray_ids = std::move(r.rays);
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin() + 1, faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.dim, a.vertex_ids, a.ray_ids) < std::tie(b.dim, b.vertex_ids, b.ray_ids);
    });
    for (std::size_t i = 0; i < faces.size(); ++i) {
        faces[i].id = static_cast<int>(i);
        index_[{faces[i].vertex_ids, faces[i].ray_ids}] = faces[i].id;
    }
    faces_ = std::move(faces);

    up_.assign(faces_.size(), {});
    down_.assign(faces_.size(), {});
    for (std::size_t a = 0; a < faces_.size(); ++a)
        for (std::size_t b = 0; b < faces_.size(); ++b)
            if (faces_[b].dim == faces_[a].dim + 1 && leq(static_cast<int>(a), static_cast<int>(b))) {
                up_[a].push_back(static_cast<int>(b));
                down_[b].push_back(static_cast<int>(a));
            }
}

bool FaceLattice::leq(int a, int b) const {
    const Face& fa = faces_.at(a);
    const Face& fb = faces_.at(b);
    return std::includes(fb.vertex_ids.begin(), fb.vertex_ids.end(), fa.vertex_ids.begin(), fa.vertex_ids.end()) &&
           std::includes(fb.ray_ids.begin(), fb.ray_ids.end(), fa.ray_ids.begin(), fa.ray_ids.end());
}

std::vector<int> FaceLattice::faces_of_dim(int d) const {
    std::vector<int> out;
    for (const auto& f : faces_)
        if (f.dim == d) out.push_back(f.id);
    return out;
}

std::vector<Integer> FaceLattice::f_vector() const {
    std::vector<Integer> f(ambient_dim_ + 1, Integer(0));
    for (const auto& face : faces_) f[face.dim] += 1;
    return f;
}

int FaceLattice::find(const std::vector<int>& vertex_ids, const std::vector<int>& ray_ids) const {
    auto it = index_.find({vertex_ids, ray_ids});
    return it == index_.end() ? -1 : it->second;
}

int FaceLattice::closure(const std::vector<int>& vertex_ids, const std::vector<int>& ray_ids) const {
    std::vector<int> active;
    for (int f = 0; f < facet_count_; ++f) {
        bool all = true;
        for (int v : vertex_ids) all = all && facet_vertices_[f][v];
        for (int r : ray_ids) all = all && facet_rays_[f][r];
        if (all) active.push_back(f);
    }
    for (const auto& face : faces_)
        if (face.active_set == active) return face.id;
    throw Error(Errc::not_a_face, "generators do not close to a nonempty face");
}

int FaceLattice::apex() const {
    if (shape_ != Shape::cone_with_vertex) return -1;
    const auto v = faces_of_dim(0);
    return v.size() == 1 ? v.front() : -1;
}

std::vector<int> FaceLattice::report_order() const {
    std::vector<int> order(faces_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Face& x = faces_[a];
        const Face& y = faces_[b];
        return std::tie(x.dim, x.vertex_ids, x.ray_ids) < std::tie(y.dim, y.vertex_ids, y.ray_ids);
    });
    return order;
}

FaceInterval face_interval(const FaceLattice& lattice, int face) {
    if (face < 0 || face >= static_cast<int>(lattice.size()))
        throw Error(Errc::not_a_face, "face id " + std::to_string(face) + " is not in the lattice");
    FaceInterval iv;
    iv.base = face;
    const int d0 = lattice.face(face).dim;
    for (const auto& f : lattice.faces())
        if (lattice.leq(face, f.id)) iv.members.push_back(f.id);
    std::stable_sort(iv.members.begin(), iv.members.end(),
                     [&](int a, int b) { return lattice.face(a).dim < lattice.face(b).dim; });
    for (int m : iv.members) iv.rank.push_back(lattice.face(m).dim - d0);
    return iv;
}

int support_face(const Polytope& p, const FaceLattice& lattice, const LatticeVector& v) {
    if (static_cast<int>(v.size()) != p.ambient_dim())
        throw Error(Errc::dimension_mismatch, "functional has wrong length");
    std::vector<int> rays;
    for (std::size_t r = 0; r < p.rays().size(); ++r) {
        const Integer s = int_pairing(p.rays()[r], v);
        if (s < 0) throw Error(Errc::unbounded, "unbounded direction: functional decreases along a ray");
        if (s == 0) rays.push_back(static_cast<int>(r));
    }
    std::optional<Rat> best;
    std::vector<int> verts;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const Rat s = pairing(p.vertices()[i], v);
        if (!best || s < *best) { best = s; verts.clear(); }
        if (s == *best) verts.push_back(static_cast<int>(i));
    }
    return lattice.closure(verts, rays);
}

Fan normal_fan(const Polytope& p, const FaceLattice& lattice) {
    Fan fan;
    fan.ambient_dim = p.ambient_dim();
    for (const auto& face : lattice.faces()) {
        FanCone cone;
        cone.face = face.id;
        for (int f : face.active_set) cone.rays.push_back(p.facets()[f].normal);
        cone.dim = face.codim;
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

bool is_prime(const Polytope&, const FaceLattice& lattice) {
    return std::all_of(lattice.faces().begin(), lattice.faces().end(), [](const Face& f) {
        return static_cast<int>(f.active_set.size()) == f.codim;
    });
}

bool is_prime(const Polytope& p) { return is_prime(p, FaceLattice(p)); }

bool is_smooth_cone(std::span<const LatticeVector> generators) {
    if (generators.empty()) return true;
    const int n = static_cast<int>(generators.front().size());
    std::vector<RatVector> gens;
    for (const auto& g : generators) gens.push_back(to_rat(g));
    const int k = static_cast<int>(gens.size());
    if (rank(RatMatrix(gens.begin(), gens.end())) != k) return false;
    const auto basis = saturated_basis(gens, n);
    RatMatrix cols(n, RatVector(basis.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) cols[i][j] = basis[j][i];
    IntMatrix coords;
    for (const auto& g : gens) coords.push_back(to_lattice(*solve(cols, g, k)));
    const Integer d = determinant(coords);
    return d == 1 || d == -1;
}

SpanReduction reduce_to_affine_span(std::span<const RatVector> points) {
    if (points.empty()) throw Error(Errc::invalid_argument, "no points to reduce");
    const int n = static_cast<int>(points.front().size());
    SpanReduction out;
    try {
        auto frame = affine_frame(points);
        out.origin = to_rat(frame.base);
        out.basis = std::move(frame.basis);
    } catch (const Error& e) {
        if (e.code() != Errc::non_integral_span) throw;
        std::vector<RatVector> dirs;
        for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(sub(points[i], points[0]));
        out.origin = points.front();
        out.basis = saturated_basis(dirs, n);
    }
    RatMatrix cols(n, RatVector(out.basis.size()));
    for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < out.basis.size(); ++j) cols[i][j] = out.basis[j][i];
    for (const auto& p : points)
        out.coordinates.push_back(*solve(cols, sub(p, out.origin), static_cast<int>(out.basis.size())));
    return out;
}

}  // namespace toric
