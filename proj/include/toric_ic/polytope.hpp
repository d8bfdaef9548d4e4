#pragma once

// Rational polyhedra in M_R: V/H conversion by exact brute force, face
// lattices, support faces, normal fans and simpliciality predicates.

#include "toric_ic/lattice.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace toric {

/// One inequality <normal, u> >= offset.
struct Halfspace {
    RatVector normal;
    Rat offset;
};

struct HRep {
    int ambient_dim = 0;
    std::vector<Halfspace> rows;
};

struct VRep {
    int ambient_dim = 0;
    std::vector<RatVector> vertices;
    std::vector<LatticeVector> rays;
};

/// Irredundant facet inequality with primitive integral inner normal.
/// source_row is the index of the input H-row it came from (-1 if the
/// polytope was built from vertices).
struct Facet {
    LatticeVector normal;
    Rat offset;
    int source_row = -1;
};

enum class Shape { compact, cone_with_vertex, other };

VRep hrep_to_vrep(const HRep& h);
HRep vrep_to_hrep(const VRep& v);

/// Extreme points of conv(points) + cone(rays), in input order, with
/// duplicates removed. Rays are made primitive and deduplicated.
VRep convex_hull(const VRep& generators);

/// A full-dimensional pointed polyhedron carrying both representations.
class Polytope {
public:
    static Polytope from_vrep(const VRep& v);
    static Polytope from_hrep(const HRep& h);

    int ambient_dim() const { return dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool vertex_on_facet(int vertex, int facet) const { return vertex_inc_[vertex][facet]; }
    bool ray_on_facet(int ray, int facet) const { return ray_inc_[ray][facet]; }

    Shape shape() const;
    bool is_compact() const { return rays_.empty(); }
    /// All vertices integral.
    bool is_lattice() const;
    bool contains(const RatVector& point) const;

    VRep vrep() const;
    HRep hrep() const;

    /// k·P for k > 0.
    Polytope dilate(const Rat& k) const;

private:
    Polytope() = default;
    void build_incidence();

    int dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<LatticeVector> rays_;
    std::vector<Facet> facets_;
    std::vector<std::vector<bool>> vertex_inc_;
    std::vector<std::vector<bool>> ray_inc_;
};

/// Image of P under x ↦ Ux; throws Error(not_unimodular) if |det U| != 1.
Polytope unimodular_image(const Polytope& p, const IntMatrix& u);
std::vector<RatVector> unimodular_image(std::span<const RatVector> points, const IntMatrix& u);

struct Face {
    int id = 0;
    std::vector<int> active_set;  // facets containing the face
    int dim = 0;
    int codim = 0;
    std::vector<int> vertex_ids;
    std::vector<int> ray_ids;
};

/// Faces of a polyhedron. Id 0 is the polyhedron itself; the remaining ids
/// are ordered by (dim, vertex ids, ray ids).
class FaceLattice {
public:
    explicit FaceLattice(const Polytope& p);

    int ambient_dim() const { return ambient_dim_; }
    Shape shape() const { return shape_; }
    std::size_t size() const { return faces_.size(); }
    const Face& face(int id) const { return faces_.at(id); }
    const std::vector<Face>& faces() const { return faces_; }
    static constexpr int top() { return 0; }

    /// a ≤ b as faces.
    bool leq(int a, int b) const;
    /// Faces covering `id` (one dimension up) and covered by it.
    const std::vector<int>& covers_up(int id) const { return up_[id]; }
    const std::vector<int>& covers_down(int id) const { return down_[id]; }
    std::vector<int> faces_of_dim(int d) const;
    /// f_0, f_1, ..., f_n (f_n = 1).
    std::vector<Integer> f_vector() const;

    /// Face with exactly these vertex/ray ids, or -1.
    int find(const std::vector<int>& vertex_ids, const std::vector<int>& ray_ids) const;
    /// Smallest face containing all listed generators, by facet closure.
    int closure(const std::vector<int>& vertex_ids, const std::vector<int>& ray_ids) const;
    /// Unique vertex face of a cone with vertex, else -1.
    int apex() const;

    /// Faces in report order: by dim, then vertex ids, then ray ids.
    std::vector<int> report_order() const;

private:
    int ambient_dim_ = 0;
    Shape shape_ = Shape::compact;
    int facet_count_ = 0;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> up_, down_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
    std::vector<std::vector<bool>> facet_vertices_;
    std::vector<std::vector<bool>> facet_rays_;
};

/// {τ : σ ≤ τ}, with regraded dims d_τ - d_σ.
struct FaceInterval {
    int base = 0;
    std::vector<int> members;  // includes base, ordered by regraded dim
    std::vector<int> rank;     // parallel to members

    int height() const { return rank.empty() ? 0 : rank.back(); }
};

FaceInterval face_interval(const FaceLattice& lattice, int face);

/// Face where <·, v> attains its minimum; throws Error(unbounded) if some
/// ray pairs negatively with v.
int support_face(const Polytope& p, const FaceLattice& lattice, const LatticeVector& v);

struct FanCone {
    int face = 0;  // the face σ this cone is dual to
    int dim = 0;
    std::vector<LatticeVector> rays;  // primitive generators
};

struct Fan {
    int ambient_dim = 0;
    std::vector<FanCone> cones;  // indexed like the face lattice
};

Fan normal_fan(const Polytope& p, const FaceLattice& lattice);

/// Every face lies on exactly codim-many facets.
bool is_prime(const Polytope& p, const FaceLattice& lattice);
bool is_prime(const Polytope& p);

/// Simplicial cone whose primitive generators form a basis of span ∩ Z^n.
bool is_smooth_cone(std::span<const LatticeVector> generators);

/// Expresses points of a lower-dimensional affine span in lattice
/// coordinates of that span (rational when the span misses Z^n).
struct SpanReduction {
    RatVector origin;
    std::vector<LatticeVector> basis;
    std::vector<RatVector> coordinates;  // one per input point
};
SpanReduction reduce_to_affine_span(std::span<const RatVector> points);

}  // namespace toric
