#pragma once

// Hodge-number bookkeeping for non-degenerate hypersurfaces Z_f ⊂ (C*)^n
// given only through the Newton polytope of f. Non-degeneracy is assumed,
// never checked.

#include "toric_ic/poly.hpp"
#include "toric_ic/polytope.hpp"

#include <map>
#include <optional>
#include <vector>

namespace toric {

/// Exponent set of a Laurent polynomial; sorted, no duplicates.
struct MonomialSupport {
    int ambient_dim = 0;
    std::vector<LatticeVector> exponents;
};

/// Sorts and dedupes; throws Error(invalid_argument) on an empty set and
/// Error(dimension_mismatch) on ragged input.
MonomialSupport make_support(int ambient_dim, std::vector<LatticeVector> exponents);

VRep newton_polytope(const MonomialSupport& s);
/// S ∩ σ.
MonomialSupport face_support(const MonomialSupport& s, const Polytope& newton, const FaceLattice& lattice,
                             int face);

struct HodgeEntry {
    int j = 0;
    int p = 0;
    int q = 0;
    Integer value;
};
using HodgeTable = std::vector<HodgeEntry>;

/// Nonzero h_c^{j,p,q}(Z_f) for j > n-1, highest j first.
HodgeTable high_weight_table(int n);
/// Value of h_c^{j,p,q}(Z_f) where it is forced by the ambient torus:
/// every entry outside H_c^{n-1}, and the part of H_c^{n-1} with p+q > n-1.
/// nullopt for the polytope-dependent range j = n-1, p+q <= n-1.
std::optional<Integer> high_weight_value(int n, int j, int p, int q);

/// p ↦ h_c^{n-1,p,0}(Z_f), p = 0..n-1.
std::map<int, Integer> frontier_hodge(const Polytope& p, const FaceLattice& lattice);
/// |Δ° ∩ M|.
Integer geometric_genus_count(const Polytope& p);

struct EulerViolation {
    int face = 0;
    int sum = 0;
};
/// Faces F < Δ where Σ_{σ ⊇ F} (-1)^{c_σ} ≠ 0. Empty means the relation holds.
std::vector<EulerViolation> euler_relation_check(const FaceLattice& lattice);

/// Classes indexed by face id.
using FaceAssignment = std::vector<EPoly2>;
enum class Direction { open_to_closed, closed_to_open };
FaceAssignment closed_open_transform(const FaceLattice& lattice, const FaceAssignment& a, Direction dir);
/// Σ_σ (-1)^{c_σ} Ā_σ.
EPoly2 alternating_sum(const FaceLattice& lattice, const FaceAssignment& closed);
/// A_Δ == Σ_σ (-1)^{c_σ} Ā_σ with Ā the closure of A.
bool alternating_identity_holds(const FaceLattice& lattice, const FaceAssignment& open);

/// l*(σ) + 1 for an edge σ.
Integer stratum_component_count(const Polytope& p, const FaceLattice& lattice, int edge);

struct FrontierCrosscheck {
    Integer skeleton;         // Π
    Integer vertices;         // dim C^n
    Integer edge_interior;    // dim A = Σ_{d_σ=1} l*(σ)
    Integer p0_chase;         // dim B^n + dim A
    Integer p0_frontier;      // frontier_hodge at p = 0
    bool ok = false;
};
FrontierCrosscheck frontier_crosscheck(const Polytope& p, const FaceLattice& lattice);

/// σ ↦ Σ_{π(τ)=σ} (uv - 1)^{d_τ - d_σ}, indexed by faces of Δ.
std::vector<EPoly2> prime_cut_multipliers(const std::vector<int>& face_map, const FaceLattice& original,
                                          const FaceLattice& cut);

/// E(Z_f; u, v) for a plane curve with Newton polygon Δ:
/// c·uv - l*(Δ)(u + v) + (c - Π), with c = number of components of Z̄_f.
EPoly2 curve_e_polynomial(const Polytope& p, const FaceLattice& lattice, int components = 1);

/// (uv - 1)^d.
EPoly2 torus_class(int d);

}  // namespace toric
