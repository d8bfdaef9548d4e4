#pragma once

// Prime cutting: shave every non-simple face σ of a polytope with the shifted
// hyperplane <u, v_σ> = a_σ + ε_σ, and record the limit face map π back to
// the original polytope. Also the single-vertex blow-up of a cone.

#include "toric_ic/polytope.hpp"

#include <vector>

namespace toric {

struct CutFunctional {
    int face = 0;            // σ in the original lattice
    LatticeVector normal;    // v_σ: sum of primitive inner normals of facets ⊇ σ
    Rat base_value;          // a_σ = min <Δ, v_σ>
    int order = 0;           // ε_σ = ε^order, order = d_σ + 1
};

struct CutSpec {
    std::vector<CutFunctional> cuts;  // report order of σ
};

/// One functional per face lying on more facets than its codimension.
CutSpec choose_cut_functionals(const Polytope& p, const FaceLattice& lattice);

struct CutResult {
    Polytope cut;
    FaceLattice lattice;
    std::vector<int> face_map;  // face of Δ' ↦ face of Δ
    Rat epsilon;
    CutSpec spec;
    int rounds = 0;             // ε halvings tried, 0 for an already prime input
};

/// Δ' = Δ ∩ ⋂ {<u, v_σ> >= a_σ + ε^order}. Starting from `epsilon`, halves
/// until Δ' at ε and ε/2 agree combinatorially (same facet-labelled faces,
/// same π), Δ' is prime and every row is a facet. Throws
/// Error(epsilon_unstable) after max_rounds.
CutResult prime_cut(const Polytope& p, const FaceLattice& lattice, const CutSpec& spec, const Rat& epsilon,
                    int max_rounds = 40);

/// Every maximal cone of the fine normal fan lies in exactly one maximal
/// cone of the coarse one.
bool fan_refines(const Polytope& fine, const FaceLattice& fine_lattice, const Polytope& coarse,
                 const FaceLattice& coarse_lattice);

/// Data of the blow-up of a cone at its apex.
struct VertexBlowup {
    Polytope cut;                    // Δ' = Δ ∩ {<u, v> >= c}
    Polytope section;                // Δ'' = Δ ∩ {<u, v> = c}, in span coordinates
    FaceLattice section_lattice;
    SpanReduction frame;             // section coordinates of the slice points
    std::vector<int> section_to_cone;  // face of Δ'' ↦ face of Δ (one dim up)
};

/// Throws Error(invalid_argument) if v is not positive on every ray
/// ("not interior to dual cone") or c <= 0.
VertexBlowup vertex_blowup(const Polytope& cone, const FaceLattice& lattice, const LatticeVector& v, const Rat& c);

}  // namespace toric
