#pragma once

// Local intersection-complex stalk polynomials of toric varieties, computed
// purely from the face poset of the defining polyhedron.
//
// For a face σ of Δ the stalk polynomial m_σ(t) = Σ_k m_{σ,2k} t^k records
// the ranks of the IC stalk cohomology along the orbit X_σ (t has weight 2).
// It satisfies m_Δ = 1 and, for σ < Δ,
//
//     m_σ(t) = τ_{<c_σ/2} ( (1 - t) Σ_{σ<τ≤Δ} (t - 1)^{d_τ - d_σ - 1} m_τ(t) ),
//
// which is evaluated on the abstract interval [σ, Δ]; no transverse slice
// polytope is ever constructed.

#include "toric_ic/poly.hpp"
#include "toric_ic/polytope.hpp"

#include <vector>

namespace toric {

struct StalkEntry {
    int face = 0;
    int degree = 0;  // j = 2k
    Integer rank;    // m_{σ,2k}
    int twist = 0;   // -k
};

struct SummandEntry {
    int degree = 0;  // j of M_0^j
    Integer rank;
    int twist = 0;  // -j/2
};

using SummandTable = std::vector<SummandEntry>;

/// m_σ for every face, indexed by face id. Throws Error(unsupported_shape)
/// unless the polyhedron is compact or a cone with vertex, and
/// Error(invariant_violation) if a result breaks positivity/degree bounds.
std::vector<TatePoly> local_ic_polynomials(const FaceLattice& lattice);
TatePoly local_ic_polynomial(const FaceLattice& lattice, int face);

/// Nonzero stalk ranks in report order; odd degrees are never listed.
std::vector<StalkEntry> stalk_table(const FaceLattice& lattice);

/// Σ_{τ≤Q} (t-1)^{d_τ} m_τ(t): coefficient of t^k is dim IH^{2k}(X_Q).
TatePoly global_ih_class(const FaceLattice& lattice);

/// IH Betti numbers b_0, ..., b_{2d} (odd ones zero).
std::vector<Integer> ih_betti_numbers(const FaceLattice& lattice);

struct PuncturedConeClasses {
    TatePoly ih;   // [IH(X')] = (1-t) Σ_{0<σ} (t-1)^{d_σ-1} m_σ
    TatePoly ihc;  // [IH_c(X')] = Σ_{0<σ} (t-1)^{d_σ} m_σ
};
PuncturedConeClasses punctured_cone_classes(const FaceLattice& lattice);

/// IH class of the exceptional divisor of the blow-up at the apex, computed
/// on the cone's lattice: Σ_{0<σ≤Δ} (t-1)^{d_σ-1} m_σ(t).
TatePoly exceptional_divisor_class(const FaceLattice& cone_lattice);

/// g(t) = τ_{<(d+1)/2}((1 - t) h(t)); throws Error(not_palindromic) if h is
/// not a palindrome of degree d with nonnegative coefficients.
TatePoly primitive_parts(const TatePoly& h, int d);

/// Point-supported summands M_0^j of the blow-up pushforward for an
/// n-dimensional cone whose exceptional divisor Y has IH class `figure_ih`.
SummandTable decomposition_summands(const TatePoly& figure_ih, int n);
/// Same, with the class of Y read off the cone's face lattice.
SummandTable decomposition_summands(const FaceLattice& cone_lattice);

}  // namespace toric
