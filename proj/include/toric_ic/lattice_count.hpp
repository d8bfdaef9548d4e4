#pragma once

// Lattice-point enumeration for polytopes and their faces, Ehrhart
// polynomials and the cone C_Δ ⊂ R^{n+1} over a polytope.

#include "toric_ic/polytope.hpp"

#include <vector>

namespace toric {

/// Lattice points of a face (closed), by bounding-box scan in the face's
/// lattice frame. Empty when the face's span misses Z^n.
std::vector<LatticeVector> lattice_points(const Polytope& p, const FaceLattice& lattice, int face);
/// Lattice points in the relative interior of a face.
std::vector<LatticeVector> interior_lattice_points(const Polytope& p, const FaceLattice& lattice, int face);

/// l(P) and l*(P) for the whole polytope.
Integer count_lattice_points(const Polytope& p);
Integer count_interior_lattice_points(const Polytope& p);

/// Π: number of lattice points on the union of the edges.
Integer skeleton_count(const Polytope& p, const FaceLattice& lattice);

class EhrhartPolynomial {
public:
    explicit EhrhartPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat operator()(const Rat& k) const;

private:
    std::vector<Rat> coeffs_;  // ascending powers of k
};

/// Interpolates L_P from the counts at k = 0..n. Throws Error(non_lattice)
/// for rational vertices and Error(unbounded) for non-compact input.
EhrhartPolynomial ehrhart_polynomial(const Polytope& p);

/// (-1)^n L_P(-k) == l*(kP) for k = 1..kmax, with l* enumerated directly.
bool reciprocity_check(const Polytope& p, int kmax);

struct ConeOverPolytope {
    Polytope cone;             // C_Δ = closure of R≥0·(Δ×{1})
    LatticeVector grading;     // last coordinate
};
ConeOverPolytope cone_over_polytope(const Polytope& p);
/// Lattice points of C_Δ with grading value k.
Integer count_at_grade(const ConeOverPolytope& c, const Integer& k);

struct FaceCount {
    int face = 0;
    Integer points;
    Integer interior;
};

struct CountReport {
    std::vector<FaceCount> faces;  // report order
    Integer skeleton;
    std::vector<Integer> ehrhart_values;  // L(0..n); empty for rational input
    std::vector<Rat> ehrhart_coeffs;
};
CountReport count_report(const Polytope& p, const FaceLattice& lattice);

}  // namespace toric
