#pragma once

// Exact vectors over M ≅ Z^n / M_Q, the M×N pairing, exact linear algebra
// over Q, and Hermite-normal-form lattice bases of affine spans.

#include "toric_ic/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace toric {

using LatticeVector = std::vector<Integer>;
using RatVector = std::vector<Rat>;
using IntMatrix = std::vector<LatticeVector>;  // row-major
using RatMatrix = std::vector<RatVector>;      // row-major

RatVector to_rat(const LatticeVector& v);
LatticeVector make_lattice_vector(std::initializer_list<long> coords);
RatVector make_rat_vector(std::initializer_list<long> coords);

/// Exact value of <u, v>; throws Error(dimension_mismatch) on length mismatch.
Rat pairing(const RatVector& u, const LatticeVector& v);
Rat dot(const RatVector& a, const RatVector& b);

RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rat& s, const RatVector& a);
bool is_integral(const RatVector& v);
LatticeVector to_lattice(const RatVector& v);  // precondition: is_integral(v)
bool is_zero(const RatVector& v);

/// Clears denominators and divides by the gcd of the entries; the direction
/// is preserved. The zero vector maps to itself.
LatticeVector primitive_vector(const RatVector& v);
LatticeVector primitive_vector(const LatticeVector& v);

int rank(RatMatrix rows);
/// Basis of {x : rows · x = 0} over Q, one vector per free column.
std::vector<RatVector> nullspace(const RatMatrix& rows, int ncols);
/// Some solution x of rows · x = rhs, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& rows, const RatVector& rhs, int ncols);
Integer determinant(const IntMatrix& m);

/// A·U = H with U unimodular and H in column echelon form: for j < rank,
/// column j has its leading entry in row pivot_rows[j], and every column
/// j >= rank is zero. The trailing columns of U span ker(A) ∩ Z^n.
struct ColumnHermite {
    IntMatrix h;
    IntMatrix u;
    int rank = 0;
    std::vector<int> pivot_rows;
};
ColumnHermite column_hermite(const IntMatrix& a, int ncols);

/// Lattice basis of {x ∈ Z^n : a·x = 0}.
std::vector<LatticeVector> integer_kernel(const IntMatrix& a, int ncols);

/// Lattice basis of span_Q(directions) ∩ Z^n (the saturation).
std::vector<LatticeVector> saturated_basis(std::span<const RatVector> directions, int n);

/// base + Z-span(basis) is exactly the set of lattice points of an affine span.
struct AffineLatticeFrame {
    LatticeVector base;
    std::vector<LatticeVector> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    int ambient_dim() const { return static_cast<int>(base.size()); }
    LatticeVector point(const std::vector<Integer>& coeffs) const;
    /// Coordinates c with point = base + Σ c_i basis_i (rational in general);
    /// nullopt when the point is off the span.
    std::optional<RatVector> coordinates(const RatVector& point) const;
};

/// Throws Error(non_integral_span) when the affine span has no lattice point.
AffineLatticeFrame affine_frame(std::span<const RatVector> points);

bool is_unimodular(const IntMatrix& u);
RatVector apply(const IntMatrix& u, const RatVector& x);
LatticeVector apply(const IntMatrix& u, const LatticeVector& x);
IntMatrix identity_matrix(int n);

}  // namespace toric
