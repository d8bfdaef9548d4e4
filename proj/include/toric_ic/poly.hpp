#pragma once

// Integer polynomials in the Tate class t = [Q(-1)] and two-variable
// Hodge-Deligne polynomials E(u, v), where t corresponds to L = uv.

#include "toric_ic/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toric {

class TatePoly {
public:
    TatePoly() = default;
    TatePoly(long constant);  // NOLINT: implicit from integer literals is intended
    explicit TatePoly(std::vector<Integer> coeffs);

    static TatePoly monomial(int degree, Integer coeff = 1);
    /// (t - 1)^k for k >= 0.
    static TatePoly t_minus_one_pow(int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer coeff(int k) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer evaluate(const Integer& t) const;

    TatePoly& operator+=(const TatePoly& o);
    TatePoly& operator-=(const TatePoly& o);
    friend TatePoly operator+(TatePoly a, const TatePoly& b) { return a += b; }
    friend TatePoly operator-(TatePoly a, const TatePoly& b) { return a -= b; }
    friend TatePoly operator-(const TatePoly& a);
    friend TatePoly operator*(const TatePoly& a, const TatePoly& b);
    friend bool operator==(const TatePoly& a, const TatePoly& b) { return a.coeffs_ == b.coeffs_; }

    /// h_k == h_{d-k} for all k, with degree <= d.
    bool is_palindromic(int d) const;
    /// Coefficients weakly increase up to the middle of [0, d].
    bool is_unimodal(int d) const;
    bool has_nonnegative_coeffs() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// τ_{<α}: keeps exactly the terms t^k with k < α.
TatePoly truncate_below(const TatePoly& h, const Rat& alpha);

/// Finitely supported Σ e_{p,q} u^p v^q over Z.
class EPoly2 {
public:
    EPoly2() = default;
    EPoly2(long constant);  // NOLINT: implicit from integer literals is intended

    static EPoly2 monomial(int p, int q, Integer coeff = 1);
    static EPoly2 L() { return monomial(1, 1); }
    /// Substitutes t = uv.
    static EPoly2 from_tate(const TatePoly& h);

    Integer coeff(int p, int q) const;
    const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer evaluate(const Integer& u, const Integer& v) const;
    /// Symmetric under u <-> v.
    bool is_symmetric() const;

    EPoly2& operator+=(const EPoly2& o);
    EPoly2& operator-=(const EPoly2& o);
    friend EPoly2 operator+(EPoly2 a, const EPoly2& b) { return a += b; }
    friend EPoly2 operator-(EPoly2 a, const EPoly2& b) { return a -= b; }
    friend EPoly2 operator-(const EPoly2& a);
    friend EPoly2 operator*(const EPoly2& a, const EPoly2& b);
    friend bool operator==(const EPoly2& a, const EPoly2& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(int p, int q, const Integer& c);
    std::map<std::pair<int, int>, Integer> terms_;
};

EPoly2 pow(const EPoly2& base, int exponent);

}  // namespace toric
