#include "toric_ic/poly.hpp"

#include "toric_ic/error.hpp"

#include <algorithm>

namespace toric {

namespace {

std::string term_string(const Integer& c, const std::string& mono, bool first) {
    std::string out;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (mono.empty()) return out + mag.str();
    if (mag != 1) out += mag.str();
    return out + mono;
}

}  // namespace

TatePoly::TatePoly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

TatePoly::TatePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TatePoly TatePoly::monomial(int degree, Integer coeff) {
    if (degree < 0) throw Error(Errc::invalid_argument, "negative degree");
    std::vector<Integer> c(degree + 1, Integer(0));
    c[degree] = std::move(coeff);
    return TatePoly(std::move(c));
}

TatePoly TatePoly::t_minus_one_pow(int k) {
    if (k < 0) throw Error(Errc::invalid_argument, "negative exponent");
    std::vector<Integer> c(k + 1);
    for (int i = 0; i <= k; ++i) c[i] = binomial(k, i) * (((k - i) % 2) ? -1 : 1);
    return TatePoly(std::move(c));
}

void TatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer TatePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

Integer TatePoly::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

TatePoly& TatePoly::operator+=(const TatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TatePoly& TatePoly::operator-=(const TatePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TatePoly operator-(const TatePoly& a) {
    TatePoly out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TatePoly operator*(const TatePoly& a, const TatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TatePoly(std::move(c));
}

bool TatePoly::is_palindromic(int d) const {
    if (degree() > d) return false;
    for (int k = 0; k <= d; ++k)
        if (coeff(k) != coeff(d - k)) return false;
    return true;
}

bool TatePoly::is_unimodal(int d) const {
    for (int k = 1; 2 * k <= d; ++k)
        if (coeff(k) < coeff(k - 1)) return false;
    return true;
}

bool TatePoly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

std::string TatePoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        out += term_string(coeffs_[k], mono, first);
        first = false;
    }
    return out;
}

TatePoly truncate_below(const TatePoly& h, const Rat& alpha) {
    std::vector<Integer> c;
    for (int k = 0; k <= h.degree() && Rat(k) < alpha; ++k) c.push_back(h.coeff(k));
    return TatePoly(std::move(c));
}

// ---------------------------------------------------------------------------

EPoly2::EPoly2(long constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

EPoly2 EPoly2::monomial(int p, int q, Integer coeff) {
    EPoly2 e;
    e.add_term(p, q, coeff);
    return e;
}

EPoly2 EPoly2::from_tate(const TatePoly& h) {
    EPoly2 e;
    for (int k = 0; k <= h.degree(); ++k) e.add_term(k, k, h.coeff(k));
    return e;
}

void EPoly2::add_term(int p, int q, const Integer& c) {
    if (c == 0) return;
    auto& slot = terms_[{p, q}];
    slot += c;
    if (slot == 0) terms_.erase({p, q});
}

Integer EPoly2::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer EPoly2::evaluate(const Integer& u, const Integer& v) const {
    Integer acc = 0;
    for (const auto& [pq, c] : terms_) acc += c * boost::multiprecision::pow(u, static_cast<unsigned>(pq.first)) *
               boost::multiprecision::pow(v, static_cast<unsigned>(pq.second));
    return acc;
}

bool EPoly2::is_symmetric() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
        return coeff(kv.first.second, kv.first.first) == kv.second;
    });
}

EPoly2& EPoly2::operator+=(const EPoly2& o) {
    for (const auto& [pq, c] : o.terms_) add_term(pq.first, pq.second, c);
    return *this;
}

EPoly2& EPoly2::operator-=(const EPoly2& o) {
    for (const auto& [pq, c] : o.terms_) add_term(pq.first, pq.second, -c);
    return *this;
}

EPoly2 operator-(const EPoly2& a) {
    EPoly2 out;
    return out -= a;
}

EPoly2 operator*(const EPoly2& a, const EPoly2& b) {
    EPoly2 out;
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_) out.add_term(x.first + y.first, x.second + y.second, cx * cy);
    return out;
}

std::string EPoly2::to_string() const {
    if (terms_.empty()) return "0";
    auto var = [](const char* name, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return name;
        return std::string(name) + "^" + std::to_string(e);
    };
    // Highest total degree first, then by u-degree.
    std::vector<std::pair<std::pair<int, int>, Integer>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [pq, c] : ordered) {
        out += term_string(c, var("u", pq.first) + var("v", pq.second), first);
        first = false;
    }
    return out;
}

EPoly2 pow(const EPoly2& base, int exponent) {
    if (exponent < 0) throw Error(Errc::invalid_argument, "negative exponent");
    EPoly2 out = 1;
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

}  // namespace toric
