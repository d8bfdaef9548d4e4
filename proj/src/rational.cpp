#include "toric_ic/rational.hpp"

#include "toric_ic/error.hpp"

#include <cctype>

namespace toric {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse: return "parse error";
    case Errc::empty_polyhedron: return "empty polyhedron";
    case Errc::not_pointed: return "not pointed";
    case Errc::not_full_dimensional: return "not full-dimensional";
    case Errc::unsupported_shape: return "unsupported shape";
    case Errc::not_unimodular: return "not unimodular";
    case Errc::non_integral_span: return "non-integral span";
    case Errc::non_lattice: return "non-lattice polytope";
    case Errc::unbounded: return "unbounded";
    case Errc::not_a_face: return "not a face";
    case Errc::not_palindromic: return "not palindromic";
    case Errc::epsilon_unstable: return "epsilon unstable";
    case Errc::invariant_violation: return "invariant violation";
    }
    return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer integer_from_literal(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text))
        throw Error(Errc::parse, "not an integer: '" + std::string(text) + "'");
    return integer_from_literal(text);
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw Error(Errc::parse, "not a rational: '" + std::string(text) + "'");
        return Rat(integer_from_literal(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
        throw Error(Errc::parse, "not a rational: '" + std::string(text) + "'");
    Integer d = integer_from_literal(den);
    if (d == 0) throw Error(Errc::parse, "zero denominator: '" + std::string(text) + "'");
    return Rat(integer_from_literal(num), d);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rat& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer floor(const Rat& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Integer ceil(const Rat& value) { return -floor(-value); }

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace toric
