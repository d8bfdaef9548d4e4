#include "toric_ic/io.hpp"

#include "toric_ic/error.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Rat rat_at(const std::string& tok, int line) {
    try {
        return parse_rat(tok);
    } catch (const Error&) {
        throw ParseError(line, "bad number '" + tok + "'");
    }
}

Integer int_at(const std::string& tok, int line) {
    try {
        return parse_integer(tok);
    } catch (const Error&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

void require_arity(const std::vector<std::string>& t, std::size_t n, int line) {
    if (t.size() != n)
        throw ParseError(line, "expected " + std::to_string(n) + " entries, got " + std::to_string(t.size()));
}

}  // namespace

const char* kind_name(InputKind kind) {
    switch (kind) {
    case InputKind::vrep: return "vrep";
    case InputKind::hrep: return "hrep";
    case InputKind::support: return "support";
    }
    return "?";
}

ParsedInput parse_input_text(std::string_view text) {
    ParsedInput in;
    bool have_header = false;
    bool in_rays = false;
    int line_no = 0;
    int last_line = 0;
    std::vector<LatticeVector> exponents;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto t = tokens(line);
        if (t.empty()) {
            if (end == text.size()) break;
            continue;
        }
        last_line = line_no;

        if (!have_header) {
            if (t.size() != 2) throw ParseError(line_no, "malformed header; expected 'vrep|hrep|support n'");
            if (t[0] == "vrep") in.kind = InputKind::vrep;
            else if (t[0] == "hrep") in.kind = InputKind::hrep;
            else if (t[0] == "support") in.kind = InputKind::support;
            else throw ParseError(line_no, "malformed header; unknown format '" + t[0] + "'");
            Integer n;
            try {
                n = parse_integer(t[1]);
            } catch (const Error&) {
                throw ParseError(line_no, "malformed header; bad dimension '" + t[1] + "'");
            }
            if (n < 1 || n > 64) throw ParseError(line_no, "malformed header; dimension must be positive");
            in.ambient_dim = n.convert_to<int>();
            in.vrep.ambient_dim = in.hrep.ambient_dim = in.ambient_dim;
            have_header = true;
            continue;
        }

        const std::size_t n = in.ambient_dim;
        switch (in.kind) {
        case InputKind::vrep:
            if (t.size() == 1 && t[0] == "rays") {
                if (in_rays) throw ParseError(line_no, "duplicate 'rays' section");
                in_rays = true;
                break;
            }
            require_arity(t, n, line_no);
            if (in_rays) {
                LatticeVector r;
                for (const auto& x : t) r.push_back(int_at(x, line_no));
                if (is_zero(to_rat(r))) throw ParseError(line_no, "zero row");
                in.vrep.rays.push_back(std::move(r));
            } else {
                RatVector v;
                for (const auto& x : t) v.push_back(rat_at(x, line_no));
                in.vrep.vertices.push_back(std::move(v));
            }
            break;
        case InputKind::hrep: {
            require_arity(t, n + 1, line_no);
            RatVector a;
            for (std::size_t i = 0; i < n; ++i) a.push_back(rat_at(t[i], line_no));
            if (is_zero(a)) throw ParseError(line_no, "zero row");
            in.hrep.rows.push_back({std::move(a), rat_at(t[n], line_no)});
            break;
        }
        case InputKind::support: {
            require_arity(t, n, line_no);
            LatticeVector e;
            for (const auto& x : t) e.push_back(int_at(x, line_no));
            exponents.push_back(std::move(e));
            break;
        }
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(std::max(line_no, 1), "empty body: missing header");
    const bool empty = (in.kind == InputKind::vrep && in.vrep.vertices.empty()) ||
                       (in.kind == InputKind::hrep && in.hrep.rows.empty()) ||
                       (in.kind == InputKind::support && exponents.empty());
    if (empty) throw ParseError(last_line, "empty body");
    if (in.kind == InputKind::support) in.support = make_support(in.ambient_dim, std::move(exponents));
    return in;
}

ParsedInput parse_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::invalid_argument, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_input_text(ss.str());
}

Polytope to_polytope(const ParsedInput& in) {
    switch (in.kind) {
    case InputKind::vrep: return Polytope::from_vrep(in.vrep);
    case InputKind::hrep: return Polytope::from_hrep(in.hrep);
    case InputKind::support: return Polytope::from_vrep(newton_polytope(in.support));
    }
    throw Error(Errc::invalid_argument, "unknown input kind");
}

std::string format_vrep(const VRep& v) {
    std::string out = "vrep " + std::to_string(v.ambient_dim) + "\n";
    for (const auto& x : v.vertices) {
        for (std::size_t i = 0; i < x.size(); ++i) out += (i ? " " : "") + to_string(x[i]);
        out += "\n";
    }
    if (!v.rays.empty()) {
        out += "rays\n";
        for (const auto& r : v.rays) {
            for (std::size_t i = 0; i < r.size(); ++i) out += (i ? " " : "") + to_string(r[i]);
            out += "\n";
        }
    }
    return out;
}

}  // namespace toric
