#pragma once

// Report builders behind the command-line tool, and the tool itself.

#include "toric_ic/io.hpp"
#include "toric_ic/poly.hpp"
#include "toric_ic/polytope.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

using Report = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Report exact(const Integer& x);
/// "p/q", or "p" for integers.
Report exact(const Rat& x);
Report exact(const RatVector& v);
Report exact(const LatticeVector& v);
Report exact(const TatePoly& p);
Report exact(const EPoly2& e);

Report faces_report(const Polytope& p, const FaceLattice& lattice);
Report fan_report(const Polytope& p, const FaceLattice& lattice);
Report stalks_report(const FaceLattice& lattice);
Report ih_report(const FaceLattice& lattice);
Report ehrhart_report(const Polytope& p, const FaceLattice& lattice);
Report hypersurface_report(const Polytope& p, const FaceLattice& lattice, int components);
Report prime_cut_report(const Polytope& p, const FaceLattice& lattice, const Rat& epsilon);
Report blowup_report(const Polytope& cone, const FaceLattice& lattice, const LatticeVector& v, const Rat& c);

/// Every consistency identity that applies to the input. Each entry has
/// "check", "status" (pass/fail/skip) and "detail".
Report check_report(const ParsedInput& in, const Polytope& p, const FaceLattice& lattice);
bool check_passed(const Report& checks);

/// Indented human-readable rendering.
std::string render_text(const Report& r);

/// Entry point of the tool; args excludes the program name.
/// Exit codes: 0 success, 1 input error or bad usage, 2 invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
