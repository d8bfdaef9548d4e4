#pragma once

// Line-oriented input files. '#' starts a comment; blank lines are ignored.
//
//   vrep n      one vertex per line (n rationals), optional "rays" section
//               with one integer ray per line
//   hrep n      rows "a_1 ... a_n b" meaning Σ a_i x_i >= b
//   support n   one exponent per line (n integers)

#include "toric_ic/hypersurface.hpp"
#include "toric_ic/polytope.hpp"

#include <string>
#include <string_view>

namespace toric {

enum class InputKind { vrep, hrep, support };

struct ParsedInput {
    InputKind kind = InputKind::vrep;
    int ambient_dim = 0;
    VRep vrep;
    HRep hrep;
    MonomialSupport support;
};

const char* kind_name(InputKind kind);

/// Throws ParseError carrying the offending line number.
ParsedInput parse_input_text(std::string_view text);
/// Reads the file; a missing file is Error(invalid_argument).
ParsedInput parse_input(const std::string& path);

/// The polytope described by the input; a support becomes its Newton polytope.
Polytope to_polytope(const ParsedInput& in);

/// Inverse of parse_input_text for a polytope (vertices and rays).
std::string format_vrep(const VRep& v);

}  // namespace toric
