#pragma once

// Text forms accepted for group specs.
//
//   spec       := composite | primary | json
//   composite  := "Z(" int ")" ( "+" "Z(" int ")" )*        e.g. Z(6)+Z(12)
//   primary    := "p=" int ":" term ( "+" term )*            e.g. p=2: 2^1+4^1
//   term       := int [ "^" int ]                            order p^m, multiplicity
//   json       := {"p": int, "parts": [[m, λ], ...]}   or   {"moduli": [int, ...]}
//
// Whitespace is allowed between tokens. A leading '{' selects the JSON form.
// In the primary form each term's base must be a power of p; a bare base
// means multiplicity 1.

#include <string_view>
#include <variant>

#include "cqi/group.hpp"

namespace cqi {

using GroupSpec = std::variant<PrimePowerSignature, CompositeGroupSpec>;

// Throws ParseError (with byte offset) on malformed text; semantic errors
// such as a non-prime p surface as Error with the matching code.
GroupSpec parse_group_spec(std::string_view text);

std::string spec_to_string(const GroupSpec& spec);

}  // namespace cqi
