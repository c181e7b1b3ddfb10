#pragma once

#include <string>
#include <string_view>

#include "oppositio/defeasible.hpp"
#include "oppositio/opposition.hpp"

namespace oppositio {

// Theory files (.dlt):
//   fact penguin.
//   r1: penguin -> bird.        strict
//   r2: bird => flies.          defeasible
//   r3: penguin ~> ~flies.      defeater
//   sup r3 > r2.
// '#' starts a line comment; whitespace is insignificant.
DefeasibleTheory parse_theory(std::string_view text);

// Structure files (.nop):
//   structure intermed
//   level proved { yes: proved.yes, no: proved.no }
//   judgment extra
//   relation subalternation proved.yes -> unclear.no
//   relation contrariety a <-> b
// Relation endpoints are judgment names or <level>.yes / <level>.no paths.
// Level contradictions are implicit and need not be declared.
OppositionStructure parse_structure(std::string_view text);

// Canonical form: facts first (sorted), rules by id, superiority last.
// parse_theory(print_theory(t)) is structurally equal to t.
std::string print_theory(const DefeasibleTheory& t);

// One statement per line in declaration order; round-trips structurally.
std::string print_structure(const OppositionStructure& s);

}  // namespace oppositio
