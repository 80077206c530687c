#pragma once

// Textual class notation "d; m1, m2, ..." with exponent shorthand "m^r",
// whitespace-insensitive.  "10;6,3^6" parses to (10; 6,3,3,3,3,3,3) and
// "1;" to the bare line class.

#include <string>

#include "nonef/lattice.hpp"

namespace nonef {

// Throws std::invalid_argument with a position hint on malformed input.
DivisorClass parse_class(const std::string& text);

// Plain form, no exponent compression: "10;6,3,3,3,3,3,3".  A class with no
// multiplicities prints as "10;".
std::string format_class(const DivisorClass& a);

// Sorted descending, zeros dropped: the display form used by the CLI.
std::string format_class_normalized(const DivisorClass& a);

}  // namespace nonef
