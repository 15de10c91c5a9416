#pragma once

#include <iosfwd>

#include "gabidulin/field.hpp"

namespace gabidulin {

/// Golden self-check over GF(8) with modulus x^3 + x + 1: the known
/// interpolation module, the Euclidean division step, both minimal bases
/// with their intermediate states, and the full 7-message decode. Prints one
/// line per check (with a diff on mismatch) and returns true iff everything
/// matched bit-exactly.
bool run_selftest(std::ostream& os);

/// Same checks against a caller-provided GF(8) field; a field with a
/// different modulus makes the goldens fail visibly.
bool run_selftest(std::ostream& os, const Field& f8);

}  // namespace gabidulin
