#pragma once

#include <stdexcept>
#include <string>

namespace gabidulin {

/// Malformed external input: unparseable text, wrong token counts,
/// structurally invalid spec files.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A domain invariant does not hold: reducible modulus, dependent
/// generators, inversion of zero, division by the zero polynomial, ...
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal safety guard tripped: runaway search loop or an enumeration
/// too large to run exactly.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gabidulin
