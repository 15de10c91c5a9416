#pragma once

#include <filesystem>
#include <string>

#include "gabidulin/code.hpp"

namespace gabidulin {

/// Parses a code spec from its JSON form:
///   {"q": 2, "m": 3, "modulus": [1,1,0,1], "n": 3, "k": 2,
///    "generators": [1, 2, 4]}
/// modulus is optional (ascending coefficients, length m+1, monic); without
/// it the field's default modulus is used. generators are element codes.
/// Structural problems raise ParseError, violated domain invariants raise
/// InvariantError.
CodeSpec parse_code_spec(const std::string& json_text);

CodeSpec load_code_spec(const std::filesystem::path& path);

std::string code_spec_to_json(const CodeSpec& spec);

}  // namespace gabidulin
