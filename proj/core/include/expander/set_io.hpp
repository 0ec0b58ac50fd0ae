#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "expander/fpset.hpp"

namespace expander {

/// Reads a set file: either a JSON array of integers or one decimal integer
/// per line (blank lines and '#' comments ignored). Values are reduced mod p;
/// an element seen twice after reduction is dropped and reported in `warnings`.
/// Throws ParseError.
FpSet parse_set(const FieldPtr& F, std::string_view text, std::vector<std::string>* warnings = nullptr);
FpSet load_set_file(const FieldPtr& F, const std::string& path, std::vector<std::string>* warnings = nullptr);

/// One element per line, ascending.
std::string format_set(const FpSet& s);

}  // namespace expander
