#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "lcd/field_expansion.hpp"
#include "lcd/linear_code.hpp"

namespace lcd {

// GEN1: "n k", then k rows of n characters from {0,1}.
// EXTGEN1: "n k m", then k rows of n integers in 0..2^m-1 under the fixed
// modulus for m.
// Blank lines and anything after '#' are ignored in both. Errors are
// ParseError with the 1-based line number.

enum class CodeFormat { gen1, extgen1 };

LinearCode parse_gen1(std::istream& in);
ExtFieldCode parse_extgen1(std::istream& in);
std::string format_gen1(const LinearCode& c);
std::string format_extgen1(const ExtFieldCode& c);

using AnyCode = std::variant<LinearCode, ExtFieldCode>;

/// Reads either format; without `format` the header width decides.
AnyCode read_code(const std::filesystem::path& path, std::optional<CodeFormat> format = std::nullopt);
LinearCode read_gen1(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lcd
