#pragma once

#include <string>
#include <string_view>

#include "suptrop/matrix.hpp"

namespace suptrop {

/// Parses the .stm matrix text format: one row per line, entries
/// whitespace-separated using the scalar grammar
///   SCALAR := '-inf' | RATIONAL 'g'?
///   RATIONAL := '-'? DIGITS ('/' DIGITS)? | '-'? DIGITS '.' DIGITS
/// Blank lines and '#' comments are ignored. Throws ParseError with a
/// 1-based line:column position.
Matrix parse_stm(std::string_view text);

Matrix load_stm(const std::string& path);

/// One row per line, entries space-separated; parse_stm(format_stm(a)) == a.
std::string format_stm(const Matrix& a);

/// A vector is a 1×n or n×1 .stm matrix.
Vec parse_stm_vector(std::string_view text);
Vec load_stm_vector(const std::string& path);

}  // namespace suptrop
