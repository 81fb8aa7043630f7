#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace idbg {

// Field escaping shared by all the line-oriented file formats. Tab-separated
// formats escape backslash, tab and newline; space-separated formats (the
// envelope wire format) additionally escape ' ' as \s.

std::string escape_field(std::string_view raw);
std::string escape_spaced_field(std::string_view raw);

/// Decodes either flavor (\\ \t \n \s). Any other escape sequence or a
/// trailing lone backslash is a ParseError; `line_no` is used for positions.
std::string unescape_field(std::string_view field, std::size_t line_no = 0);

/// Splits on `sep` without touching escapes. Empty fields are preserved.
std::vector<std::string_view> split_fields(std::string_view line, char sep);

/// Splits on '\n'. A single trailing newline does not produce an empty tail.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace idbg
