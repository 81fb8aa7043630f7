#include "idbg/escape.hpp"

#include "idbg/errors.hpp"

namespace idbg {

namespace {

std::string escape_impl(std::string_view raw, bool escape_spaces) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case ' ':
        if (escape_spaces) {
          out += "\\s";
        } else {
          out += c;
        }
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string escape_field(std::string_view raw) { return escape_impl(raw, false); }

std::string escape_spaced_field(std::string_view raw) {
  return escape_impl(raw, true);
}

std::string unescape_field(std::string_view field, std::size_t line_no) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    char c = field[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 == field.size()) {
      throw ParseError("trailing backslash in field", line_no);
    }
    char next = field[++i];
    switch (next) {
      case '\\':
        out += '\\';
        break;
      case 't':
        out += '\t';
        break;
      case 'n':
        out += '\n';
        break;
      case 's':
        out += ' ';
        break;
      default:
        throw ParseError(std::string("unknown escape sequence \\") + next, line_no);
    }
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  if (!text.empty() && text.back() == '\n') {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    return {};
  }
  return split_fields(text, '\n');
}

}  // namespace idbg
