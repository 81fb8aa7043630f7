#include "idbg/context_file.hpp"

#include <charconv>
#include <optional>

#include "idbg/errors.hpp"
#include "idbg/escape.hpp"

namespace idbg {

namespace {

constexpr std::string_view kSemanticsSection = "[semantics]";
constexpr std::string_view kContextSection = "[context]";

void append_named_line(std::string& out, std::string_view kind,
                       std::string_view name, std::string_view value) {
  out += kind;
  out += ' ';
  out += escape_spaced_field(name);
  out += " = ";
  out += value;
  out += '\n';
}

void append_value_line(std::string& out, std::string_view key,
                       std::string_view value) {
  out += key;
  out += " = ";
  out += value;
  out += '\n';
}

int parse_int_value(std::string_view text, std::string_view what,
                    std::size_t line_no) {
  int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'",
                     line_no);
  }
  return value;
}

bool parse_bool_value(std::string_view text, std::size_t line_no) {
  if (text == "true") {
    return true;
  }
  if (text == "false") {
    return false;
  }
  throw ParseError("expected true or false, got '" + std::string(text) + "'",
                   line_no);
}

// One parsed "<kind> [name] = <value>" line; class lines carry no value.
struct KeyLine {
  std::string_view kind;
  std::string_view name;   // still escaped
  std::string_view value;  // raw remainder
  bool has_name = false;
};

KeyLine split_key_line(std::string_view line, std::size_t line_no) {
  std::size_t kind_end = line.find(' ');
  if (kind_end == std::string_view::npos || kind_end == 0) {
    throw ParseError("malformed entry: '" + std::string(line) + "'", line_no);
  }
  KeyLine out;
  out.kind = line.substr(0, kind_end);
  std::string_view rest = line.substr(kind_end + 1);

  bool named = out.kind == "level" || out.kind == "category" ||
               out.kind == "template" || out.kind == "class";
  if (named) {
    std::size_t name_end = rest.find(' ');
    if (out.kind == "class") {
      if (rest.empty() || name_end != std::string_view::npos) {
        throw ParseError("malformed class entry", line_no);
      }
      out.name = rest;
      out.has_name = true;
      return out;
    }
    if (name_end == std::string_view::npos || name_end == 0) {
      throw ParseError("malformed entry: '" + std::string(line) + "'", line_no);
    }
    out.name = rest.substr(0, name_end);
    out.has_name = true;
    rest = rest.substr(name_end + 1);
  }
  if (rest == "=") {
    out.value = std::string_view();
  } else if (rest.starts_with("= ")) {
    out.value = rest.substr(2);
  } else {
    throw ParseError("expected '=' in entry: '" + std::string(line) + "'",
                     line_no);
  }
  return out;
}

struct ParsedContextSection {
  std::optional<bool> enabled;
  std::optional<int> threshold;
  std::optional<std::string> channel;
  std::optional<FilterMode> filter_mode;
  std::vector<std::string> filter_names;
  std::vector<std::tuple<std::string, bool, int>> categories;
};

}  // namespace

std::string save_context(const MonitorContext& ctx) {
  const Semantics& s = ctx.semantics();
  std::string out(kContextMagic);
  out += '\n';

  out += kSemanticsSection;
  out += '\n';
  append_value_line(out, "locale", escape_field(s.locale_tag()));
  append_value_line(out, "min", std::to_string(s.min_level()));
  append_value_line(out, "max", std::to_string(s.max_level()));
  for (const auto& [name, value] : s.named_levels()) {
    append_named_line(out, "level", name, std::to_string(value));
  }
  for (const auto& [name, value] : s.categories()) {
    append_named_line(out, "category", name, std::to_string(value));
  }
  for (const auto& [key, text] : s.message_templates()) {
    append_named_line(out, "template", key, escape_field(text));
  }

  out += kContextSection;
  out += '\n';
  append_value_line(out, "enabled", ctx.enabled() ? "true" : "false");
  append_value_line(out, "threshold", std::to_string(ctx.threshold().value()));
  append_value_line(out, "channel", escape_field(ctx.channel_id()));
  for (const auto& [name, state] : ctx.category_states()) {
    std::string value = state.enabled ? "on " : "off ";
    value += std::to_string(state.level);
    append_named_line(out, "category", name, value);
  }
  ClassFilter filter = ctx.class_filter();
  append_value_line(
      out, "filter_mode",
      filter.mode == FilterMode::IncludeListed ? "include" : "exclude");
  for (const std::string& name : filter.names) {
    out += "class ";
    out += escape_spaced_field(name);
    out += '\n';
  }
  return out;
}

ContextPtr load_context(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kContextMagic) {
    throw ParseError("expected context header " + std::string(kContextMagic), 1);
  }
  if (lines.size() < 2 || lines[1] != kSemanticsSection) {
    throw ParseError("unexpected end of context file: missing " +
                         std::string(kSemanticsSection),
                     2);
  }

  std::optional<std::string> locale;
  std::optional<int> min_level;
  std::optional<int> max_level;
  NameValueMap named_levels;
  NameValueMap semantics_categories;
  TemplateMap templates;
  ParsedContextSection context;
  bool in_context = false;

  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (line.empty()) {
      continue;
    }
    if (line == kContextSection) {
      if (in_context) {
        throw ParseError("duplicate " + std::string(kContextSection), line_no);
      }
      in_context = true;
      continue;
    }
    if (line == kSemanticsSection) {
      throw ParseError("duplicate " + std::string(kSemanticsSection), line_no);
    }
    KeyLine entry = split_key_line(line, line_no);

    if (!in_context) {
      if (entry.kind == "locale") {
        if (locale) {
          throw ParseError("duplicate locale", line_no);
        }
        locale = unescape_field(entry.value, line_no);
      } else if (entry.kind == "min") {
        if (min_level) {
          throw ParseError("duplicate min", line_no);
        }
        min_level = parse_int_value(entry.value, "min level", line_no);
      } else if (entry.kind == "max") {
        if (max_level) {
          throw ParseError("duplicate max", line_no);
        }
        max_level = parse_int_value(entry.value, "max level", line_no);
      } else if (entry.kind == "level") {
        std::string name = unescape_field(entry.name, line_no);
        if (!named_levels.emplace(name, parse_int_value(entry.value, "level",
                                                        line_no))
                 .second) {
          throw ParseError("duplicate level name: " + name, line_no);
        }
      } else if (entry.kind == "category") {
        std::string name = unescape_field(entry.name, line_no);
        if (!semantics_categories
                 .emplace(name,
                          parse_int_value(entry.value, "category level", line_no))
                 .second) {
          throw ParseError("duplicate category: " + name, line_no);
        }
      } else if (entry.kind == "template") {
        std::string key = unescape_field(entry.name, line_no);
        if (!templates.emplace(key, unescape_field(entry.value, line_no)).second) {
          throw ParseError("duplicate template key: " + key, line_no);
        }
      } else {
        throw ParseError("unknown semantics entry: " + std::string(entry.kind),
                         line_no);
      }
      continue;
    }

    if (entry.kind == "enabled") {
      if (context.enabled) {
        throw ParseError("duplicate enabled", line_no);
      }
      context.enabled = parse_bool_value(entry.value, line_no);
    } else if (entry.kind == "threshold") {
      if (context.threshold) {
        throw ParseError("duplicate threshold", line_no);
      }
      context.threshold = parse_int_value(entry.value, "threshold", line_no);
    } else if (entry.kind == "channel") {
      if (context.channel) {
        throw ParseError("duplicate channel", line_no);
      }
      context.channel = unescape_field(entry.value, line_no);
    } else if (entry.kind == "filter_mode") {
      if (context.filter_mode) {
        throw ParseError("duplicate filter_mode", line_no);
      }
      if (entry.value == "include") {
        context.filter_mode = FilterMode::IncludeListed;
      } else if (entry.value == "exclude") {
        context.filter_mode = FilterMode::ExcludeListed;
      } else {
        throw ParseError("filter_mode must be include or exclude", line_no);
      }
    } else if (entry.kind == "category") {
      std::string name = unescape_field(entry.name, line_no);
      auto state_fields = split_fields(entry.value, ' ');
      if (state_fields.size() != 2 ||
          (state_fields[0] != "on" && state_fields[0] != "off")) {
        throw ParseError("category state must be 'on|off <level>'", line_no);
      }
      bool on = state_fields[0] == "on";
      int level = parse_int_value(state_fields[1], "category level", line_no);
      context.categories.emplace_back(std::move(name), on, level);
    } else if (entry.kind == "class") {
      context.filter_names.push_back(unescape_field(entry.name, line_no));
    } else {
      throw ParseError("unknown context entry: " + std::string(entry.kind),
                       line_no);
    }
  }

  std::size_t end_line = lines.size();
  if (!in_context) {
    throw ParseError("unexpected end of context file: missing " +
                         std::string(kContextSection),
                     end_line);
  }
  if (!min_level || !max_level) {
    throw ParseError("unexpected end of context file: missing level range",
                     end_line);
  }
  if (!context.enabled || !context.threshold || !context.channel ||
      !context.filter_mode) {
    throw ParseError(
        "unexpected end of context file: missing required context entries",
        end_line);
  }

  Semantics semantics(*min_level, *max_level, std::move(named_levels),
                      std::move(semantics_categories), std::move(templates),
                      locale.value_or("en"));
  auto validation = validate_semantics(semantics);
  if (!validation.ok()) {
    throw ParseError("invalid semantics: " + validation.violations.front());
  }

  try {
    ContextPtr ctx = make_context(std::move(semantics), *context.channel);
    ctx->set_enabled(*context.enabled);
    ctx->set_threshold_value(*context.threshold);
    for (const auto& [name, on, level] : context.categories) {
      ctx->set_category_state(name, level, on);
    }
    if (*context.filter_mode == FilterMode::IncludeListed) {
      ctx->class_filter_remove_all();
      for (const std::string& name : context.filter_names) {
        ctx->class_filter_add(name);
      }
    } else {
      ctx->class_filter_add_all();
      for (const std::string& name : context.filter_names) {
        ctx->class_filter_remove(name);
      }
    }
    return ctx;
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace idbg
