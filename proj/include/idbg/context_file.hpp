#pragma once

#include <string>
#include <string_view>

#include "idbg/context.hpp"

namespace idbg {

/// Magic first line of context files.
inline constexpr std::string_view kContextMagic = "IDBGCTX/1";

/// Canonical text form of a context: a `[semantics]` section (locale, range,
/// named levels, categories, templates) followed by a `[context]` section
/// (enabled, threshold, channel binding, category states, class filter).
/// The context id is runtime identity and is not persisted.
std::string save_context(const MonitorContext& ctx);

/// Rebuilds a context from save_context text. ParseError on malformed input,
/// a bad magic line, or any invariant violation; the rebuilt context gets a
/// fresh context id.
ContextPtr load_context(std::string_view text);

}  // namespace idbg
