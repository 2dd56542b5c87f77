#pragma once

#include <string>
#include <string_view>

#include "ctxlab/catalog.hpp"

namespace ctxlab {

struct ParseOptions {
  /// Reject vertices used in a `context` line without a prior `vertex` line.
  bool strict = false;
  /// Name given to the resulting bundle.
  std::string name = "document";
};

/// Parses the line-oriented logic format:
///
///   # comment                 (also after any directive)
///   dim <n>
///   vertex <name> [q1 q2 ...] (ray optional; entries are integers or p/q)
///   context <name> <name> ...
///   cycle <name> ...
///
/// Throws ParseError carrying 1-based line and column.
LogicBundle parse_logic(std::string_view text, const ParseOptions& options = {});

/// Canonical text: header comments, `dim`, `vertex` lines (when a realization
/// exists or declaration order matters), contexts in order, then `cycle`.
std::string serialize_logic(const LogicBundle& bundle);

}  // namespace ctxlab
