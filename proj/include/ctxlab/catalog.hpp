#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxlab/hypergraph.hpp"
#include "ctxlab/realization.hpp"

namespace ctxlab {

/// A logic together with optional realization and descriptive metadata.
struct LogicBundle {
  Hypergraph hypergraph;
  std::optional<Realization> realization;
  std::string name;
  std::vector<std::string> aliases;
  /// Intertwining vertices listed in cyclic order (cycle logics only).
  std::optional<std::vector<VertexId>> cycle;
  std::vector<std::string> notes;
};

/// Cycle of `contexts` 3-element contexts {1,2,3},{3,4,5},...,{2m-1,2m,1};
/// vertex names are the decimal indices 1..2m. The pentagon is cyclic_logic(5).
LogicBundle cyclic_logic(std::size_t contexts);

/// Looks up a built-in logic by name or alias; throws UnknownCatalogName.
LogicBundle catalog(std::string_view name);

/// Canonical catalog names.
std::vector<std::string> catalog_names();

/// Checks the bundle-level invariants (realization coverage and cycle
/// metadata); throws DomainMismatch.
void validate_bundle(const LogicBundle& bundle);

}  // namespace ctxlab
