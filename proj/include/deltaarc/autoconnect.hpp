#pragma once

#include <vector>

#include "deltaarc/model.hpp"

namespace deltaarc {

struct AutoconnectResult {
  std::vector<ConnectorDecl> connectors;  // origin == Implicit, sorted by target then source
  std::vector<Diagnostic> diagnostics;    // ambiguity warnings
};

/// Implicit connectors of `c` under its autoconnect mode.
///
/// Candidate pairs are the data-flow legal ones: enclosing in-port to
/// subcomponent in-port, subcomponent out-port to enclosing out-port, and
/// subcomponent out-port to an in-port of a different subcomponent. The
/// source type must conform to the target type. `port` mode additionally
/// requires equal port names; `type` mode matches on type alone. A target
/// that already has an explicit incoming connector is skipped, and a target
/// with more than one candidate source is skipped with a warning.
///
/// Throws Error(CC-TYPE-RESOLVE) if a subcomponent type is not in `repo`.
AutoconnectResult resolve_autoconnect(const ComponentDefinition& c, const ModelRepository& repo);

/// Explicit connectors of `c` followed by its resolved implicit ones.
std::vector<ConnectorDecl> effective_connectors(const ComponentDefinition& c,
                                                const ModelRepository& repo);

}  // namespace deltaarc
