#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "deltaarc/delta.hpp"
#include "deltaarc/model.hpp"
#include "deltaarc/wellformedness.hpp"

namespace deltaarc {

// Applicability error codes.
inline constexpr const char* kNoComponent = "DM-NO-COMPONENT";
inline constexpr const char* kAddDup = "DM-ADD-DUP";
inline constexpr const char* kRemoveMissing = "DM-RM-MISSING";
inline constexpr const char* kRemovePortConnected = "DM-RM-PORT-CONNECTED";
inline constexpr const char* kRemoveSubConnected = "DM-RM-SUBC-CONNECTED";
inline constexpr const char* kRenameBad = "DM-RENAME-BAD";
inline constexpr const char* kConfigNoParam = "DM-CONFIG-NO-PARAM";
inline constexpr const char* kConfigNoSub = "DM-CONFIG-NO-SUBC";
inline constexpr const char* kReplaceIncompatible = "DM-REPLACE-INCOMPAT";
inline constexpr const char* kReplaceAmbiguous = "DM-REPLACE-AMBIGUOUS";
inline constexpr const char* kConnInvalid = "DM-CONN-INVALID";
inline constexpr const char* kDisconnectMissing = "DM-DISC-MISSING";

/// Target of a scope-free operation: one component, or every component.
struct Scope {
  std::optional<std::string> component;

  static Scope global() { return {}; }
  static Scope of(std::string name) { return Scope{std::move(name)}; }
};

// Every operation below takes the repository by const reference and returns
// the modified copy; on error it throws and the input is left as it was.

ModelRepository apply_op(const ModelRepository& repo, std::string_view target, const ModificationOp& op);

/// Makes the resolved implicit connectors explicit and switches autoconnect off.
ModelRepository expand_autoconnect(const ModelRepository& repo, const Scope& scope);

/// Sets `mode` and drops every explicit connector that autoconnect would
/// recreate from the remaining ones, until none is left.
ModelRepository introduce_autoconnect(const ModelRepository& repo, AutoconnectMode mode, const Scope& scope);

/// Two phases over explicit plus implicit connectors: remove subcomponents
/// without outgoing connectors until none is left, then remove ports no
/// connector uses. Explicit connectors to removed elements are dropped, in
/// enclosing components too. Atomic components are left alone. Mutually
/// feeding subcomponents that never reach an out-port survive.
ModelRepository remove_unreachable(const ModelRepository& repo, const Scope& scope);

struct DeltaApplication {
  ModelRepository repo;
  CheckReport report;                              // local checks, warnings only on success
  std::map<std::string, TouchSet, std::less<>> touched;
};

/// Applies the body in order, then runs the local context conditions on the
/// touched elements. The first failing operation or local error aborts with
/// the delta name and the operation's location.
DeltaApplication apply_delta(const ModelRepository& repo, const DeltaModel& delta);

}  // namespace deltaarc
