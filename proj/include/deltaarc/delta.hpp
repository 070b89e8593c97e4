#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "deltaarc/constraint.hpp"
#include "deltaarc/model.hpp"

namespace deltaarc {

namespace ops {

struct AddPort { PortDecl port; };
struct AddSubcomponent { SubcomponentDecl subcomponent; };
struct AddParameter { std::string name; };
struct SetAutoconnect { AutoconnectMode mode = AutoconnectMode::Off; };
struct RemovePort { std::string name; };
struct RemoveSubcomponent { std::string name; };
struct RemoveParameter { std::string name; };
struct Connect { PortRef source; PortRef target; };
struct Disconnect { PortRef source; PortRef target; };

enum class RenameKind { Port, Component, Parameter };
struct Rename {
  RenameKind kind = RenameKind::Port;
  std::string from;
  std::string to;
};

struct Replace {
  std::string name;
  std::string with_type;
  std::optional<std::string> new_name;
};

struct Assignment {
  std::string parameter;
  ConfigArg value;
};
struct ModifyConfig {
  std::string subcomponent;
  std::vector<Assignment> assignments;
};

struct ExpandAutoconnect {};
struct IntroduceAutoconnect { AutoconnectMode mode = AutoconnectMode::Port; };
struct RemoveUnreachable {};

}  // namespace ops

using OpKind = std::variant<ops::AddPort, ops::AddSubcomponent, ops::AddParameter, ops::SetAutoconnect,
                            ops::RemovePort, ops::RemoveSubcomponent, ops::RemoveParameter,
                            ops::Connect, ops::Disconnect, ops::Rename, ops::Replace,
                            ops::ModifyConfig, ops::ExpandAutoconnect, ops::IntroduceAutoconnect,
                            ops::RemoveUnreachable>;

struct ModificationOp {
  OpKind kind;
  SourceLocation loc;
};

/// True for the three operations allowed outside a `modify component` block.
bool is_scope_free(const ModificationOp& op);

/// Statement-like rendering used in diagnostics, e.g. `rename component a as b`.
std::string describe(const ModificationOp& op);

/// Either a `modify component Name { ... }` block or a single global
/// operation (component unset, exactly one op).
struct DeltaBlock {
  std::optional<std::string> component;
  std::vector<ModificationOp> ops;
  SourceLocation loc;

  bool is_global() const { return !component.has_value(); }
};

struct DeltaModel {
  std::string name;
  std::optional<OrderConstraint> constraint;
  std::vector<DeltaBlock> body;
  SourceLocation loc;
};

struct ProductConfiguration {
  std::string name;
  std::vector<std::string> deltas;  // duplicate-free, file order
  SourceLocation loc;
};

}  // namespace deltaarc
