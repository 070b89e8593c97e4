#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deltaarc/diagnostic.hpp"
#include "deltaarc/types.hpp"

// Architectural data model. Source locations are carried for diagnostics but
// never take part in equality.

namespace deltaarc {

enum class Direction { In, Out };
enum class AutoconnectMode { Off, Port, Type };

std::string_view to_string(Direction d);
std::string_view to_string(AutoconnectMode m);

/// Type name with its first character lowercased: the name an unnamed port
/// or subcomponent is accessible by.
std::string implicit_name(std::string_view type_name);

struct PortDecl {
  Direction direction = Direction::In;
  std::string type;
  std::string name;
  SourceLocation loc;

  bool operator==(const PortDecl& o) const {
    return direction == o.direction && type == o.type && name == o.name;
  }
};

struct ParameterDecl {
  std::string name;
  SourceLocation loc;

  bool operator==(const ParameterDecl& o) const { return name == o.name; }
};

struct StringLiteral {
  std::string value;
  auto operator<=>(const StringLiteral&) const = default;
};

struct ParameterRef {
  std::string name;
  auto operator<=>(const ParameterRef&) const = default;
};

using ConfigArg = std::variant<std::int64_t, StringLiteral, ParameterRef>;

std::string to_string(const ConfigArg& arg);

struct SubcomponentDecl {
  std::string type;
  std::string name;
  std::vector<ConfigArg> args;
  SourceLocation loc;

  bool operator==(const SubcomponentDecl& o) const {
    return type == o.type && name == o.name && args == o.args;
  }
};

/// `owner.port`, or just `port` for a port of the enclosing component.
struct PortRef {
  std::optional<std::string> owner;
  std::string port;

  static PortRef local(std::string port) { return PortRef{std::nullopt, std::move(port)}; }
  static PortRef of(std::string owner, std::string port) {
    return PortRef{std::move(owner), std::move(port)};
  }

  bool is_local() const { return !owner.has_value(); }
  auto operator<=>(const PortRef&) const = default;
};

std::string to_string(const PortRef& ref);

enum class ConnectorOrigin { Explicit, Implicit };

struct ConnectorDecl {
  PortRef source;
  PortRef target;
  ConnectorOrigin origin = ConnectorOrigin::Explicit;
  SourceLocation loc;

  /// Identity is the (source, target) pair.
  bool operator==(const ConnectorDecl& o) const { return source == o.source && target == o.target; }
  bool same_endpoints(const PortRef& s, const PortRef& t) const { return source == s && target == t; }
};

std::string to_string(const ConnectorDecl& c);

/// Canonical connector order: by target, then by source.
bool connector_less(const ConnectorDecl& a, const ConnectorDecl& b);

struct ComponentDefinition {
  std::string name;
  std::vector<ParameterDecl> parameters;
  AutoconnectMode autoconnect = AutoconnectMode::Off;
  std::vector<PortDecl> ports;
  std::vector<SubcomponentDecl> subcomponents;
  std::vector<ConnectorDecl> connectors;
  SourceLocation loc;

  const PortDecl* find_port(std::string_view port_name) const;
  PortDecl* find_port(std::string_view port_name);
  const SubcomponentDecl* find_subcomponent(std::string_view sub_name) const;
  SubcomponentDecl* find_subcomponent(std::string_view sub_name);
  const ParameterDecl* find_parameter(std::string_view param_name) const;
  std::optional<std::size_t> parameter_index(std::string_view param_name) const;
  const ConnectorDecl* find_connector(const PortRef& source, const PortRef& target) const;

  bool is_decomposed() const { return !subcomponents.empty(); }

  /// Exact equality, including declaration order.
  bool operator==(const ComponentDefinition& o) const {
    return name == o.name && parameters == o.parameters && autoconnect == o.autoconnect &&
           ports == o.ports && subcomponents == o.subcomponents && connectors == o.connectors;
  }
};

struct ModelRepository {
  std::map<std::string, ComponentDefinition, std::less<>> components;
  TypeHierarchy types;

  const ComponentDefinition* find(std::string_view name) const;
  ComponentDefinition* find(std::string_view name);

  /// Throws Error(REPO-DUP-COMPONENT) on a second definition with the same name.
  void add_component(ComponentDefinition def);

  /// Auto-registers every port data type that is not declared yet.
  void register_port_types();

  bool operator==(const ModelRepository&) const = default;
};

/// Port `ref` as seen from inside `c`, looking through to subcomponent
/// definitions in `repo`. Null when the owner, its type, or the port is missing.
const PortDecl* lookup_port(const ComponentDefinition& c, const PortRef& ref,
                            const ModelRepository& repo);

/// Empty when `ref` resolves inside `c` with the data-flow direction a
/// connector source (or target) needs; otherwise a description of the
/// problem. With `require_definition` unset, a subcomponent whose type is not
/// in `repo` is accepted.
std::string endpoint_problem(const ComponentDefinition& c, const PortRef& ref, bool is_source,
                             const ModelRepository& repo, bool require_definition);

}  // namespace deltaarc
