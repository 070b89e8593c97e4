#pragma once

#include <compare>
#include <set>
#include <string>

#include "deltaarc/diagnostic.hpp"
#include "deltaarc/model.hpp"

namespace deltaarc {

// Context-condition codes.
inline constexpr const char* kPortLower = "CC-PORT-LOWER";
inline constexpr const char* kNameUnique = "CC-NAME-UNIQUE";
inline constexpr const char* kConnResolve = "CC-CONN-RESOLVE";
inline constexpr const char* kConnDup = "CC-CONN-DUP";
inline constexpr const char* kConnFanIn = "CC-CONN-FANIN";
inline constexpr const char* kTypeResolve = "CC-TYPE-RESOLVE";
inline constexpr const char* kArgCount = "CC-ARG-COUNT";
inline constexpr const char* kParamResolve = "CC-PARAM-RESOLVE";
inline constexpr const char* kConnType = "CC-CONN-TYPE";
inline constexpr const char* kDecompCycle = "CC-DECOMP-CYCLE";
inline constexpr const char* kPortUnconnected = "CC-PORT-UNCONNECTED";

enum class ElementKind { Port, Subcomponent, Parameter, Connector };

/// Identity of an element inside one component. Connectors are keyed by
/// their `source -> target` text.
struct ElementId {
  ElementKind kind = ElementKind::Port;
  std::string key;

  static ElementId port(std::string name) { return {ElementKind::Port, std::move(name)}; }
  static ElementId subcomponent(std::string name) { return {ElementKind::Subcomponent, std::move(name)}; }
  static ElementId parameter(std::string name) { return {ElementKind::Parameter, std::move(name)}; }
  static ElementId connector(const PortRef& s, const PortRef& t);

  auto operator<=>(const ElementId&) const = default;
};

using TouchSet = std::set<ElementId>;

/// Every element of `c`.
TouchSet all_elements(const ComponentDefinition& c);

/// Local tier: naming convention, per-kind name uniqueness, connector
/// endpoint resolution and direction, duplicate connectors and fan-in, all
/// restricted to `touched`. `repo` is only used to look into subcomponent
/// definitions; a missing definition is left to the full tier.
CheckReport check_local(const ComponentDefinition& c, const TouchSet& touched,
                        const ModelRepository& repo);

/// Full tier over the whole repository: the local checks on every element
/// plus type resolution, argument counts, parameter references, connector
/// type conformance, acyclic decomposition, and unconnected-port warnings.
CheckReport check_full(const ModelRepository& repo);

}  // namespace deltaarc
