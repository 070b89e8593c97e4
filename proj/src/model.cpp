#include "deltaarc/model.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace deltaarc {

std::string_view to_string(Direction d) { return d == Direction::In ? "in" : "out"; }

std::string_view to_string(AutoconnectMode m) {
  switch (m) {
    case AutoconnectMode::Port:
      return "port";
    case AutoconnectMode::Type:
      return "type";
    case AutoconnectMode::Off:
      break;
  }
  return "off";
}

std::string implicit_name(std::string_view type_name) {
  std::string out(type_name);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string to_string(const ConfigArg& arg) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, StringLiteral>) {
          return quote(v.value);
        } else {
          return v.name;
        }
      },
      arg);
}

std::string to_string(const PortRef& ref) {
  return ref.owner ? *ref.owner + "." + ref.port : ref.port;
}

std::string to_string(const ConnectorDecl& c) {
  return to_string(c.source) + " -> " + to_string(c.target);
}

bool connector_less(const ConnectorDecl& a, const ConnectorDecl& b) {
  return std::tie(a.target, a.source) < std::tie(b.target, b.source);
}

const PortDecl* ComponentDefinition::find_port(std::string_view port_name) const {
  auto it = std::find_if(ports.begin(), ports.end(),
                         [&](const PortDecl& p) { return p.name == port_name; });
  return it == ports.end() ? nullptr : &*it;
}

PortDecl* ComponentDefinition::find_port(std::string_view port_name) {
  return const_cast<PortDecl*>(std::as_const(*this).find_port(port_name));
}

const SubcomponentDecl* ComponentDefinition::find_subcomponent(std::string_view sub_name) const {
  auto it = std::find_if(subcomponents.begin(), subcomponents.end(),
                         [&](const SubcomponentDecl& s) { return s.name == sub_name; });
  return it == subcomponents.end() ? nullptr : &*it;
}

SubcomponentDecl* ComponentDefinition::find_subcomponent(std::string_view sub_name) {
  return const_cast<SubcomponentDecl*>(std::as_const(*this).find_subcomponent(sub_name));
}

const ParameterDecl* ComponentDefinition::find_parameter(std::string_view param_name) const {
  auto idx = parameter_index(param_name);
  return idx ? &parameters[*idx] : nullptr;
}

std::optional<std::size_t> ComponentDefinition::parameter_index(std::string_view param_name) const {
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (parameters[i].name == param_name) return i;
  }
  return std::nullopt;
}

const ConnectorDecl* ComponentDefinition::find_connector(const PortRef& source,
                                                         const PortRef& target) const {
  auto it = std::find_if(connectors.begin(), connectors.end(),
                         [&](const ConnectorDecl& c) { return c.same_endpoints(source, target); });
  return it == connectors.end() ? nullptr : &*it;
}

const ComponentDefinition* ModelRepository::find(std::string_view name) const {
  auto it = components.find(name);
  return it == components.end() ? nullptr : &it->second;
}

ComponentDefinition* ModelRepository::find(std::string_view name) {
  auto it = components.find(name);
  return it == components.end() ? nullptr : &it->second;
}

void ModelRepository::add_component(ComponentDefinition def) {
  if (const auto* existing = find(def.name)) {
    throw Error("REPO-DUP-COMPONENT",
                "component '" + def.name + "' is already defined in " + existing->loc.file,
                def.loc);
  }
  std::string key = def.name;
  components.emplace(std::move(key), std::move(def));
}

void ModelRepository::register_port_types() {
  for (const auto& [_, c] : components) {
    for (const auto& p : c.ports) types.declare(p.type);
  }
}

const PortDecl* lookup_port(const ComponentDefinition& c, const PortRef& ref,
                            const ModelRepository& repo) {
  if (ref.is_local()) return c.find_port(ref.port);
  const auto* sub = c.find_subcomponent(*ref.owner);
  if (!sub) return nullptr;
  const auto* def = repo.find(sub->type);
  return def ? def->find_port(ref.port) : nullptr;
}

std::string endpoint_problem(const ComponentDefinition& c, const PortRef& ref, bool is_source,
                             const ModelRepository& repo, bool require_definition) {
  const char* role = is_source ? "source" : "target";
  if (ref.is_local()) {
    const auto* p = c.find_port(ref.port);
    if (!p) return "'" + c.name + "' has no port '" + ref.port + "'";
    if (p->direction != (is_source ? Direction::In : Direction::Out)) {
      return std::string(to_string(p->direction)) + "-port '" + ref.port +
             "' of the enclosing component cannot be a connector " + role;
    }
    return {};
  }
  const auto* sub = c.find_subcomponent(*ref.owner);
  if (!sub) return "'" + c.name + "' has no subcomponent '" + *ref.owner + "'";
  const auto* def = repo.find(sub->type);
  if (!def) {
    return require_definition ? "component type '" + sub->type + "' of '" + sub->name + "' is unknown"
                              : std::string();
  }
  const auto* p = def->find_port(ref.port);
  if (!p) return "subcomponent '" + sub->name + "' (" + sub->type + ") has no port '" + ref.port + "'";
  if (p->direction != (is_source ? Direction::Out : Direction::In)) {
    return std::string(to_string(p->direction)) + "-port '" + to_string(ref) +
           "' of a subcomponent cannot be a connector " + role;
  }
  return {};
}

}  // namespace deltaarc
