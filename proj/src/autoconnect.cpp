#include "deltaarc/autoconnect.hpp"

#include <algorithm>
#include <set>

namespace deltaarc {

namespace {

struct Endpoint {
  PortRef ref;
  const PortDecl* decl;
};

}  // namespace

AutoconnectResult resolve_autoconnect(const ComponentDefinition& c, const ModelRepository& repo) {
  AutoconnectResult result;
  if (c.autoconnect == AutoconnectMode::Off) return result;

  std::vector<Endpoint> sources;
  std::vector<Endpoint> targets;
  for (const auto& p : c.ports) {
    (p.direction == Direction::In ? sources : targets).push_back({PortRef::local(p.name), &p});
  }
  for (const auto& sub : c.subcomponents) {
    const auto* def = repo.find(sub.type);
    if (!def) {
      throw Error("CC-TYPE-RESOLVE",
                  "subcomponent '" + sub.name + "' of '" + c.name + "' has unknown type '" +
                      sub.type + "'",
                  sub.loc);
    }
    for (const auto& p : def->ports) {
      (p.direction == Direction::Out ? sources : targets).push_back({PortRef::of(sub.name, p.name), &p});
    }
  }

  std::set<PortRef> explicit_targets;
  for (const auto& conn : c.connectors) explicit_targets.insert(conn.target);

  const bool by_name = c.autoconnect == AutoconnectMode::Port;
  for (const auto& target : targets) {
    if (explicit_targets.contains(target.ref)) continue;
    std::vector<const Endpoint*> candidates;
    for (const auto& source : sources) {
      // Never a subcomponent onto itself, never a pass-through of the enclosing interface.
      if (source.ref.owner == target.ref.owner) continue;
      if (by_name && source.ref.port != target.ref.port) continue;
      if (!repo.types.conforms_nominal(source.decl->type, target.decl->type)) continue;
      candidates.push_back(&source);
    }
    if (candidates.size() == 1) {
      result.connectors.push_back(
          ConnectorDecl{candidates.front()->ref, target.ref, ConnectorOrigin::Implicit, c.loc});
    } else if (candidates.size() > 1) {
      std::string names;
      for (const auto* cand : candidates) {
        names += (names.empty() ? "" : ", ") + to_string(cand->ref);
      }
      result.diagnostics.push_back(make_warning(
          by_name ? "AC-PORT-AMBIGUOUS" : "AC-TYPE-AMBIGUOUS",
          "autoconnect " + std::string(to_string(c.autoconnect)) + " in '" + c.name +
              "' leaves '" + to_string(target.ref) + "' unconnected: candidate sources " + names,
          c.loc));
    }
  }
  std::sort(result.connectors.begin(), result.connectors.end(), connector_less);
  return result;
}

std::vector<ConnectorDecl> effective_connectors(const ComponentDefinition& c,
                                                const ModelRepository& repo) {
  std::vector<ConnectorDecl> all = c.connectors;
  auto implicit = resolve_autoconnect(c, repo).connectors;
  all.insert(all.end(), implicit.begin(), implicit.end());
  return all;
}

}  // namespace deltaarc
