#include "deltaarc/wellformedness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "deltaarc/autoconnect.hpp"

namespace deltaarc {

ElementId ElementId::connector(const PortRef& s, const PortRef& t) {
  return {ElementKind::Connector, to_string(s) + " -> " + to_string(t)};
}

TouchSet all_elements(const ComponentDefinition& c) {
  TouchSet out;
  for (const auto& p : c.ports) out.insert(ElementId::port(p.name));
  for (const auto& s : c.subcomponents) out.insert(ElementId::subcomponent(s.name));
  for (const auto& p : c.parameters) out.insert(ElementId::parameter(p.name));
  for (const auto& conn : c.connectors) out.insert(ElementId::connector(conn.source, conn.target));
  return out;
}

namespace {

template <class Range, class Key>
std::size_t count_named(const Range& range, const Key& key) {
  return static_cast<std::size_t>(
      std::count_if(range.begin(), range.end(), [&](const auto& e) { return e.name == key; }));
}

template <class Range>
SourceLocation location_of(const Range& range, const std::string& name, const SourceLocation& fallback) {
  for (const auto& e : range) {
    if (e.name == name && !e.loc.file.empty()) return e.loc;
  }
  return fallback;
}

void check_component_local(const ComponentDefinition& c, const TouchSet& touched,
                           const ModelRepository& repo, std::vector<Diagnostic>& out) {
  for (const auto& id : touched) {
    switch (id.kind) {
      case ElementKind::Port: {
        const auto n = count_named(c.ports, id.key);
        if (n == 0) break;
        const auto loc = location_of(c.ports, id.key, c.loc);
        if (id.key.empty() || !std::islower(static_cast<unsigned char>(id.key.front()))) {
          out.push_back(make_error(kPortLower,
              "port name '" + id.key + "' in '" + c.name + "' must start with a lower case letter", loc));
        }
        if (n > 1) {
          out.push_back(make_error(kNameUnique,
              "port name '" + id.key + "' is declared " + std::to_string(n) + " times in '" + c.name + "'", loc));
        }
        break;
      }
      case ElementKind::Subcomponent: {
        const auto n = count_named(c.subcomponents, id.key);
        if (n > 1) {
          out.push_back(make_error(kNameUnique,
              "subcomponent name '" + id.key + "' is declared " + std::to_string(n) + " times in '" +
                  c.name + "'",
              location_of(c.subcomponents, id.key, c.loc)));
        }
        break;
      }
      case ElementKind::Parameter: {
        const auto n = count_named(c.parameters, id.key);
        if (n > 1) {
          out.push_back(make_error(kNameUnique,
              "parameter '" + id.key + "' is declared " + std::to_string(n) + " times in '" + c.name + "'",
              location_of(c.parameters, id.key, c.loc)));
        }
        break;
      }
      case ElementKind::Connector: {
        const ConnectorDecl* conn = nullptr;
        std::size_t same = 0;
        for (const auto& k : c.connectors) {
          if (ElementId::connector(k.source, k.target) == id) {
            if (!conn) conn = &k;
            ++same;
          }
        }
        if (!conn) break;
        const auto loc = conn->loc.file.empty() ? c.loc : conn->loc;
        if (same > 1) {
          out.push_back(make_error(kConnDup,
              "connector " + id.key + " is declared " + std::to_string(same) + " times in '" + c.name + "'", loc));
        }
        for (bool is_source : {true, false}) {
          auto problem = endpoint_problem(c, is_source ? conn->source : conn->target, is_source, repo,
                                          /*require_definition=*/false);
          if (!problem.empty()) {
            out.push_back(make_error(kConnResolve, "connector " + id.key + ": " + problem, loc));
          }
        }
        std::set<PortRef> sources;
        for (const auto& k : c.connectors) {
          if (k.target == conn->target) sources.insert(k.source);
        }
        if (sources.size() > 1) {
          out.push_back(make_error(kConnFanIn,
              "'" + to_string(conn->target) + "' in '" + c.name + "' is the target of " +
                  std::to_string(sources.size()) + " connectors",
              loc));
        }
        break;
      }
    }
  }
}

void check_decomposition_cycles(const ModelRepository& repo, std::vector<Diagnostic>& out) {
  // A component is on a cycle iff it can reach itself through subcomponent types.
  for (const auto& [name, c] : repo.components) {
    std::set<std::string, std::less<>> seen;
    std::vector<std::string> stack;
    for (const auto& s : c.subcomponents) stack.push_back(s.type);
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      auto current = std::move(stack.back());
      stack.pop_back();
      if (current == name) {
        cyclic = true;
        break;
      }
      if (!seen.insert(current).second) continue;
      if (const auto* def = repo.find(current)) {
        for (const auto& s : def->subcomponents) stack.push_back(s.type);
      }
    }
    if (cyclic) {
      out.push_back(make_error(kDecompCycle,
          "component '" + name + "' instantiates itself directly or transitively", c.loc));
    }
  }
}

void check_component_full(const ComponentDefinition& c, const ModelRepository& repo,
                          std::vector<Diagnostic>& out) {
  bool all_resolved = true;
  for (const auto& s : c.subcomponents) {
    const auto* def = repo.find(s.type);
    if (!def) {
      all_resolved = false;
      out.push_back(make_error(kTypeResolve,
          "subcomponent '" + s.name + "' of '" + c.name + "' has unknown component type '" + s.type + "'",
          s.loc));
      continue;
    }
    if (s.args.size() != def->parameters.size()) {
      out.push_back(make_error(kArgCount,
          "subcomponent '" + s.name + "' passes " + std::to_string(s.args.size()) + " argument(s) but '" +
              def->name + "' declares " + std::to_string(def->parameters.size()) + " parameter(s)",
          s.loc));
    }
  }
  for (const auto& s : c.subcomponents) {
    for (const auto& arg : s.args) {
      const auto* ref = std::get_if<ParameterRef>(&arg);
      if (ref && !c.find_parameter(ref->name)) {
        out.push_back(make_error(kParamResolve,
            "subcomponent '" + s.name + "' refers to undeclared parameter '" + ref->name + "' of '" +
                c.name + "'",
            s.loc));
      }
    }
  }
  if (!all_resolved) return;

  auto resolved = resolve_autoconnect(c, repo);
  out.insert(out.end(), resolved.diagnostics.begin(), resolved.diagnostics.end());

  std::vector<ConnectorDecl> all = c.connectors;
  all.insert(all.end(), resolved.connectors.begin(), resolved.connectors.end());

  std::set<PortRef> used;
  for (const auto& conn : all) {
    used.insert(conn.source);
    used.insert(conn.target);
    const auto* src = lookup_port(c, conn.source, repo);
    const auto* tgt = lookup_port(c, conn.target, repo);
    if (src && tgt && !repo.types.conforms_nominal(src->type, tgt->type)) {
      out.push_back(make_error(kConnType,
          "connector " + to_string(conn) + " in '" + c.name + "': source type '" + src->type +
              "' does not conform to target type '" + tgt->type + "'",
          conn.loc.file.empty() ? c.loc : conn.loc));
    }
  }

  // Atomic components have no internal wiring; their ports serve the behavior.
  if (!c.is_decomposed()) return;
  for (const auto& p : c.ports) {
    if (!used.contains(PortRef::local(p.name))) {
      out.push_back(make_warning(kPortUnconnected,
          "port '" + p.name + "' of '" + c.name + "' is not connected", p.loc.file.empty() ? c.loc : p.loc));
    }
  }
  for (const auto& s : c.subcomponents) {
    const auto* def = repo.find(s.type);
    for (const auto& p : def->ports) {
      if (!used.contains(PortRef::of(s.name, p.name))) {
        out.push_back(make_warning(kPortUnconnected,
            "port '" + s.name + "." + p.name + "' in '" + c.name + "' is not connected", s.loc));
      }
    }
  }
}

}  // namespace

CheckReport check_local(const ComponentDefinition& c, const TouchSet& touched,
                        const ModelRepository& repo) {
  CheckReport report;
  check_component_local(c, touched, repo, report.diagnostics);
  sort_diagnostics(report.diagnostics);
  return report;
}

CheckReport check_full(const ModelRepository& repo) {
  CheckReport report;
  for (const auto& [_, c] : repo.components) {
    check_component_local(c, all_elements(c), repo, report.diagnostics);
    check_component_full(c, repo, report.diagnostics);
  }
  check_decomposition_cycles(repo, report.diagnostics);
  sort_diagnostics(report.diagnostics);
  return report;
}

}  // namespace deltaarc
