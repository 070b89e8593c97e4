#include "deltaarc/engine.hpp"

#include <algorithm>
#include <set>

#include "deltaarc/autoconnect.hpp"
#include "deltaarc/compatibility.hpp"

namespace deltaarc {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool touches_owner(const ConnectorDecl& c, std::string_view owner) {
  return c.source.owner == owner || c.target.owner == owner;
}

bool touches_local_port(const ConnectorDecl& c, std::string_view port) {
  return (c.source.is_local() && c.source.port == port) || (c.target.is_local() && c.target.port == port);
}

/// Mutates one working copy of a repository and records what it touched.
class Editor {
 public:
  Editor(ModelRepository& repo, std::map<std::string, TouchSet, std::less<>>& touched)
      : repo_(repo), touched_(touched) {}

  void apply(std::string_view target, const ModificationOp& op) {
    op_ = &op;
    ComponentDefinition& c = component(target);
    std::visit(Overloaded{
                   [&](const ops::AddPort& o) { add_port(c, o); },
                   [&](const ops::AddSubcomponent& o) { add_subcomponent(c, o); },
                   [&](const ops::AddParameter& o) { add_parameter(c, o); },
                   [&](const ops::SetAutoconnect& o) {
                     c.autoconnect = o.mode;
                     touch(c);
                   },
                   [&](const ops::RemovePort& o) { remove_port(c, o); },
                   [&](const ops::RemoveSubcomponent& o) { remove_subcomponent(c, o); },
                   [&](const ops::RemoveParameter& o) { remove_parameter(c, o); },
                   [&](const ops::Connect& o) { connect(c, o); },
                   [&](const ops::Disconnect& o) { disconnect(c, o); },
                   [&](const ops::Rename& o) { rename(c, o); },
                   [&](const ops::Replace& o) { replace(c, o); },
                   [&](const ops::ModifyConfig& o) { modify_config(c, o); },
                   [&](const ops::ExpandAutoconnect&) { expand(c); },
                   [&](const ops::IntroduceAutoconnect& o) { introduce(c, o.mode); },
                   [&](const ops::RemoveUnreachable&) { remove_unreachable_in(c); },
               },
               op.kind);
  }

  void apply_global(const ModificationOp& op) {
    op_ = &op;
    if (std::holds_alternative<ops::ExpandAutoconnect>(op.kind)) {
      // Resolve everything against the unexpanded state first.
      std::map<std::string, std::vector<ConnectorDecl>> implicit;
      for (auto& [name, c] : repo_.components) implicit[name] = resolve_autoconnect(c, repo_).connectors;
      for (auto& [name, c] : repo_.components) expand(c, implicit[name]);
      return;
    }
    for (auto& [_, c] : repo_.components) {
      if (const auto* intro = std::get_if<ops::IntroduceAutoconnect>(&op.kind)) {
        introduce(c, intro->mode);
      } else if (std::holds_alternative<ops::RemoveUnreachable>(op.kind)) {
        remove_unreachable_in(c);
      } else {
        fail(kNoComponent, "'" + describe(op) + "' needs an enclosing 'modify component' block");
      }
    }
  }

  ComponentDefinition& component(std::string_view name) {
    auto* c = repo_.find(name);
    if (!c) fail(kNoComponent, "component '" + std::string(name) + "' does not exist");
    touched_[c->name];
    return *c;
  }

  void set_op(const ModificationOp* op) { op_ = op; }

 private:
  [[noreturn]] void fail(const char* code, const std::string& reason) const {
    std::string msg = op_ ? describe(*op_) + ": " + reason : reason;
    throw Error(code, msg, op_ ? op_->loc : SourceLocation{});
  }

  void touch(const ComponentDefinition& c) { touched_[c.name]; }
  void touch(const ComponentDefinition& c, ElementId id) { touched_[c.name].insert(std::move(id)); }

  // ---- add / remove -----------------------------------------------------

  void add_port(ComponentDefinition& c, const ops::AddPort& o) {
    if (c.find_port(o.port.name)) fail(kAddDup, "'" + c.name + "' already has a port '" + o.port.name + "'");
    PortDecl p = o.port;
    if (p.loc.file.empty()) p.loc = op_->loc;
    repo_.types.declare(p.type);
    c.ports.push_back(std::move(p));
    touch(c, ElementId::port(o.port.name));
  }

  void add_subcomponent(ComponentDefinition& c, const ops::AddSubcomponent& o) {
    const auto& s = o.subcomponent;
    if (c.find_subcomponent(s.name)) {
      fail(kAddDup, "'" + c.name + "' already has a subcomponent '" + s.name + "'");
    }
    SubcomponentDecl copy = s;
    if (copy.loc.file.empty()) copy.loc = op_->loc;
    c.subcomponents.push_back(std::move(copy));
    touch(c, ElementId::subcomponent(s.name));
  }

  void add_parameter(ComponentDefinition& c, const ops::AddParameter& o) {
    if (c.find_parameter(o.name)) fail(kAddDup, "'" + c.name + "' already has a parameter '" + o.name + "'");
    c.parameters.push_back(ParameterDecl{o.name, op_->loc});
    touch(c, ElementId::parameter(o.name));
  }

  void remove_port(ComponentDefinition& c, const ops::RemovePort& o) {
    if (!c.find_port(o.name)) fail(kRemoveMissing, "'" + c.name + "' has no port '" + o.name + "'");
    for (const auto& conn : c.connectors) {
      if (touches_local_port(conn, o.name)) {
        fail(kRemovePortConnected, "port '" + o.name + "' is still used by connector " + to_string(conn));
      }
    }
    std::erase_if(c.ports, [&](const PortDecl& p) { return p.name == o.name; });
    touch(c);
  }

  void remove_subcomponent(ComponentDefinition& c, const ops::RemoveSubcomponent& o) {
    if (!c.find_subcomponent(o.name)) {
      fail(kRemoveMissing, "'" + c.name + "' has no subcomponent '" + o.name + "'");
    }
    for (const auto& conn : c.connectors) {
      if (touches_owner(conn, o.name)) {
        fail(kRemoveSubConnected,
             "subcomponent '" + o.name + "' is still used by connector " + to_string(conn));
      }
    }
    std::erase_if(c.subcomponents, [&](const SubcomponentDecl& s) { return s.name == o.name; });
    touch(c);
  }

  void remove_parameter(ComponentDefinition& c, const ops::RemoveParameter& o) {
    if (!c.find_parameter(o.name)) fail(kRemoveMissing, "'" + c.name + "' has no parameter '" + o.name + "'");
    std::erase_if(c.parameters, [&](const ParameterDecl& p) { return p.name == o.name; });
    touch(c);
  }

  // ---- connectors -------------------------------------------------------

  void connect(ComponentDefinition& c, const ops::Connect& o) {
    if (c.find_connector(o.source, o.target)) {
      fail(kAddDup, "'" + c.name + "' already has connector " + to_string(o.source) + " -> " +
                        to_string(o.target));
    }
    for (bool is_source : {true, false}) {
      auto problem = endpoint_problem(c, is_source ? o.source : o.target, is_source, repo_,
                                      /*require_definition=*/true);
      if (!problem.empty()) fail(kConnInvalid, problem);
    }
    for (const auto& conn : c.connectors) {
      if (conn.target == o.target) {
        fail(kConnInvalid, "'" + to_string(o.target) + "' already receives data from " +
                               to_string(conn.source));
      }
    }
    c.connectors.push_back(ConnectorDecl{o.source, o.target, ConnectorOrigin::Explicit, op_->loc});
    touch(c, ElementId::connector(o.source, o.target));
  }

  void disconnect(ComponentDefinition& c, const ops::Disconnect& o) {
    if (!c.find_connector(o.source, o.target)) {
      fail(kDisconnectMissing, "'" + c.name + "' has no explicit connector " + to_string(o.source) +
                                   " -> " + to_string(o.target));
    }
    std::erase_if(c.connectors, [&](const ConnectorDecl& k) { return k.same_endpoints(o.source, o.target); });
    touch(c);
  }

  // ---- rename -----------------------------------------------------------

  void rename(ComponentDefinition& c, const ops::Rename& o) {
    switch (o.kind) {
      case ops::RenameKind::Port:
        rename_port(c, o.from, o.to);
        break;
      case ops::RenameKind::Component:
        rename_subcomponent(c, o.from, o.to);
        break;
      case ops::RenameKind::Parameter:
        rename_parameter(c, o.from, o.to);
        break;
    }
  }

  void rename_port(ComponentDefinition& c, const std::string& from, const std::string& to) {
    auto* port = c.find_port(from);
    if (!port) fail(kRenameBad, "'" + c.name + "' has no port '" + from + "'");
    if (c.find_port(to)) fail(kRenameBad, "'" + c.name + "' already has a port '" + to + "'");
    port->name = to;
    touch(c, ElementId::port(to));

    for (auto& conn : c.connectors) {
      bool changed = false;
      for (PortRef* ref : {&conn.source, &conn.target}) {
        if (ref->is_local() && ref->port == from) {
          ref->port = to;
          changed = true;
        }
      }
      if (changed) touch(c, ElementId::connector(conn.source, conn.target));
    }

    // Components that instantiate c see the port through their subcomponents.
    for (auto& [_, user] : repo_.components) {
      std::set<std::string> instances;
      for (const auto& s : user.subcomponents) {
        if (s.type == c.name) instances.insert(s.name);
      }
      if (instances.empty()) continue;
      for (auto& conn : user.connectors) {
        bool changed = false;
        for (PortRef* ref : {&conn.source, &conn.target}) {
          if (ref->owner && instances.contains(*ref->owner) && ref->port == from) {
            ref->port = to;
            changed = true;
          }
        }
        if (changed) touch(user, ElementId::connector(conn.source, conn.target));
      }
    }
  }

  void rename_subcomponent(ComponentDefinition& c, const std::string& from, const std::string& to) {
    auto* sub = c.find_subcomponent(from);
    if (!sub) fail(kRenameBad, "'" + c.name + "' has no subcomponent '" + from + "'");
    if (c.find_subcomponent(to)) fail(kRenameBad, "'" + c.name + "' already has a subcomponent '" + to + "'");
    sub->name = to;
    touch(c, ElementId::subcomponent(to));
    for (auto& conn : c.connectors) {
      bool changed = false;
      for (PortRef* ref : {&conn.source, &conn.target}) {
        if (ref->owner == from) {
          ref->owner = to;
          changed = true;
        }
      }
      if (changed) touch(c, ElementId::connector(conn.source, conn.target));
    }
  }

  void rename_parameter(ComponentDefinition& c, const std::string& from, const std::string& to) {
    auto idx = c.parameter_index(from);
    if (!idx) fail(kRenameBad, "'" + c.name + "' has no parameter '" + from + "'");
    if (c.find_parameter(to)) fail(kRenameBad, "'" + c.name + "' already has a parameter '" + to + "'");
    c.parameters[*idx].name = to;
    touch(c, ElementId::parameter(to));
    for (auto& s : c.subcomponents) {
      for (auto& arg : s.args) {
        if (auto* ref = std::get_if<ParameterRef>(&arg); ref && ref->name == from) {
          ref->name = to;
          touch(c, ElementId::subcomponent(s.name));
        }
      }
    }
  }

  // ---- replace / configure ----------------------------------------------

  void replace(ComponentDefinition& c, const ops::Replace& o) {
    auto* sub = c.find_subcomponent(o.name);
    if (!sub) fail(kRemoveMissing, "'" + c.name + "' has no subcomponent '" + o.name + "'");
    const auto* old_def = repo_.find(sub->type);
    if (!old_def) fail(kReplaceIncompatible, "component type '" + sub->type + "' of '" + o.name + "' is unknown");
    const auto* new_def = repo_.find(o.with_type);
    if (!new_def) fail(kReplaceIncompatible, "replacement type '" + o.with_type + "' is unknown");

    const auto mapping = interface_compatible(*old_def, *new_def, repo_.types);
    if (mapping.status == Compatibility::Incompatible) {
      fail(kReplaceIncompatible, "'" + old_def->name + "' and '" + new_def->name +
                                     "' have incompatible interfaces: " + mapping.reason);
    }
    if (mapping.status == Compatibility::Ambiguous) {
      fail(kReplaceAmbiguous, "cannot replace '" + o.name + "' with '" + new_def->name + "': " + mapping.reason);
    }

    const std::string new_name = o.new_name.value_or(o.name);
    if (new_name != o.name && c.find_subcomponent(new_name)) {
      fail(kAddDup, "'" + c.name + "' already has a subcomponent '" + new_name + "'");
    }
    if (new_def->parameters.size() != old_def->parameters.size()) sub->args.clear();
    sub->type = new_def->name;
    sub->name = new_name;
    touch(c, ElementId::subcomponent(new_name));

    for (auto& conn : c.connectors) {
      bool changed = false;
      if (conn.source.owner == o.name) {
        auto it = mapping.outgoing.find(conn.source.port);
        conn.source = PortRef::of(new_name, it == mapping.outgoing.end() ? conn.source.port : it->second);
        changed = true;
      }
      if (conn.target.owner == o.name) {
        auto it = mapping.incoming.find(conn.target.port);
        conn.target = PortRef::of(new_name, it == mapping.incoming.end() ? conn.target.port : it->second);
        changed = true;
      }
      if (changed) touch(c, ElementId::connector(conn.source, conn.target));
    }
  }

  void modify_config(ComponentDefinition& c, const ops::ModifyConfig& o) {
    auto* sub = c.find_subcomponent(o.subcomponent);
    if (!sub) fail(kConfigNoSub, "'" + c.name + "' has no subcomponent '" + o.subcomponent + "'");
    const auto* def = repo_.find(sub->type);
    if (!def) {
      fail(kConfigNoParam, "component type '" + sub->type + "' of '" + sub->name +
                               "' is unknown, so it declares no configuration parameters");
    }
    for (const auto& a : o.assignments) {
      auto idx = def->parameter_index(a.parameter);
      if (!idx) {
        fail(kConfigNoParam, "'" + def->name + "' (type of '" + sub->name +
                                 "') has no configuration parameter '" + a.parameter + "'");
      }
      if (*idx >= sub->args.size()) {
        fail(kConfigNoParam, "subcomponent '" + sub->name + "' has no argument for parameter '" +
                                 a.parameter + "' to redefine");
      }
      sub->args[*idx] = a.value;
    }
    touch(c, ElementId::subcomponent(sub->name));
  }

  // ---- autoconnect ------------------------------------------------------

  void expand(ComponentDefinition& c) {
    if (c.autoconnect == AutoconnectMode::Off) {
      touch(c);
      return;
    }
    expand(c, resolve_autoconnect(c, repo_).connectors);
  }

  void expand(ComponentDefinition& c, const std::vector<ConnectorDecl>& implicit) {
    touch(c);
    if (c.autoconnect == AutoconnectMode::Off) return;
    for (const auto& conn : implicit) {
      c.connectors.push_back(ConnectorDecl{conn.source, conn.target, ConnectorOrigin::Explicit, op_->loc});
      touch(c, ElementId::connector(conn.source, conn.target));
    }
    c.autoconnect = AutoconnectMode::Off;
  }

  void introduce(ComponentDefinition& c, AutoconnectMode mode) {
    touch(c);
    c.autoconnect = mode;
    bool removed = true;
    while (removed) {
      removed = false;
      for (std::size_t i = 0; i < c.connectors.size(); ++i) {
        ComponentDefinition without = c;
        const ConnectorDecl candidate = without.connectors[i];
        without.connectors.erase(without.connectors.begin() + static_cast<std::ptrdiff_t>(i));
        const auto recreated = resolve_autoconnect(without, repo_).connectors;
        const bool recreatable = std::any_of(recreated.begin(), recreated.end(), [&](const ConnectorDecl& k) {
          return k.same_endpoints(candidate.source, candidate.target);
        });
        if (recreatable) {
          c.connectors = std::move(without.connectors);
          removed = true;
          break;
        }
      }
    }
  }

  void remove_unreachable_in(ComponentDefinition& c) {
    touch(c);
    if (!c.is_decomposed()) return;

    for (;;) {
      const auto all = effective_connectors(c, repo_);
      std::set<std::string> dead;
      for (const auto& s : c.subcomponents) {
        const bool has_outgoing = std::any_of(all.begin(), all.end(),
                                              [&](const ConnectorDecl& k) { return k.source.owner == s.name; });
        if (!has_outgoing) dead.insert(s.name);
      }
      if (dead.empty()) break;
      std::erase_if(c.subcomponents, [&](const SubcomponentDecl& s) { return dead.contains(s.name); });
      std::erase_if(c.connectors, [&](const ConnectorDecl& k) {
        return (k.source.owner && dead.contains(*k.source.owner)) ||
               (k.target.owner && dead.contains(*k.target.owner));
      });
    }

    const auto all = effective_connectors(c, repo_);
    std::set<std::string> used;
    for (const auto& k : all) {
      if (k.source.is_local()) used.insert(k.source.port);
      if (k.target.is_local()) used.insert(k.target.port);
    }
    std::set<std::string> unused;
    for (const auto& p : c.ports) {
      if (!used.contains(p.name)) unused.insert(p.name);
    }
    if (unused.empty()) return;
    std::erase_if(c.ports, [&](const PortDecl& p) { return unused.contains(p.name); });

    for (auto& [_, user] : repo_.components) {
      std::set<std::string> instances;
      for (const auto& s : user.subcomponents) {
        if (s.type == c.name) instances.insert(s.name);
      }
      if (instances.empty()) continue;
      const auto before = user.connectors.size();
      std::erase_if(user.connectors, [&](const ConnectorDecl& k) {
        for (const PortRef* ref : {&k.source, &k.target}) {
          if (ref->owner && instances.contains(*ref->owner) && unused.contains(ref->port)) return true;
        }
        return false;
      });
      if (user.connectors.size() != before) touch(user);
    }
  }

  ModelRepository& repo_;
  std::map<std::string, TouchSet, std::less<>>& touched_;
  const ModificationOp* op_ = nullptr;
};

ModelRepository run_scoped(const ModelRepository& repo, const Scope& scope, const ModificationOp& op) {
  ModelRepository work = repo;
  std::map<std::string, TouchSet, std::less<>> touched;
  Editor editor(work, touched);
  if (scope.component) {
    editor.apply(*scope.component, op);
  } else {
    editor.apply_global(op);
  }
  return work;
}

}  // namespace

ModelRepository apply_op(const ModelRepository& repo, std::string_view target, const ModificationOp& op) {
  return run_scoped(repo, Scope::of(std::string(target)), op);
}

ModelRepository expand_autoconnect(const ModelRepository& repo, const Scope& scope) {
  return run_scoped(repo, scope, ModificationOp{ops::ExpandAutoconnect{}, {}});
}

ModelRepository introduce_autoconnect(const ModelRepository& repo, AutoconnectMode mode, const Scope& scope) {
  return run_scoped(repo, scope, ModificationOp{ops::IntroduceAutoconnect{mode}, {}});
}

ModelRepository remove_unreachable(const ModelRepository& repo, const Scope& scope) {
  return run_scoped(repo, scope, ModificationOp{ops::RemoveUnreachable{}, {}});
}

DeltaApplication apply_delta(const ModelRepository& repo, const DeltaModel& delta) {
  DeltaApplication result{repo, {}, {}};
  Editor editor(result.repo, result.touched);
  const auto annotate = [&](const Error& e) {
    Diagnostic d = e.diagnostic();
    d.message = "delta '" + delta.name + "': " + d.message;
    return Error(std::move(d));
  };

  for (const auto& block : delta.body) {
    try {
      if (block.is_global()) {
        for (const auto& op : block.ops) editor.apply_global(op);
        continue;
      }
      if (block.ops.empty()) {
        editor.set_op(nullptr);
        editor.component(*block.component);
      }
      for (const auto& op : block.ops) editor.apply(*block.component, op);
    } catch (const Error& e) {
      if (e.diagnostic().location.file.empty() && !block.loc.file.empty()) {
        Diagnostic d = e.diagnostic();
        d.location = block.loc;
        throw annotate(Error(std::move(d)));
      }
      throw annotate(e);
    }
  }

  for (const auto& [name, ids] : result.touched) {
    if (const auto* c = result.repo.find(name)) result.report.merge(check_local(*c, ids, result.repo));
  }
  sort_diagnostics(result.report.diagnostics);
  if (const auto* err = result.report.first_error()) throw annotate(Error(*err));
  return result;
}

}  // namespace deltaarc
