#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "deltaarc/generation.hpp"
#include "deltaarc/parser.hpp"

namespace fs = std::filesystem;

namespace deltaarc::testing {

fs::path corpus_dir() { return fs::path(DELTAARC_CORPUS_DIR); }
fs::path multicopter_core() { return corpus_dir() / "multicopter" / "core"; }
fs::path multicopter_deltas() { return corpus_dir() / "multicopter" / "deltas"; }
fs::path multicopter_config() { return multicopter_deltas() / "DeltaWolf.deltacfg"; }
fs::path fig3_dir() { return corpus_dir() / "fig3"; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TempDir::TempDir() {
  static int counter = 0;
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("deltaarc-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

ComponentDefinition component(const std::string& text, const std::string& file) {
  return parse_component_text(SourceUnit{file, SourceKind::Component, text});
}

DeltaModel delta(const std::string& text, const std::string& file) {
  return parse_delta_text(SourceUnit{file, SourceKind::Delta, text});
}

ProductConfiguration config(const std::string& text, const std::string& file) {
  return parse_config_text(SourceUnit{file, SourceKind::Config, text});
}

ModelRepository repo_of(const std::vector<std::string>& texts) {
  ModelRepository repo;
  for (const auto& t : texts) repo.add_component(component(t));
  repo.register_port_types();
  return repo;
}

ModelRepository multicopter_core_repo() { return load_repository({multicopter_core()}); }

DeltaMap multicopter_delta_map() {
  DeltaMap out;
  for (const auto& entry : fs::directory_iterator(multicopter_deltas())) {
    if (entry.path().extension() != ".delta") continue;
    auto d = parse_delta_text(read_source(entry.path()));
    std::string name = d.name;
    out.emplace(std::move(name), std::move(d));
  }
  return out;
}

ModificationOp op(OpKind kind) { return ModificationOp{std::move(kind), {}}; }

std::vector<std::pair<std::string, std::string>> connector_pairs(const ComponentDefinition& c) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& k : c.connectors) out.emplace_back(to_string(k.source), to_string(k.target));
  std::sort(out.begin(), out.end());
  return out;
}

namespace oracle {

bool conforms(const std::vector<std::string>& types, const std::vector<std::pair<std::string, std::string>>& edges,
              const std::string& sub, const std::string& super) {
  const std::size_t n = types.size();
  auto index = [&](const std::string& t) {
    return static_cast<std::size_t>(std::find(types.begin(), types.end(), t) - types.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const auto& [a, b] : edges) reach[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  const auto i = index(sub);
  const auto j = index(super);
  if (i == n || j == n) return sub == super;
  return reach[i][j];
}

namespace {

bool type_ok(const TypeHierarchy& h, const std::string& sub, const std::string& super) {
  std::vector<std::string> types(h.declared().begin(), h.declared().end());
  return sub == super || conforms(types, h.edges(), sub, super);
}

std::vector<const PortDecl*> ports_of(const ComponentDefinition& c, Direction d) {
  std::vector<const PortDecl*> out;
  for (const auto& p : c.ports) {
    if (p.direction == d) out.push_back(&p);
  }
  return out;
}

// Calls `accept` for every injective assignment of `from` into `to` that
// satisfies `ok`; stops when `accept` returns true.
bool injections(const std::vector<const PortDecl*>& from, const std::vector<const PortDecl*>& to,
                const std::function<bool(const PortDecl&, const PortDecl&)>& ok) {
  std::vector<bool> used(to.size(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == from.size()) return true;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j] || !ok(*from[i], *to[j])) continue;
      used[j] = true;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

std::string owner_of(const PortRef& r) { return r.owner.value_or(""); }

}  // namespace

bool interface_mapping_exists(const ComponentDefinition& replaced, const ComponentDefinition& replacement,
                              const TypeHierarchy& types) {
  const auto old_in = ports_of(replaced, Direction::In);
  const auto new_in = ports_of(replacement, Direction::In);
  const auto old_out = ports_of(replaced, Direction::Out);
  const auto new_out = ports_of(replacement, Direction::Out);
  if (old_in.size() != new_in.size() || new_out.size() < old_out.size()) return false;
  const bool ins = injections(old_in, new_in, [&](const PortDecl& o, const PortDecl& n) {
    return type_ok(types, o.type, n.type);
  });
  const bool outs = injections(old_out, new_out, [&](const PortDecl& o, const PortDecl& n) {
    return type_ok(types, n.type, o.type);
  });
  return ins && outs;
}

bool mapping_valid(const ComponentDefinition& replaced, const ComponentDefinition& replacement,
                   const TypeHierarchy& types, const std::map<std::string, std::string>& incoming,
                   const std::map<std::string, std::string>& outgoing) {
  auto check = [&](Direction d, const std::map<std::string, std::string>& m) {
    const auto olds = ports_of(replaced, d);
    if (m.size() != olds.size()) return false;
    std::set<std::string> images;
    for (const auto* o : olds) {
      auto it = m.find(o->name);
      if (it == m.end()) return false;
      const auto* n = replacement.find_port(it->second);
      if (!n || n->direction != d || !images.insert(n->name).second) return false;
      const bool ok = d == Direction::In ? type_ok(types, o->type, n->type) : type_ok(types, n->type, o->type);
      if (!ok) return false;
    }
    return true;
  };
  return ports_of(replaced, Direction::In).size() == ports_of(replacement, Direction::In).size() &&
         check(Direction::In, incoming) && check(Direction::Out, outgoing);
}

std::set<std::pair<std::string, std::string>> autoconnect(const ComponentDefinition& c, const ModelRepository& repo) {
  std::set<std::pair<std::string, std::string>> out;
  if (c.autoconnect == AutoconnectMode::Off) return out;
  std::vector<std::pair<PortRef, const PortDecl*>> endpoints;
  for (const auto& p : c.ports) endpoints.emplace_back(PortRef::local(p.name), &p);
  for (const auto& s : c.subcomponents) {
    for (const auto& p : repo.find(s.type)->ports) endpoints.emplace_back(PortRef::of(s.name, p.name), &p);
  }
  auto is_source = [](const std::pair<PortRef, const PortDecl*>& e) {
    return e.first.is_local() == (e.second->direction == Direction::In);
  };
  for (const auto& t : endpoints) {
    if (is_source(t)) continue;
    const bool fed = std::any_of(c.connectors.begin(), c.connectors.end(),
                                 [&](const ConnectorDecl& k) { return k.target == t.first; });
    if (fed) continue;
    std::vector<PortRef> matches;
    for (const auto& s : endpoints) {
      if (!is_source(s) || owner_of(s.first) == owner_of(t.first)) continue;
      if (c.autoconnect == AutoconnectMode::Port && s.first.port != t.first.port) continue;
      if (!type_ok(repo.types, s.second->type, t.second->type)) continue;
      matches.push_back(s.first);
    }
    if (matches.size() == 1) out.emplace(to_string(matches.front()), to_string(t.first));
  }
  return out;
}

std::set<ApplicationOrder> filter_permutations(const ProductConfiguration& config, const DeltaMap& deltas) {
  std::set<ApplicationOrder> out;
  ApplicationOrder perm = config.deltas;
  std::sort(perm.begin(), perm.end());
  do {
    AppliedSet applied;
    bool ok = true;
    for (const auto& name : perm) {
      if (!eval_constraint(deltas.at(name).constraint, applied)) {
        ok = false;
        break;
      }
      applied.insert(name);
    }
    if (ok) out.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Port-mode matching for a single data type: same name, different owner.
std::vector<std::pair<PortRef, PortRef>> single_type_implicit(const ComponentDefinition& c,
                                                              const ModelRepository& repo) {
  std::vector<std::pair<PortRef, PortRef>> out;
  if (c.autoconnect == AutoconnectMode::Off) return out;
  std::vector<PortRef> sources;
  std::vector<PortRef> targets;
  for (const auto& p : c.ports) (p.direction == Direction::In ? sources : targets).push_back(PortRef::local(p.name));
  for (const auto& s : c.subcomponents) {
    for (const auto& p : repo.find(s.type)->ports) {
      (p.direction == Direction::Out ? sources : targets).push_back(PortRef::of(s.name, p.name));
    }
  }
  for (const auto& t : targets) {
    bool fed = false;
    for (const auto& k : c.connectors) fed = fed || k.target == t;
    if (fed) continue;
    std::vector<PortRef> matches;
    for (const auto& s : sources) {
      if (s.port == t.port && owner_of(s) != owner_of(t)) matches.push_back(s);
    }
    if (matches.size() == 1) out.emplace_back(matches.front(), t);
  }
  return out;
}

std::vector<std::pair<PortRef, PortRef>> union_of(const ComponentDefinition& c, const ModelRepository& repo) {
  auto all = single_type_implicit(c, repo);
  for (const auto& k : c.connectors) all.emplace_back(k.source, k.target);
  return all;
}

}  // namespace

ModelRepository remove_unreachable(const ModelRepository& repo, const std::string& target) {
  ModelRepository out = repo;
  ComponentDefinition& c = *out.find(target);
  if (c.subcomponents.empty()) return out;

  // Every round removes all subcomponents without an outgoing connector at
  // once, then recomputes the union, which autoconnect may have changed.
  for (;;) {
    const auto all = union_of(c, out);
    std::vector<std::string> doomed;
    for (const auto& s : c.subcomponents) {
      bool feeds = false;
      for (const auto& [src, tgt] : all) feeds = feeds || src.owner == s.name;
      if (!feeds) doomed.push_back(s.name);
    }
    if (doomed.empty()) break;
    auto is_doomed = [&](const std::optional<std::string>& owner) {
      return owner && std::count(doomed.begin(), doomed.end(), *owner) > 0;
    };
    std::vector<SubcomponentDecl> subs;
    for (const auto& s : c.subcomponents) {
      if (!is_doomed(s.name)) subs.push_back(s);
    }
    c.subcomponents = subs;
    std::vector<ConnectorDecl> kept;
    for (const auto& k : c.connectors) {
      if (!is_doomed(k.source.owner) && !is_doomed(k.target.owner)) kept.push_back(k);
    }
    c.connectors = kept;
  }

  const auto all = union_of(c, out);
  std::vector<std::string> dropped;
  std::vector<PortDecl> kept;
  for (const auto& p : c.ports) {
    bool used = false;
    for (const auto& [s, t] : all) used = used || s == PortRef::local(p.name) || t == PortRef::local(p.name);
    if (used) {
      kept.push_back(p);
    } else {
      dropped.push_back(p.name);
    }
  }
  c.ports = kept;

  for (auto& [_, user] : out.components) {
    std::vector<ConnectorDecl> survivors;
    for (const auto& k : user.connectors) {
      bool dead = false;
      for (const PortRef* r : {&k.source, &k.target}) {
        if (!r->owner) continue;
        const auto* sub = user.find_subcomponent(*r->owner);
        if (sub && sub->type == target && std::count(dropped.begin(), dropped.end(), r->port)) dead = true;
      }
      if (!dead) survivors.push_back(k);
    }
    user.connectors = survivors;
  }
  return out;
}

std::map<std::string, std::multiset<std::pair<std::string, std::string>>> renamed_connectors(
    const ModelRepository& repo, const std::string& component, ops::RenameKind kind, const std::string& from,
    const std::string& to) {
  std::map<std::string, std::multiset<std::pair<std::string, std::string>>> out;
  for (const auto& [name, user] : repo.components) {
    auto& bag = out[name];
    for (const auto& k : user.connectors) {
      auto subst = [&](PortRef r) {
        if (kind == ops::RenameKind::Port) {
          if (!r.owner && name == component && r.port == from) r.port = to;
          if (r.owner) {
            const auto* sub = user.find_subcomponent(*r.owner);
            if (sub && sub->type == component && r.port == from) r.port = to;
          }
        } else if (kind == ops::RenameKind::Component) {
          if (name == component && r.owner == from) r.owner = to;
        }
        return to_string(r);
      };
      bag.emplace(subst(k.source), subst(k.target));
    }
  }
  return out;
}

}  // namespace oracle

// ---- generators -------------------------------------------------------------

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
int between(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return between(rng, 0, 1) == 1; }

const std::vector<std::string> kPortPool = {"a", "b", "c", "d", "e", "f"};

std::vector<std::string> shuffled_pool(Rng& rng) {
  auto pool = kPortPool;
  std::shuffle(pool.begin(), pool.end(), rng);
  return pool;
}

ComponentDefinition atomic(Rng& rng, const std::string& name, const std::vector<std::string>& data_types) {
  ComponentDefinition c;
  c.name = name;
  auto pool = shuffled_pool(rng);
  const int ins = between(rng, 1, 3);
  const int outs = between(rng, 1, 2);
  for (int i = 0; i < ins + outs; ++i) {
    c.ports.push_back(PortDecl{i < ins ? Direction::In : Direction::Out,
                               data_types[pick(rng, data_types.size())], pool[static_cast<std::size_t>(i)], {}});
  }
  return c;
}

// Random explicit connectors inside `c`, each target fed at most once.
void wire(Rng& rng, ComponentDefinition& c, const ModelRepository& repo, int attempts) {
  std::vector<PortRef> sources;
  std::vector<PortRef> targets;
  for (const auto& p : c.ports) (p.direction == Direction::In ? sources : targets).push_back(PortRef::local(p.name));
  for (const auto& s : c.subcomponents) {
    const auto* def = s.type == c.name ? &c : repo.find(s.type);
    for (const auto& p : def->ports) {
      (p.direction == Direction::Out ? sources : targets).push_back(PortRef::of(s.name, p.name));
    }
  }
  if (sources.empty() || targets.empty()) return;
  for (int i = 0; i < attempts; ++i) {
    const auto& s = sources[pick(rng, sources.size())];
    const auto& t = targets[pick(rng, targets.size())];
    if (s.owner == t.owner) continue;
    bool fed = false;
    for (const auto& k : c.connectors) fed = fed || k.target == t;
    if (fed) continue;
    c.connectors.push_back(ConnectorDecl{s, t, ConnectorOrigin::Explicit, {}});
  }
}

}  // namespace

ModelRepository random_architecture(Rng& rng) {
  ModelRepository repo;
  const std::vector<std::string> single = {"T"};
  const int leaf_count = between(rng, 1, 3);
  for (int i = 0; i < leaf_count; ++i) repo.add_component(atomic(rng, "L" + std::to_string(i), single));

  ComponentDefinition top;
  top.name = "Top";
  top.autoconnect = coin(rng) ? AutoconnectMode::Port : AutoconnectMode::Off;
  auto pool = shuffled_pool(rng);
  const int ins = between(rng, 0, 3);
  const int outs = between(rng, 1, 3);
  for (int i = 0; i < ins + outs; ++i) {
    top.ports.push_back(PortDecl{i < ins ? Direction::In : Direction::Out, "T", pool[static_cast<std::size_t>(i)], {}});
  }
  const int subs = between(rng, 0, 8);
  for (int i = 0; i < subs; ++i) {
    top.subcomponents.push_back(
        SubcomponentDecl{"L" + std::to_string(pick(rng, static_cast<std::size_t>(leaf_count))), "s" + std::to_string(i), {}, {}});
  }
  wire(rng, top, repo, between(rng, 0, 16));
  if (top.connectors.size() > 16) top.connectors.resize(16);

  if (coin(rng)) {
    ComponentDefinition outer;
    outer.name = "Outer";
    outer.subcomponents.push_back(SubcomponentDecl{"Top", "top", {}, {}});
    for (const auto& p : top.ports) {
      if (coin(rng)) continue;
      if (p.direction == Direction::In) {
        outer.ports.push_back(PortDecl{Direction::In, "T", "x" + p.name, {}});
        outer.connectors.push_back(
            ConnectorDecl{PortRef::local("x" + p.name), PortRef::of("top", p.name), ConnectorOrigin::Explicit, {}});
      } else {
        outer.ports.push_back(PortDecl{Direction::Out, "T", "y" + p.name, {}});
        outer.connectors.push_back(
            ConnectorDecl{PortRef::of("top", p.name), PortRef::local("y" + p.name), ConnectorOrigin::Explicit, {}});
      }
    }
    repo.add_component(std::move(outer));
  }
  repo.add_component(std::move(top));
  repo.register_port_types();
  return repo;
}

ModelRepository random_rename_repo(Rng& rng) {
  ModelRepository repo;
  const std::vector<std::string> data_types = {"T", "U"};
  const std::vector<std::string> param_pool = {"count", "rate"};
  const int n = between(rng, 2, 4);
  // Built from the last component backwards so that subcomponent types exist.
  for (int i = n - 1; i >= 0; --i) {
    ComponentDefinition c = atomic(rng, "C" + std::to_string(i), data_types);
    const int params = between(rng, 0, 2);
    for (int p = 0; p < params; ++p) c.parameters.push_back(ParameterDecl{param_pool[static_cast<std::size_t>(p)], {}});
    if (i < n - 1) {
      const int subs = between(rng, 0, 3);
      for (int s = 0; s < subs; ++s) {
        const auto& def = *repo.find("C" + std::to_string(between(rng, i + 1, n - 1)));
        SubcomponentDecl sub{def.name, "s" + std::to_string(s), {}, {}};
        for (std::size_t a = 0; a < def.parameters.size(); ++a) {
          if (!c.parameters.empty() && coin(rng)) {
            sub.args.push_back(ParameterRef{c.parameters[pick(rng, c.parameters.size())].name});
          } else {
            sub.args.push_back(std::int64_t{between(rng, 1, 9)});
          }
        }
        c.subcomponents.push_back(std::move(sub));
      }
      c.autoconnect = coin(rng) ? AutoconnectMode::Port : AutoconnectMode::Off;
      wire(rng, c, repo, between(rng, 0, 8));
    }
    repo.add_component(std::move(c));
  }
  repo.register_port_types();
  return repo;
}

RenameCase random_rename(Rng& rng, const ModelRepository& repo) {
  for (;;) {
    auto it = repo.components.begin();
    std::advance(it, static_cast<long>(pick(rng, repo.components.size())));
    const auto& c = it->second;
    const auto kind = static_cast<ops::RenameKind>(between(rng, 0, 2));
    std::string from;
    if (kind == ops::RenameKind::Port && !c.ports.empty()) from = c.ports[pick(rng, c.ports.size())].name;
    if (kind == ops::RenameKind::Component && !c.subcomponents.empty()) {
      from = c.subcomponents[pick(rng, c.subcomponents.size())].name;
    }
    if (kind == ops::RenameKind::Parameter && !c.parameters.empty()) {
      from = c.parameters[pick(rng, c.parameters.size())].name;
    }
    if (!from.empty()) return RenameCase{c.name, kind, from, from + "Renamed"};
  }
}

std::pair<ProductConfiguration, DeltaMap> random_delta_sequence(Rng& rng, const ModelRepository& core) {
  const std::vector<std::string> types = {"Integer", "Boolean", "FloatArray", "PowerOutput", "SteeringCmd"};
  const std::vector<std::string> new_ports = {"extra", "heightValue", "engine5", "powerOutput", "gyroValues"};
  const std::vector<std::string> leaf_types = {"GyroEval", "AccEval", "PressureEval", "HeightComparator",
                                               "HeightAdaptor", "OutputProcessor"};
  const std::vector<std::string> new_subs = {"x1", "x2", "hc", "pEval"};
  std::vector<const ComponentDefinition*> comps;
  for (const auto& [_, c] : core.components) comps.push_back(&c);

  auto random_ref = [&](const ComponentDefinition& c, bool source) -> PortRef {
    std::vector<PortRef> refs;
    for (const auto& p : c.ports) {
      if ((p.direction == Direction::In) == source) refs.push_back(PortRef::local(p.name));
    }
    for (const auto& s : c.subcomponents) {
      for (const auto& p : core.find(s.type)->ports) {
        if ((p.direction == Direction::Out) == source) refs.push_back(PortRef::of(s.name, p.name));
      }
    }
    if (refs.empty()) return PortRef::local("nothing");
    return refs[pick(rng, refs.size())];
  };

  auto random_op = [&](const ComponentDefinition& c) -> OpKind {
    switch (between(rng, 0, 12)) {
      case 0:
        return ops::AddPort{PortDecl{coin(rng) ? Direction::In : Direction::Out, types[pick(rng, types.size())],
                                     new_ports[pick(rng, new_ports.size())], {}}};
      case 1:
        return ops::AddSubcomponent{
            SubcomponentDecl{leaf_types[pick(rng, leaf_types.size())], new_subs[pick(rng, new_subs.size())], {}, {}}};
      case 2:
        return ops::RemovePort{c.ports.empty() ? "nothing" : c.ports[pick(rng, c.ports.size())].name};
      case 3:
        return ops::RemoveSubcomponent{
            c.subcomponents.empty() ? "x1" : c.subcomponents[pick(rng, c.subcomponents.size())].name};
      case 4:
        return ops::Connect{random_ref(c, true), random_ref(c, false)};
      case 5:
        return ops::Disconnect{random_ref(c, true), random_ref(c, false)};
      case 6:
        return ops::Rename{ops::RenameKind::Port, c.ports.empty() ? "nothing" : c.ports[pick(rng, c.ports.size())].name,
                           "renamed" + std::to_string(between(rng, 0, 2))};
      case 7:
        return ops::Rename{ops::RenameKind::Component,
                           c.subcomponents.empty() ? "x1" : c.subcomponents[pick(rng, c.subcomponents.size())].name,
                           "sub" + std::to_string(between(rng, 0, 2))};
      case 8:
        return ops::SetAutoconnect{static_cast<AutoconnectMode>(between(rng, 0, 2))};
      case 9:
        return ops::ModifyConfig{
            c.subcomponents.empty() ? "scp" : c.subcomponents[pick(rng, c.subcomponents.size())].name,
            {ops::Assignment{"engineCount", std::int64_t{between(rng, 4, 8)}}}};
      case 10:
        return ops::ExpandAutoconnect{};
      case 11:
        return ops::IntroduceAutoconnect{coin(rng) ? AutoconnectMode::Port : AutoconnectMode::Type};
      default:
        return ops::RemoveUnreachable{};
    }
  };

  ProductConfiguration cfg;
  cfg.name = "Random";
  DeltaMap deltas;
  const int count = between(rng, 1, 3);
  for (int d = 0; d < count; ++d) {
    DeltaModel dm;
    dm.name = "R" + std::to_string(d);
    const int blocks = between(rng, 1, 3);
    for (int b = 0; b < blocks; ++b) {
      DeltaBlock block;
      if (between(rng, 0, 5) == 0) {
        const int which = between(rng, 0, 2);
        block.ops.push_back(op(which == 0   ? OpKind{ops::ExpandAutoconnect{}}
                               : which == 1 ? OpKind{ops::IntroduceAutoconnect{AutoconnectMode::Port}}
                                            : OpKind{ops::RemoveUnreachable{}}));
      } else {
        const auto& c = *comps[pick(rng, comps.size())];
        block.component = c.name;
        const int n = between(rng, 1, 3);
        for (int i = 0; i < n; ++i) block.ops.push_back(op(random_op(c)));
      }
      dm.body.push_back(std::move(block));
    }
    cfg.deltas.push_back(dm.name);
    deltas.emplace(dm.name, std::move(dm));
  }
  return {cfg, deltas};
}

}  // namespace deltaarc::testing
