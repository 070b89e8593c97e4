#include "deltaarc/compatibility.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace deltaarc {

namespace {

using Fits = std::function<bool(const PortDecl& from, const PortDecl& to)>;

std::vector<const PortDecl*> ports_of(const ComponentDefinition& c, Direction d) {
  std::vector<const PortDecl*> out;
  for (const auto& p : c.ports) {
    if (p.direction == d) out.push_back(&p);
  }
  return out;
}

// Kuhn's augmenting paths; true iff every `from` port can be matched.
bool full_matching_exists(const std::vector<const PortDecl*>& from,
                          const std::vector<const PortDecl*>& to, const Fits& fits) {
  std::vector<int> owner(to.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t i, std::vector<bool>& visited) {
        for (std::size_t j = 0; j < to.size(); ++j) {
          if (visited[j] || !fits(*from[i], *to[j])) continue;
          visited[j] = true;
          if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), visited)) {
            owner[j] = static_cast<int>(i);
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::vector<bool> visited(to.size(), false);
    if (!augment(i, visited)) return false;
  }
  return true;
}

// Name pairing, then repeated unique-candidate pairing. nullopt when the
// rule leaves some port undecided.
std::optional<std::map<std::string, std::string>> select_mapping(
    const std::vector<const PortDecl*>& from, const std::vector<const PortDecl*>& to,
    const Fits& fits) {
  std::map<std::string, std::string> mapping;
  std::vector<bool> used(to.size(), false);
  std::vector<bool> done(from.size(), false);

  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!used[j] && to[j]->name == from[i]->name && fits(*from[i], *to[j])) {
        mapping[from[i]->name] = to[j]->name;
        used[j] = done[i] = true;
        break;
      }
    }
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (done[i]) continue;
      std::optional<std::size_t> only;
      int count = 0;
      for (std::size_t j = 0; j < to.size(); ++j) {
        if (!used[j] && fits(*from[i], *to[j])) {
          only = j;
          ++count;
        }
      }
      if (count == 1) {
        mapping[from[i]->name] = to[*only]->name;
        used[*only] = done[i] = true;
        progress = true;
      }
    }
  }

  for (bool d : done) {
    if (!d) return std::nullopt;
  }
  return mapping;
}

}  // namespace

InterfaceMapping interface_compatible(const ComponentDefinition& replaced,
                                      const ComponentDefinition& replacement,
                                      const TypeHierarchy& types) {
  InterfaceMapping result;
  const auto in_old = ports_of(replaced, Direction::In);
  const auto in_new = ports_of(replacement, Direction::In);
  const auto out_old = ports_of(replaced, Direction::Out);
  const auto out_new = ports_of(replacement, Direction::Out);

  if (in_old.size() != in_new.size()) {
    result.reason = "number of incoming ports differs (" + std::to_string(in_old.size()) + " vs " +
                    std::to_string(in_new.size()) + ")";
    return result;
  }
  if (out_new.size() < out_old.size()) {
    result.reason = "'" + replacement.name + "' has fewer outgoing ports than '" + replaced.name + "'";
    return result;
  }

  // Incoming: the new port accepts the old port's type or a supertype of it.
  const Fits in_fits = [&](const PortDecl& p, const PortDecl& q) {
    return types.conforms_nominal(p.type, q.type);
  };
  // Outgoing: the new port produces the old port's type or a subtype of it.
  const Fits out_fits = [&](const PortDecl& p, const PortDecl& q) {
    return types.conforms_nominal(q.type, p.type);
  };

  if (!full_matching_exists(in_old, in_new, in_fits)) {
    result.reason = "no type-conformant mapping between the incoming ports";
    return result;
  }
  if (!full_matching_exists(out_old, out_new, out_fits)) {
    result.reason = "no type-conformant mapping between the outgoing ports";
    return result;
  }

  auto incoming = select_mapping(in_old, in_new, in_fits);
  auto outgoing = select_mapping(out_old, out_new, out_fits);
  if (!incoming || !outgoing) {
    result.status = Compatibility::Ambiguous;
    result.reason = std::string("the ") + (!incoming ? "incoming" : "outgoing") +
                    " port mapping is ambiguous";
    return result;
  }
  result.status = Compatibility::Compatible;
  result.incoming = std::move(*incoming);
  result.outgoing = std::move(*outgoing);
  return result;
}

}  // namespace deltaarc
