#include "deltaarc/ordering.hpp"

#include <algorithm>

namespace deltaarc {

namespace {

struct Candidate {
  std::string name;
  const DeltaModel* delta;
};

std::vector<Candidate> resolve(const ProductConfiguration& config, const DeltaMap& deltas,
                               OrderStrategy strategy) {
  std::vector<Candidate> out;
  for (const auto& name : config.deltas) {
    auto it = deltas.find(name);
    if (it == deltas.end()) {
      throw Error(kOrderUnresolved,
                  "configuration '" + config.name + "' lists delta '" + name + "' which was not loaded",
                  config.loc);
    }
    out.push_back({name, &it->second});
  }
  if (strategy == OrderStrategy::Lexicographic) {
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.name < b.name; });
  }
  return out;
}

class Search {
 public:
  explicit Search(std::vector<Candidate> candidates)
      : candidates_(std::move(candidates)), used_(candidates_.size(), false) {}

  bool first(ApplicationOrder& order) {
    if (order.size() == candidates_.size()) return true;
    if (dead_.contains(used_)) return false;
    bool extended = false;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!legal(i)) continue;
      extended = true;
      push(order, i);
      if (first(order)) return true;
      pop(order, i);
    }
    dead_.insert(used_);
    if (!extended) record_dead_end(order);
    return false;
  }

  void all(ApplicationOrder& order, std::set<ApplicationOrder>& out) {
    if (order.size() == candidates_.size()) {
      out.insert(order);
      return;
    }
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!legal(i)) continue;
      push(order, i);
      all(order, out);
      pop(order, i);
    }
  }

  const std::vector<ApplicationOrder>& longest_dead_ends() const { return dead_ends_; }

 private:
  bool legal(std::size_t i) const { return !used_[i] && eval_constraint(candidates_[i].delta->constraint, applied_); }

  void push(ApplicationOrder& order, std::size_t i) {
    used_[i] = true;
    applied_.insert(candidates_[i].name);
    order.push_back(candidates_[i].name);
  }

  void pop(ApplicationOrder& order, std::size_t i) {
    used_[i] = false;
    applied_.erase(candidates_[i].name);
    order.pop_back();
  }

  void record_dead_end(const ApplicationOrder& order) {
    if (!dead_ends_.empty() && order.size() < dead_ends_.front().size()) return;
    if (!dead_ends_.empty() && order.size() > dead_ends_.front().size()) dead_ends_.clear();
    dead_ends_.push_back(order);
  }

  std::vector<Candidate> candidates_;
  std::vector<bool> used_;
  AppliedSet applied_;
  // Legality only depends on the applied set, so a failed set fails for
  // every order that reaches it.
  std::set<std::vector<bool>> dead_;
  std::vector<ApplicationOrder> dead_ends_;
};

}  // namespace

std::string to_string(const ApplicationOrder& order) {
  std::string out;
  for (const auto& name : order) {
    if (!out.empty()) out += " -> ";
    out += name;
  }
  return out.empty() ? "<empty>" : out;
}

std::vector<Diagnostic> constraint_warnings(const ProductConfiguration& config, const DeltaMap& deltas) {
  std::vector<Diagnostic> out;
  const std::set<std::string> configured(config.deltas.begin(), config.deltas.end());
  for (const auto& name : config.deltas) {
    auto it = deltas.find(name);
    if (it == deltas.end() || !it->second.constraint) continue;
    for (const auto& ref : referenced_deltas(*it->second.constraint)) {
      if (configured.contains(ref)) continue;
      out.push_back(make_warning(kOrderForeignName,
                                 "constraint of delta '" + name + "' mentions '" + ref +
                                     "', which is not in configuration '" + config.name +
                                     "'; it is treated as never applied",
                                 it->second.loc));
    }
  }
  return out;
}

ApplicationOrder compute_order(const ProductConfiguration& config, const DeltaMap& deltas,
                               OrderStrategy strategy) {
  Search search(resolve(config, deltas, strategy));
  ApplicationOrder order;
  if (search.first(order)) return order;

  std::string msg = "no complete application order exists for configuration '" + config.name + "'";
  const auto& prefixes = search.longest_dead_ends();
  constexpr std::size_t kShown = 5;
  msg += "; longest applicable prefixes:";
  for (std::size_t i = 0; i < prefixes.size() && i < kShown; ++i) msg += " [" + to_string(prefixes[i]) + "]";
  if (prefixes.size() > kShown) msg += " and " + std::to_string(prefixes.size() - kShown) + " more";
  throw Error(kOrderUnsat, msg, config.loc);
}

std::set<ApplicationOrder> enumerate_orders(const ProductConfiguration& config, const DeltaMap& deltas,
                                            std::size_t bound) {
  if (config.deltas.size() > bound) {
    throw Error(kOrderTooLarge,
                "configuration '" + config.name + "' has " + std::to_string(config.deltas.size()) +
                    " deltas; enumerating all orders is limited to " + std::to_string(bound),
                config.loc);
  }
  Search search(resolve(config, deltas, OrderStrategy::ConfigurationOrder));
  std::set<ApplicationOrder> out;
  ApplicationOrder order;
  search.all(order, out);
  return out;
}

}  // namespace deltaarc
