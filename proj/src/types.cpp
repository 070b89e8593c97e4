#include "deltaarc/types.hpp"

#include "deltaarc/diagnostic.hpp"

namespace deltaarc {

namespace {

const std::set<std::string, std::less<>> kNoSupertypes;

}  // namespace

void TypeHierarchy::declare(const std::string& name) { declared_.insert(name); }

void TypeHierarchy::add_supertype(const std::string& sub, const std::string& super) {
  declare(sub);
  declare(super);
  if (conforms(super, sub)) {
    throw Error("TYPE-CYCLE", "type '" + sub + "' cannot extend '" + super +
                                  "': the hierarchy would become cyclic");
  }
  supers_[sub].insert(super);
}

bool TypeHierarchy::is_declared(std::string_view name) const { return declared_.contains(name); }

const std::set<std::string, std::less<>>& TypeHierarchy::direct_supertypes(std::string_view name) const {
  auto it = supers_.find(name);
  return it == supers_.end() ? kNoSupertypes : it->second;
}

bool TypeHierarchy::conforms(std::string_view sub, std::string_view super) const {
  for (auto name : {sub, super}) {
    if (!is_declared(name)) {
      throw Error("TYPE-UNDECLARED", "undeclared data type '" + std::string(name) + "'");
    }
  }
  if (sub == super) return true;
  std::vector<std::string_view> stack{sub};
  std::set<std::string_view> seen{sub};
  while (!stack.empty()) {
    auto current = stack.back();
    stack.pop_back();
    for (const auto& next : direct_supertypes(current)) {
      if (next == super) return true;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

bool TypeHierarchy::conforms_nominal(std::string_view sub, std::string_view super) const {
  if (sub == super) return true;
  if (!is_declared(sub) || !is_declared(super)) return false;
  return conforms(sub, super);
}

std::vector<std::pair<std::string, std::string>> TypeHierarchy::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [sub, supers] : supers_) {
    for (const auto& super : supers) out.emplace_back(sub, super);
  }
  return out;
}

bool type_conforms(std::string_view sub, std::string_view super, const TypeHierarchy& h) {
  return h.conforms(sub, super);
}

}  // namespace deltaarc
