#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deltaarc {

/// Nominal data-type hierarchy. Edges point from a subtype to one of its
/// direct supertypes; the edge relation is kept acyclic on insertion.
class TypeHierarchy {
 public:
  /// Registers `name` as a type without supertypes; no-op if already declared.
  void declare(const std::string& name);

  /// Declares both names if needed and adds sub -> super.
  /// Throws Error(TYPE-CYCLE) if the edge would close a cycle.
  void add_supertype(const std::string& sub, const std::string& super);

  bool is_declared(std::string_view name) const;

  /// Reflexive-transitive closure of the edge relation.
  /// Throws Error(TYPE-UNDECLARED) when either name is unknown.
  bool conforms(std::string_view sub, std::string_view super) const;

  /// Like conforms(), but an undeclared name behaves as a fresh nominal type
  /// with no supertypes instead of raising.
  bool conforms_nominal(std::string_view sub, std::string_view super) const;

  const std::set<std::string, std::less<>>& declared() const { return declared_; }
  std::vector<std::pair<std::string, std::string>> edges() const;
  const std::set<std::string, std::less<>>& direct_supertypes(std::string_view name) const;

  bool operator==(const TypeHierarchy&) const = default;

 private:
  std::set<std::string, std::less<>> declared_;
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> supers_;
};

bool type_conforms(std::string_view sub, std::string_view super, const TypeHierarchy& h);

}  // namespace deltaarc
