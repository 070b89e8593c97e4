#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deltaarc {

/// Boolean expression over delta names. A name evaluates to true iff that
/// delta has already been applied.
struct OrderConstraint {
  enum class Kind { Name, Not, And, Or };

  Kind kind = Kind::Name;
  std::string name;                     // Kind::Name only
  std::vector<OrderConstraint> operands;  // one for Not, two or more for And/Or

  static OrderConstraint leaf(std::string name);
  static OrderConstraint negate(OrderConstraint operand);
  static OrderConstraint all_of(std::vector<OrderConstraint> operands);
  static OrderConstraint any_of(std::vector<OrderConstraint> operands);

  bool operator==(const OrderConstraint&) const = default;
};

using AppliedSet = std::set<std::string, std::less<>>;

bool eval_constraint(const OrderConstraint& e, const AppliedSet& applied);

/// An absent constraint always holds.
bool eval_constraint(const std::optional<OrderConstraint>& e, const AppliedSet& applied);

/// Every delta name mentioned by the expression.
std::set<std::string> referenced_deltas(const OrderConstraint& e);

/// Fully parenthesized except at the top level: `PressureSensor && !HexoCopter`.
std::string to_string(const OrderConstraint& e);

}  // namespace deltaarc
