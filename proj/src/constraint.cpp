#include "deltaarc/constraint.hpp"

#include <algorithm>

namespace deltaarc {

OrderConstraint OrderConstraint::leaf(std::string name) {
  OrderConstraint e;
  e.kind = Kind::Name;
  e.name = std::move(name);
  return e;
}

OrderConstraint OrderConstraint::negate(OrderConstraint operand) {
  OrderConstraint e;
  e.kind = Kind::Not;
  e.operands.push_back(std::move(operand));
  return e;
}

OrderConstraint OrderConstraint::all_of(std::vector<OrderConstraint> operands) {
  if (operands.size() == 1) return std::move(operands.front());
  OrderConstraint e;
  e.kind = Kind::And;
  e.operands = std::move(operands);
  return e;
}

OrderConstraint OrderConstraint::any_of(std::vector<OrderConstraint> operands) {
  if (operands.size() == 1) return std::move(operands.front());
  OrderConstraint e;
  e.kind = Kind::Or;
  e.operands = std::move(operands);
  return e;
}

bool eval_constraint(const OrderConstraint& e, const AppliedSet& applied) {
  switch (e.kind) {
    case OrderConstraint::Kind::Name:
      return applied.contains(e.name);
    case OrderConstraint::Kind::Not:
      return !eval_constraint(e.operands.front(), applied);
    case OrderConstraint::Kind::And:
      return std::all_of(e.operands.begin(), e.operands.end(),
                         [&](const OrderConstraint& o) { return eval_constraint(o, applied); });
    case OrderConstraint::Kind::Or:
      return std::any_of(e.operands.begin(), e.operands.end(),
                         [&](const OrderConstraint& o) { return eval_constraint(o, applied); });
  }
  return false;
}

bool eval_constraint(const std::optional<OrderConstraint>& e, const AppliedSet& applied) {
  return !e || eval_constraint(*e, applied);
}

namespace {

void collect(const OrderConstraint& e, std::set<std::string>& out) {
  if (e.kind == OrderConstraint::Kind::Name) {
    out.insert(e.name);
    return;
  }
  for (const auto& o : e.operands) collect(o, out);
}

std::string print(const OrderConstraint& e, bool nested) {
  switch (e.kind) {
    case OrderConstraint::Kind::Name:
      return e.name;
    case OrderConstraint::Kind::Not:
      return "!" + print(e.operands.front(), true);
    case OrderConstraint::Kind::And:
    case OrderConstraint::Kind::Or: {
      const char* op = e.kind == OrderConstraint::Kind::And ? " && " : " || ";
      std::string out;
      for (const auto& o : e.operands) {
        if (!out.empty()) out += op;
        out += print(o, true);
      }
      return nested ? "(" + out + ")" : out;
    }
  }
  return {};
}

}  // namespace

std::set<std::string> referenced_deltas(const OrderConstraint& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::string to_string(const OrderConstraint& e) { return print(e, false); }

}  // namespace deltaarc
