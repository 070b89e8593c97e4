#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "deltaarc/delta.hpp"
#include "deltaarc/diagnostic.hpp"

namespace deltaarc {

inline constexpr const char* kOrderUnsat = "ORD-UNSAT";
inline constexpr const char* kOrderTooLarge = "ORD-TOO-LARGE";
inline constexpr const char* kOrderUnresolved = "ORD-UNRESOLVED";
inline constexpr const char* kOrderForeignName = "ORD-FOREIGN-NAME";

inline constexpr std::size_t kDefaultEnumerationBound = 10;

/// Which legal delta the search tries first at each step.
enum class OrderStrategy { ConfigurationOrder, Lexicographic };

using ApplicationOrder = std::vector<std::string>;
using DeltaMap = std::map<std::string, DeltaModel, std::less<>>;

std::string to_string(const ApplicationOrder& order);  // "B -> C -> D -> A"

/// One warning per constraint leaf naming a delta outside the configuration.
/// Such leaves are never applied and so evaluate to false.
std::vector<Diagnostic> constraint_warnings(const ProductConfiguration& config, const DeltaMap& deltas);

/// First complete order found by depth-first search over the application
/// tree, trying legal deltas in the order given by `strategy`.
/// Throws ORD-UNSAT listing the longest dead-end prefixes, or ORD-UNRESOLVED
/// when a configured delta is missing from `deltas`.
ApplicationOrder compute_order(const ProductConfiguration& config, const DeltaMap& deltas,
                               OrderStrategy strategy = OrderStrategy::ConfigurationOrder);

/// Every complete order. Throws ORD-TOO-LARGE for configurations with more
/// than `bound` deltas since the search is exhaustive.
std::set<ApplicationOrder> enumerate_orders(const ProductConfiguration& config, const DeltaMap& deltas,
                                            std::size_t bound = kDefaultEnumerationBound);

}  // namespace deltaarc
