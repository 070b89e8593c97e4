#pragma once

#include <string>

#include "deltaarc/model.hpp"

namespace deltaarc {

/// Canonical text of a component: header, autoconnect line (omitted when
/// off), one port block with in-ports before out-ports, subcomponents, then
/// explicit connectors. Implicit connectors are never printed; materialized
/// implicit names always are.
std::string pretty_print(const ComponentDefinition& c);

}  // namespace deltaarc
