#pragma once

#include <map>
#include <string>

#include "deltaarc/model.hpp"

namespace deltaarc {

enum class Compatibility { Compatible, Incompatible, Ambiguous };

/// Result of matching the interface of a replaced subcomponent type against
/// its replacement. Mappings go from port names of the old type to port
/// names of the new one and are only filled when compatible.
struct InterfaceMapping {
  Compatibility status = Compatibility::Incompatible;
  std::map<std::string, std::string> incoming;
  std::map<std::string, std::string> outgoing;
  std::string reason;

  bool compatible() const { return status == Compatibility::Compatible; }
};

/// Incoming ports need a bijection onto ports of the same type or a
/// supertype; outgoing ports need an injection into ports of the same type
/// or a subtype. Same-named ports are paired first, then ports with a single
/// conformant candidate. Incompatible means no such mapping exists at all;
/// Ambiguous means one exists but the pairing rule cannot pick it.
InterfaceMapping interface_compatible(const ComponentDefinition& replaced,
                                      const ComponentDefinition& replacement,
                                      const TypeHierarchy& types);

}  // namespace deltaarc
