#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "deltaarc/delta.hpp"
#include "deltaarc/model.hpp"
#include "deltaarc/types.hpp"

namespace deltaarc {

enum class SourceKind { Component, Delta, Config, Types };

/// `.arc`, `.delta`, `.deltacfg`, `.types`
std::optional<SourceKind> kind_for_extension(const std::filesystem::path& path);
std::string_view extension_for(SourceKind kind);

struct SourceUnit {
  std::string path;
  SourceKind kind = SourceKind::Component;
  std::string text;
};

/// Reads a file and derives its kind from the extension.
/// Throws Error(IO-READ) or Error(SRC-KIND).
SourceUnit read_source(const std::filesystem::path& path);

// All parsers throw Error(SYN-ERROR) with the offending location on malformed
// input and Error(SRC-KIND) when handed a unit of the wrong kind.

/// Implicit port and subcomponent names are materialized; a missing
/// autoconnect statement means `off`.
ComponentDefinition parse_component_text(const SourceUnit& unit);

/// Unknown operation keywords raise SYN-UNKNOWN-OP.
DeltaModel parse_delta_text(const SourceUnit& unit);

/// A delta listed twice raises CFG-DUP-DELTA.
ProductConfiguration parse_config_text(const SourceUnit& unit);

/// Adds the declarations of a `.types` file to `types`.
/// An `extends` that would close a cycle raises TYPE-CYCLE.
void parse_types_text(const SourceUnit& unit, TypeHierarchy& types);

/// Parses a constraint expression on its own, as written after `after`.
OrderConstraint parse_constraint_text(std::string_view text, const std::string& file = "<constraint>");

}  // namespace deltaarc
