#pragma once

#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deltaarc/delta.hpp"
#include "deltaarc/model.hpp"
#include "deltaarc/ordering.hpp"

namespace deltaarc::testing {

std::filesystem::path corpus_dir();
std::filesystem::path multicopter_core();
std::filesystem::path multicopter_deltas();
std::filesystem::path multicopter_config();
std::filesystem::path fig3_dir();

std::string read_file(const std::filesystem::path& p);

/// Fresh empty directory, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

ComponentDefinition component(const std::string& text, const std::string& file = "test.arc");
DeltaModel delta(const std::string& text, const std::string& file = "test.delta");
ProductConfiguration config(const std::string& text, const std::string& file = "test.deltacfg");

/// Repository built from component texts; port types are registered.
ModelRepository repo_of(const std::vector<std::string>& texts);

ModelRepository multicopter_core_repo();
DeltaMap multicopter_delta_map();

ModificationOp op(OpKind kind);

std::vector<std::pair<std::string, std::string>> connector_pairs(const ComponentDefinition& c);

// ---- independent oracles ---------------------------------------------------

namespace oracle {

/// Reflexive-transitive closure by Warshall over an explicit edge list.
bool conforms(const std::vector<std::string>& types,
              const std::vector<std::pair<std::string, std::string>>& edges, const std::string& sub,
              const std::string& super);

/// Tries every bijection of incoming ports and every injection of outgoing ports.
bool interface_mapping_exists(const ComponentDefinition& replaced, const ComponentDefinition& replacement,
                              const TypeHierarchy& types);

/// The mapping respects counts, direction, injectivity and the typing rule.
bool mapping_valid(const ComponentDefinition& replaced, const ComponentDefinition& replacement,
                   const TypeHierarchy& types, const std::map<std::string, std::string>& incoming,
                   const std::map<std::string, std::string>& outgoing);

/// Autoconnect written straight from its definition: every (source, target)
/// pair in the legal data-flow space, keeping targets with exactly one
/// matching source and no explicit incoming connector.
std::set<std::pair<std::string, std::string>> autoconnect(const ComponentDefinition& c, const ModelRepository& repo);

/// All permutations of the configuration filtered by prefix-wise evaluation.
std::set<ApplicationOrder> filter_permutations(const ProductConfiguration& config, const DeltaMap& deltas);

/// The two-phase unreachable-removal rule for `target`, for components in
/// mode off, or in mode port where every port has the same data type.
ModelRepository remove_unreachable(const ModelRepository& repo, const std::string& target);

/// Connector multiset of every component after substituting a renamed element.
std::map<std::string, std::multiset<std::pair<std::string, std::string>>> renamed_connectors(
    const ModelRepository& repo, const std::string& component, ops::RenameKind kind, const std::string& from,
    const std::string& to);

}  // namespace oracle

// ---- random generators ----------------------------------------------------

using Rng = std::mt19937;

/// Component `Top` over atomic types with a single data type, up to 8
/// subcomponents and 16 explicit connectors; sometimes wrapped by `Outer`.
ModelRepository random_architecture(Rng& rng);

/// A few components instantiating each other acyclically with parameters,
/// argument references and explicit connectors.
ModelRepository random_rename_repo(Rng& rng);

struct RenameCase {
  std::string component;
  ops::RenameKind kind;
  std::string from;
  std::string to;
};
RenameCase random_rename(Rng& rng, const ModelRepository& repo);

/// Random unconstrained deltas over the multicopter core plus their configuration.
std::pair<ProductConfiguration, DeltaMap> random_delta_sequence(Rng& rng, const ModelRepository& core);

}  // namespace deltaarc::testing
