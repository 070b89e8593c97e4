#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltaarc/diagnostic.hpp"
#include "deltaarc/model.hpp"
#include "deltaarc/ordering.hpp"

namespace deltaarc {

inline constexpr const char* kDeltaMissing = "GEN-DELTA-MISSING";
inline constexpr const char* kDeltaName = "GEN-DELTA-NAME";
inline constexpr const char* kCheckFailed = "GEN-CHECK-FAILED";
inline constexpr const char* kOutputWrite = "GEN-OUTPUT";

/// A failed full check. Carries every diagnostic, not just the first error.
class CheckFailed : public Error {
 public:
  CheckFailed(std::string what, CheckReport report);
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

struct DerivationRequest {
  std::vector<std::filesystem::path> core_dirs;
  std::filesystem::path deltas_dir;
  std::filesystem::path config_file;
  std::optional<std::filesystem::path> types_file;
  std::filesystem::path out_dir;
  OrderStrategy strategy = OrderStrategy::ConfigurationOrder;
};

struct StepReport {
  std::string step;
  CheckReport report;
};

struct DerivationResult {
  ModelRepository repo;
  ApplicationOrder order;
  std::vector<StepReport> reports;
  std::vector<std::filesystem::path> emitted;
};

/// Parses every `.types` and `.arc` file below `core_dirs` (sorted by path)
/// plus the optional extra types file. Port types nobody declared are
/// registered as fresh nominal types. No context conditions are checked.
ModelRepository load_repository(const std::vector<std::filesystem::path>& core_dirs,
                                const std::optional<std::filesystem::path>& types_file = std::nullopt);

/// Loads `<deltas_dir>/<Name>.delta` for every configured name.
/// Throws GEN-DELTA-MISSING, or GEN-DELTA-NAME when the file declares another delta.
DeltaMap load_deltas(const std::filesystem::path& deltas_dir, const ProductConfiguration& config);

ProductConfiguration load_config(const std::filesystem::path& config_file);

/// Steps one to three plus the final check, without touching the file system.
/// Throws CheckFailed when the core or the product fails the full check.
DerivationResult derive_in_memory(const ModelRepository& core, const ProductConfiguration& config,
                                  const DeltaMap& deltas, OrderStrategy strategy);

/// File name to canonical text, one `.arc` file per component.
std::map<std::string, std::string> render_product(const ModelRepository& repo);

/// The whole workflow. Nothing is written unless every step succeeded.
DerivationResult derive_product(const DerivationRequest& req);

/// Equality up to the declaration order of ports, subcomponents and
/// connectors. Parameter order is significant since arguments are positional.
bool structural_equal(const ModelRepository& a, const ModelRepository& b);
bool structural_equal(const ComponentDefinition& a, const ComponentDefinition& b);

}  // namespace deltaarc
