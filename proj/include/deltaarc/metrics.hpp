#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace deltaarc {

inline constexpr const char* kMetricsEmpty = "METRICS-EMPTY";

/// Lines holding anything besides whitespace and comments. Comment markers
/// inside string literals do not count as comments.
std::size_t count_loc(std::string_view text);

struct CorpusMetrics {
  std::string name;
  std::size_t total_loc = 0;
  std::size_t file_count = 0;
  std::size_t max_loc = 0;
  std::size_t delta_loc = 0;  // the share of total_loc living in delta files

  double avg_loc() const;  // 0 for an empty corpus
  double rel_vc() const;   // percentage of delta LOC, 0 for an empty corpus
};

struct MetricsReport {
  CorpusMetrics core;
  CorpusMetrics deltas;
  CorpusMetrics combined;
};

/// Builds the three corpora from per-file LOC counts.
/// Throws METRICS-EMPTY when there is no line of code at all.
MetricsReport metrics_from_counts(const std::vector<std::size_t>& core_files,
                                  const std::vector<std::size_t>& delta_files);

/// `.arc` and `.types` files below `core_dir`, `.delta` and `.deltacfg` files
/// below `deltas_dir`.
MetricsReport collect_metrics(const std::filesystem::path& core_dir, const std::filesystem::path& deltas_dir);

std::string format_table(const MetricsReport& r);
std::string format_key_values(const MetricsReport& r);
std::string format_fixed2(double value);

}  // namespace deltaarc
