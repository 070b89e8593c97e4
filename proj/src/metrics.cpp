#include "deltaarc/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "deltaarc/diagnostic.hpp"
#include "deltaarc/parser.hpp"

namespace fs = std::filesystem;

namespace deltaarc {

std::size_t count_loc(std::string_view text) {
  std::size_t loc = 0;
  bool in_block = false;
  bool in_string = false;
  bool has_code = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    const char next = i + 1 < text.size() ? text[i + 1] : '\0';
    if (ch == '\n') {
      if (has_code) ++loc;
      has_code = false;
      in_string = false;  // unterminated literals end at the line
      continue;
    }
    if (in_block) {
      if (ch == '*' && next == '/') {
        in_block = false;
        ++i;
      }
      continue;
    }
    if (in_string) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '/' && next == '/') {
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (ch == '/' && next == '*') {
      in_block = true;
      ++i;
      continue;
    }
    if (ch == '"') in_string = true;
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\f' && ch != '\v') has_code = true;
  }
  if (has_code) ++loc;
  return loc;
}

double CorpusMetrics::avg_loc() const {
  return file_count == 0 ? 0.0 : static_cast<double>(total_loc) / static_cast<double>(file_count);
}

double CorpusMetrics::rel_vc() const {
  return total_loc == 0 ? 0.0 : 100.0 * static_cast<double>(delta_loc) / static_cast<double>(total_loc);
}

namespace {

CorpusMetrics corpus(std::string name, const std::vector<std::size_t>& files, std::size_t delta_loc) {
  CorpusMetrics m;
  m.name = std::move(name);
  m.file_count = files.size();
  m.total_loc = std::accumulate(files.begin(), files.end(), std::size_t{0});
  m.max_loc = files.empty() ? 0 : *std::max_element(files.begin(), files.end());
  m.delta_loc = delta_loc;
  return m;
}

std::vector<std::size_t> count_files(const fs::path& dir, std::initializer_list<SourceKind> kinds) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("IO-READ", "not a directory", SourceLocation{dir.string()});
  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto kind = kind_for_extension(entry.path());
    if (kind && std::find(kinds.begin(), kinds.end(), *kind) != kinds.end()) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<std::size_t> out;
  for (const auto& p : paths) out.push_back(count_loc(read_source(p).text));
  return out;
}

std::string pad(std::string s, std::size_t width, bool left) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

MetricsReport metrics_from_counts(const std::vector<std::size_t>& core_files,
                                  const std::vector<std::size_t>& delta_files) {
  MetricsReport r;
  r.deltas = corpus("deltas", delta_files, 0);
  r.deltas.delta_loc = r.deltas.total_loc;
  r.core = corpus("core", core_files, 0);
  std::vector<std::size_t> all = core_files;
  all.insert(all.end(), delta_files.begin(), delta_files.end());
  r.combined = corpus("combined", all, r.deltas.total_loc);
  if (r.combined.total_loc == 0) {
    throw Error(kMetricsEmpty, "the corpus contains no lines of code (" + std::to_string(all.size()) + " file(s))");
  }
  return r;
}

MetricsReport collect_metrics(const fs::path& core_dir, const fs::path& deltas_dir) {
  return metrics_from_counts(count_files(core_dir, {SourceKind::Component, SourceKind::Types}),
                             count_files(deltas_dir, {SourceKind::Delta, SourceKind::Config}));
}

std::string format_fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string format_table(const MetricsReport& r) {
  const std::vector<std::string> header = {"corpus", "LOC", "# Files", "max. LOC", "avg. LOC", "rel. VC"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const auto* m : {&r.core, &r.deltas, &r.combined}) {
    rows.push_back({m->name, std::to_string(m->total_loc), std::to_string(m->file_count), std::to_string(m->max_loc),
                    format_fixed2(m->avg_loc()), format_fixed2(m->rel_vc()) + "%"});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += pad(row[i], width[i], i == 0);
    }
    out += line + "\n";
  }
  return out;
}

std::string format_key_values(const MetricsReport& r) {
  std::string out;
  for (const auto* m : {&r.core, &r.deltas, &r.combined}) {
    out += m->name + ".totalLOC=" + std::to_string(m->total_loc) + "\n";
    out += m->name + ".fileCount=" + std::to_string(m->file_count) + "\n";
    out += m->name + ".maxLOC=" + std::to_string(m->max_loc) + "\n";
    out += m->name + ".avgLOC=" + format_fixed2(m->avg_loc()) + "\n";
    out += m->name + ".relVC=" + format_fixed2(m->rel_vc()) + "\n";
  }
  return out;
}

}  // namespace deltaarc
