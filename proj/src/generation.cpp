#include "deltaarc/generation.hpp"

#include <algorithm>
#include <fstream>

#include "deltaarc/engine.hpp"
#include "deltaarc/parser.hpp"
#include "deltaarc/printer.hpp"
#include "deltaarc/wellformedness.hpp"

namespace fs = std::filesystem;

namespace deltaarc {

namespace {

std::string summarize(const std::string& what, const CheckReport& report) {
  const auto* first = report.first_error();
  std::string msg = what + ": " + std::to_string(report.error_count()) + " error(s)";
  if (first) msg += ", first: [" + first->code + "] " + first->message;
  return msg;
}

std::vector<fs::path> files_with(const fs::path& dir, std::initializer_list<SourceKind> kinds) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error("IO-READ", "not a directory", SourceLocation{dir.string()});
  }
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto kind = kind_for_extension(entry.path());
    if (kind && std::find(kinds.begin(), kinds.end(), *kind) != kinds.end()) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentDefinition canonical(ComponentDefinition c) {
  std::sort(c.ports.begin(), c.ports.end(), [](const PortDecl& a, const PortDecl& b) { return a.name < b.name; });
  std::sort(c.subcomponents.begin(), c.subcomponents.end(),
            [](const SubcomponentDecl& a, const SubcomponentDecl& b) { return a.name < b.name; });
  std::sort(c.connectors.begin(), c.connectors.end(), connector_less);
  return c;
}

}  // namespace

CheckFailed::CheckFailed(std::string what, CheckReport report)
    : Error(kCheckFailed, summarize(what, report)), report_(std::move(report)) {}

ModelRepository load_repository(const std::vector<fs::path>& core_dirs, const std::optional<fs::path>& types_file) {
  ModelRepository repo;
  std::vector<fs::path> arcs;
  for (const auto& dir : core_dirs) {
    for (const auto& p : files_with(dir, {SourceKind::Types})) parse_types_text(read_source(p), repo.types);
    auto found = files_with(dir, {SourceKind::Component});
    arcs.insert(arcs.end(), found.begin(), found.end());
  }
  if (types_file) parse_types_text(read_source(*types_file), repo.types);
  for (const auto& p : arcs) repo.add_component(parse_component_text(read_source(p)));
  repo.register_port_types();
  return repo;
}

ProductConfiguration load_config(const fs::path& config_file) {
  return parse_config_text(read_source(config_file));
}

DeltaMap load_deltas(const fs::path& deltas_dir, const ProductConfiguration& config) {
  DeltaMap out;
  for (const auto& name : config.deltas) {
    const fs::path file = deltas_dir / (name + std::string(extension_for(SourceKind::Delta)));
    std::error_code ec;
    if (!fs::is_regular_file(file, ec)) {
      throw Error(kDeltaMissing, "configuration '" + config.name + "' lists delta '" + name + "' but " +
                                     file.string() + " does not exist",
                  config.loc);
    }
    auto delta = parse_delta_text(read_source(file));
    if (delta.name != name) {
      throw Error(kDeltaName, "file is expected to declare delta '" + name + "' but declares '" + delta.name + "'",
                  delta.loc);
    }
    out.emplace(name, std::move(delta));
  }
  return out;
}

DerivationResult derive_in_memory(const ModelRepository& core, const ProductConfiguration& config,
                                  const DeltaMap& deltas, OrderStrategy strategy) {
  DerivationResult result;
  auto core_report = check_full(core);
  if (!core_report.passed()) throw CheckFailed("core models are not well-formed", std::move(core_report));
  result.reports.push_back({"core", std::move(core_report)});

  CheckReport order_report;
  order_report.diagnostics = constraint_warnings(config, deltas);
  result.order = compute_order(config, deltas, strategy);
  result.reports.push_back({"order", std::move(order_report)});

  ModelRepository repo = core;
  for (const auto& name : result.order) {
    auto applied = apply_delta(repo, deltas.find(name)->second);
    repo = std::move(applied.repo);
    result.reports.push_back({"delta " + name, std::move(applied.report)});
  }

  auto product_report = check_full(repo);
  if (!product_report.passed()) {
    throw CheckFailed("product of configuration '" + config.name + "' is not well-formed", std::move(product_report));
  }
  result.reports.push_back({"product", std::move(product_report)});
  result.repo = std::move(repo);
  return result;
}

std::map<std::string, std::string> render_product(const ModelRepository& repo) {
  std::map<std::string, std::string> out;
  for (const auto& [name, c] : repo.components) out.emplace(name + ".arc", pretty_print(c));
  return out;
}

DerivationResult derive_product(const DerivationRequest& req) {
  const auto core = load_repository(req.core_dirs, req.types_file);
  const auto config = load_config(req.config_file);
  const auto deltas = load_deltas(req.deltas_dir, config);
  auto result = derive_in_memory(core, config, deltas, req.strategy);

  // Everything is rendered before the first byte is written.
  const auto files = render_product(result.repo);
  std::error_code ec;
  fs::create_directories(req.out_dir, ec);
  if (ec) throw Error(kOutputWrite, "cannot create output directory: " + ec.message(), {req.out_dir.string()});
  for (const auto& [file, text] : files) {
    const fs::path path = req.out_dir / file;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error(kOutputWrite, "cannot write file", {path.string()});
    result.emitted.push_back(path);
  }
  return result;
}

bool structural_equal(const ComponentDefinition& a, const ComponentDefinition& b) {
  return canonical(a) == canonical(b);
}

bool structural_equal(const ModelRepository& a, const ModelRepository& b) {
  if (a.components.size() != b.components.size()) return false;
  return std::equal(a.components.begin(), a.components.end(), b.components.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && structural_equal(x.second, y.second); });
}

}  // namespace deltaarc
