#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "deltaarc/generation.hpp"
#include "deltaarc/metrics.hpp"
#include "deltaarc/ordering.hpp"
#include "deltaarc/wellformedness.hpp"

namespace deltaarc {

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

bool use_color(std::ostream& err) {
  const char* env = std::getenv("DELTA_ARC_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  if (mode != "auto") throw UsageError{"DELTA_ARC_COLOR must be auto, always or never, not '" + mode + "'"};
  return &err == &std::cerr && isatty(STDERR_FILENO);
}

void print(std::ostream& err, const std::vector<Diagnostic>& diags, bool color) {
  for (const auto& d : diags) err << format_diagnostic(d, color) << "\n";
}

struct Options {
  std::vector<std::string> core;
  std::string deltas;
  std::string config;
  std::string types;
  std::string out;
  std::string strategy = "config";
  bool all = false;
};

std::optional<std::filesystem::path> optional_path(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

std::vector<std::filesystem::path> paths(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

int cmd_derive(const Options& o, std::ostream& out, std::ostream& err, bool color) {
  DerivationRequest req;
  req.core_dirs = paths(o.core);
  req.deltas_dir = o.deltas;
  req.config_file = o.config;
  req.types_file = optional_path(o.types);
  req.out_dir = o.out;
  req.strategy = o.strategy == "lex" ? OrderStrategy::Lexicographic : OrderStrategy::ConfigurationOrder;
  const auto result = derive_product(req);
  for (const auto& step : result.reports) print(err, step.report.diagnostics, color);
  out << "order: " << to_string(result.order) << "\n";
  for (const auto& p : result.emitted) out << "wrote " << p.string() << "\n";
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err, bool color) {
  const auto repo = load_repository(paths(o.core), optional_path(o.types));
  const auto report = check_full(repo);
  print(err, report.diagnostics, color);
  out << repo.components.size() << " component(s), " << report.error_count() << " error(s), "
      << report.warning_count() << " warning(s)\n";
  return report.passed() ? 0 : kExitDomain;
}

int cmd_order(const Options& o, std::ostream& out, std::ostream& err, bool color) {
  const auto config = load_config(o.config);
  const auto deltas = load_deltas(o.deltas, config);
  print(err, constraint_warnings(config, deltas), color);
  if (o.all) {
    for (const auto& order : enumerate_orders(config, deltas)) out << to_string(order) << "\n";
  } else {
    const auto strategy = o.strategy == "lex" ? OrderStrategy::Lexicographic : OrderStrategy::ConfigurationOrder;
    out << to_string(compute_order(config, deltas, strategy)) << "\n";
  }
  return 0;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const auto report = collect_metrics(o.core.front(), o.deltas);
  out << format_table(report) << "\n" << format_key_values(report);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derives architecture variants by applying delta models to core models"};
  app.name("deltaarc");
  app.require_subcommand(1);
  Options o;

  auto* derive = app.add_subcommand("derive", "Derive a product and print it to an output directory");
  derive->add_option("--core", o.core, "Core model directory")->required()->expected(1, -1);
  derive->add_option("--deltas", o.deltas, "Delta model directory")->required();
  derive->add_option("--config", o.config, "Product configuration file")->required();
  derive->add_option("--types", o.types, "Data type hierarchy file");
  derive->add_option("--out", o.out, "Output directory")->required();
  derive->add_option("--order-strategy", o.strategy, "Tie-breaking among valid orders")
      ->check(CLI::IsMember({"lex", "config"}));

  auto* check = app.add_subcommand("check", "Check the context conditions of core models");
  check->add_option("--core", o.core, "Core model directory")->required()->expected(1, -1);
  check->add_option("--types", o.types, "Data type hierarchy file");

  auto* order = app.add_subcommand("order", "Compute the application order of a configuration");
  order->add_option("--deltas", o.deltas, "Delta model directory")->required();
  order->add_option("--config", o.config, "Product configuration file")->required();
  order->add_flag("--all", o.all, "Print every valid order, one per line");
  order->add_option("--order-strategy", o.strategy, "Tie-breaking among valid orders")
      ->check(CLI::IsMember({"lex", "config"}));

  auto* metrics = app.add_subcommand("metrics", "Lines-of-code metrics of core and delta models");
  metrics->add_option("--core", o.core, "Core model directory")->required()->expected(1);
  metrics->add_option("--deltas", o.deltas, "Delta model directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool color = false;
  try {
    color = use_color(err);
    if (derive->parsed()) return cmd_derive(o, out, err, color);
    if (check->parsed()) return cmd_check(o, out, err, color);
    if (order->parsed()) return cmd_order(o, out, err, color);
    return cmd_metrics(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const CheckFailed& e) {
    print(err, e.report().diagnostics, color);
    err << format_diagnostic(e.diagnostic(), color) << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << format_diagnostic(e.diagnostic(), color) << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << format_diagnostic(make_error("IO-READ", e.what()), color) << "\n";
    return kExitDomain;
  }
}

}  // namespace deltaarc
