#include "deltaarc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace deltaarc {

Diagnostic make_error(std::string code, std::string message, SourceLocation loc) {
  return Diagnostic{Severity::Error, std::move(code), std::move(message), std::move(loc)};
}

Diagnostic make_warning(std::string code, std::string message, SourceLocation loc) {
  return Diagnostic{Severity::Warning, std::move(code), std::move(message), std::move(loc)};
}

std::string format_diagnostic(const Diagnostic& d, bool color) {
  std::string out;
  if (!d.location.file.empty()) {
    out += d.location.file;
    if (d.location.line > 0) {
      out += ':' + std::to_string(d.location.line) + ':' + std::to_string(d.location.column);
    }
    out += ": ";
  }
  const bool is_error = d.severity == Severity::Error;
  if (color) out += is_error ? "\x1b[1;31m" : "\x1b[1;33m";
  out += is_error ? "error" : "warning";
  if (color) out += "\x1b[0m";
  out += '[' + d.code + "]: " + d.message;
  return out;
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.location.file, a.location.line, a.location.column) <
           std::tie(b.location.file, b.location.line, b.location.column);
  });
}

Error::Error(Diagnostic d) : std::runtime_error(format_diagnostic(d)), diag_(std::move(d)) {}

Error::Error(std::string code, std::string message, SourceLocation loc)
    : Error(make_error(std::move(code), std::move(message), std::move(loc))) {}

bool CheckReport::passed() const { return error_count() == 0; }

std::size_t CheckReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
      [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

std::size_t CheckReport::warning_count() const { return diagnostics.size() - error_count(); }

bool CheckReport::has_code(std::string_view code) const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

const Diagnostic* CheckReport::first_error() const {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return &d;
  }
  return nullptr;
}

void CheckReport::merge(const CheckReport& other) {
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
}

}  // namespace deltaarc
