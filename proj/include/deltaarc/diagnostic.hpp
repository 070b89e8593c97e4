#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltaarc {

enum class Severity { Error, Warning };

struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceLocation location;
};

Diagnostic make_error(std::string code, std::string message, SourceLocation loc = {});
Diagnostic make_warning(std::string code, std::string message, SourceLocation loc = {});

/// "file:line:col: error[CODE]: message"; the position part is omitted when unknown.
std::string format_diagnostic(const Diagnostic& d, bool color = false);

/// Stable sort by (file, line, column).
void sort_diagnostics(std::vector<Diagnostic>& diags);

/// Thrown for every fatal condition: syntax errors, failed applicability
/// checks, unsatisfiable orders, missing inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d);
  Error(std::string code, std::string message, SourceLocation loc = {});

  const Diagnostic& diagnostic() const noexcept { return diag_; }
  const std::string& code() const noexcept { return diag_.code; }

 private:
  Diagnostic diag_;
};

struct CheckReport {
  std::vector<Diagnostic> diagnostics;

  bool passed() const;
  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_code(std::string_view code) const;
  const Diagnostic* first_error() const;

  void merge(const CheckReport& other);
};

}  // namespace deltaarc
