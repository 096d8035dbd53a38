#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsep/separability.hpp"

namespace qsep::cli {

inline constexpr std::string_view kToolName = "qsep";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct ReductionRow {
  std::string label;
  std::string kind;
  double min_pt_eigenvalue = 0.0;
  bool separable = true;

  friend bool operator==(const ReductionRow&, const ReductionRow&) = default;
};

/// Outcome of `analyze`. The machine form is self-contained JSON carrying
/// "schema": 1; parsing it back reproduces every field exactly.
struct ReportDocument {
  int schema = kReportSchema;
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::string source;
  std::string sha256;
  int n_qubits = 0;
  bool validated = true;
  double validation_tol = kValidationTol;
  double ppt_tol = kValidationTol;
  std::vector<ReductionRow> reductions;
  std::string conclusion;
  std::optional<std::string> culprit;
  double min_pt_eigenvalue = 0.0;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(const WitnessReport& witness, std::string source, std::string_view input_bytes,
                           int n_qubits, bool validated, double validation_tol);

std::string to_machine(const ReportDocument& doc);
/// Throws Error(ParseError) on malformed or wrong-schema input.
ReportDocument parse_machine_report(std::string_view text);
std::string to_human(const ReportDocument& doc);

/// Machine-readable error document for failures on the analyze path.
std::string error_to_machine(const Error& e);

std::string sha256_hex(std::string_view bytes);

}  // namespace qsep::cli
