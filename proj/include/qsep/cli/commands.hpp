#pragma once

// Subcommand implementations behind the qsep executable. Each writes its
// result to `out`, diagnostics to `err`, and returns the process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEntangled = 2;

enum class OutputFormat { Human, Machine };

struct GlobalOptions {
  /// Overrides the tolerance stored in the input file (default 1e-9).
  std::optional<double> tol;
  OutputFormat format = OutputFormat::Human;
  bool no_validate = false;
};

/// `path` may be "-" for standard input. Exit 2 when entangled, 0 when
/// inconclusive, 1 on any input or validation error.
int cmd_analyze(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Emits the reduction as a two-qubit matrix file.
int cmd_reduce(const std::string& path, const std::string& label, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err);

struct MakeStateOptions {
  std::string family;
  int qubits = 3;                     // ghz
  std::optional<double> x;            // werner
  std::optional<int> way;             // embed
  std::optional<std::string> r_path;  // embed; Bell state when absent
  std::optional<double> p_ab;         // molecule
  std::optional<double> p_ac;
  std::optional<double> p_bc;
  std::vector<double> a, b, c, d;     // product: (re0, re1) or (re0, im0, re1, im1)
};

int cmd_make_state(const MakeStateOptions& params, const GlobalOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string family;
  double from = 0.0;
  double to = 1.0;
  int steps = 101;
};

int cmd_sweep(const SweepOptions& params, const GlobalOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qsep::cli
