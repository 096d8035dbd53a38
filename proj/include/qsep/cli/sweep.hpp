#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsep/separability.hpp"

namespace qsep::cli {

/// One-parameter state families.
///   werner    werner_embedded(t), t in [0, 1]
///   molecule  molecule_state(p_AB = t, p_AC = 0, p_BC = 1 - t), t in [0, 1]
enum class SweepFamily { Werner, Molecule };

SweepFamily parse_sweep_family(std::string_view name);
std::string_view to_string(SweepFamily family);
DensityMatrix sweep_state(SweepFamily family, double t);

struct SweepPoint {
  double parameter = 0.0;
  std::vector<double> min_pt_eigenvalues;  // one per reduction, report order
  double min_pt_eigenvalue = 0.0;
  Conclusion conclusion = Conclusion::Inconclusive;
};

/// A parameter interval of width <= the requested resolution across which
/// the witness verdict flips.
struct Threshold {
  double lo = 0.0;
  double hi = 0.0;
  double estimate = 0.0;
  Conclusion below = Conclusion::Inconclusive;
  Conclusion above = Conclusion::Inconclusive;
};

struct SweepResult {
  SweepFamily family = SweepFamily::Werner;
  double from = 0.0;
  double to = 1.0;
  int steps = 0;
  double tol = kValidationTol;
  std::vector<std::string> labels;
  std::vector<SweepPoint> points;
  std::vector<Threshold> thresholds;
};

/// Evaluates the witness at `steps` evenly spaced parameters in [from, to]
/// and bisects every verdict change down to `resolution`. Throws BadRange
/// for an empty or out-of-domain interval or steps < 2.
SweepResult run_sweep(SweepFamily family, double from, double to, int steps, double tol = kValidationTol,
                      double resolution = 1e-6);

std::string sweep_to_human(const SweepResult& result);
std::string sweep_to_machine(const SweepResult& result);

}  // namespace qsep::cli
