#include "qsep/cli/sweep.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "qsep/cli/report.hpp"
#include "qsep/states.hpp"

namespace qsep::cli {

namespace {

SweepPoint evaluate(SweepFamily family, double t, double tol) {
  const WitnessReport w = witness(sweep_state(family, t), tol);
  SweepPoint point;
  point.parameter = t;
  for (const auto& v : w.verdicts) point.min_pt_eigenvalues.push_back(v.min_pt_eigenvalue);
  point.min_pt_eigenvalue = w.min_pt_eigenvalue();
  point.conclusion = w.conclusion;
  return point;
}

}  // namespace

SweepFamily parse_sweep_family(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "werner") return SweepFamily::Werner;
  if (lower == "molecule") return SweepFamily::Molecule;
  throw Error(ErrorKind::BadParams, "unknown sweep family '" + std::string(name) + "' (expected werner or molecule)");
}

std::string_view to_string(SweepFamily family) { return family == SweepFamily::Werner ? "werner" : "molecule"; }

DensityMatrix sweep_state(SweepFamily family, double t) {
  switch (family) {
    case SweepFamily::Werner: return werner_embedded(t);
    case SweepFamily::Molecule: return molecule_state(MoleculeParams{t, 0.0, 1.0 - t});
  }
  throw Error(ErrorKind::BadParams, "unknown sweep family");
}

SweepResult run_sweep(SweepFamily family, double from, double to, int steps, double tol, double resolution) {
  if (!(from < to) || from < 0.0 || to > 1.0) {
    std::ostringstream msg;
    msg << "sweep range [" << from << ", " << to << "] must be a nonempty subinterval of [0, 1]";
    throw Error(ErrorKind::BadRange, msg.str());
  }
  if (steps < 2) throw Error(ErrorKind::BadRange, "sweep needs at least 2 steps");
  if (!(resolution > 0.0)) throw Error(ErrorKind::BadRange, "bisection resolution must be positive");

  SweepResult result;
  result.family = family;
  result.from = from;
  result.to = to;
  result.steps = steps;
  result.tol = tol;
  for (const auto& l : all_labels(3)) result.labels.push_back(l.to_string());

  for (int k = 0; k < steps; ++k) {
    const double t = k + 1 == steps ? to : from + (to - from) * k / (steps - 1);
    result.points.push_back(evaluate(family, t, tol));
  }

  for (std::size_t k = 0; k + 1 < result.points.size(); ++k) {
    const SweepPoint& a = result.points[k];
    const SweepPoint& b = result.points[k + 1];
    if (a.conclusion == b.conclusion) continue;
    double lo = a.parameter;
    double hi = b.parameter;
    while (hi - lo > resolution) {
      const double mid = 0.5 * (lo + hi);
      if (evaluate(family, mid, tol).conclusion == a.conclusion) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    result.thresholds.push_back(Threshold{lo, hi, 0.5 * (lo + hi), a.conclusion, b.conclusion});
  }
  return result;
}

std::string sweep_to_human(const SweepResult& result) {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << "  sweep " << to_string(result.family) << " over [" << result.from << ", "
      << result.to << "], " << result.steps << " steps, ppt tol " << result.tol << "\n\n";
  out << std::setw(10) << "t";
  for (const auto& l : result.labels) out << std::setw(12) << l;
  out << std::setw(14) << "verdict" << "\n";
  out << std::fixed;
  for (const auto& p : result.points) {
    out << std::setw(10) << std::setprecision(6) << p.parameter;
    for (double e : p.min_pt_eigenvalues) out << std::setw(12) << std::setprecision(6) << e;
    out << std::setw(14) << to_string(p.conclusion) << "\n";
  }
  out << "\n";
  if (result.thresholds.empty()) {
    out << "threshold   none found (verdict " << to_string(result.points.front().conclusion) << " throughout)\n";
  }
  for (const auto& th : result.thresholds) {
    out << "threshold   " << std::setprecision(9) << th.estimate << "  bracket [" << th.lo << ", " << th.hi << "]  "
        << to_string(th.below) << " -> " << to_string(th.above) << "\n";
  }
  return out.str();
}

std::string sweep_to_machine(const SweepResult& result) {
  using nlohmann::json;
  json points = json::array();
  for (const auto& p : result.points) {
    points.push_back({{"parameter", p.parameter},
                      {"min_pt_eigenvalues", p.min_pt_eigenvalues},
                      {"min_pt_eigenvalue", p.min_pt_eigenvalue},
                      {"conclusion", std::string(to_string(p.conclusion))}});
  }
  json thresholds = json::array();
  for (const auto& th : result.thresholds) {
    thresholds.push_back({{"lo", th.lo},
                          {"hi", th.hi},
                          {"estimate", th.estimate},
                          {"below", std::string(to_string(th.below))},
                          {"above", std::string(to_string(th.above))}});
  }
  json j = {{"schema", kReportSchema},
            {"tool", std::string(kToolName)},
            {"version", std::string(kToolVersion)},
            {"family", std::string(to_string(result.family))},
            {"range", {result.from, result.to}},
            {"steps", result.steps},
            {"ppt_tol", result.tol},
            {"labels", result.labels},
            {"points", std::move(points)},
            {"thresholds", std::move(thresholds)}};
  return j.dump(2) + "\n";
}

}  // namespace qsep::cli
