#include "qsep/cli/commands.hpp"

#include <iostream>
#include <sstream>

#include "qsep/cli/matrix_file.hpp"
#include "qsep/cli/report.hpp"
#include "qsep/cli/sweep.hpp"
#include "qsep/states.hpp"

namespace qsep::cli {

namespace {

struct LoadedState {
  DensityMatrix rho;
  std::string bytes;
};

LoadedState load_state(const std::string& path, const GlobalOptions& opts) {
  std::string bytes = read_text(path);
  MatrixFile file = parse_matrix_file(bytes);
  const double tol = opts.tol.value_or(file.tol.value_or(kValidationTol));
  DensityMatrix rho = opts.no_validate ? DensityMatrix::unchecked(std::move(file.matrix), file.n_qubits, tol)
                                       : validate_density(file.matrix, file.n_qubits, tol);
  return {std::move(rho), std::move(bytes)};
}

void require_multipartite(const DensityMatrix& rho) {
  if (rho.n_qubits() != 3 && rho.n_qubits() != 4) {
    throw Error(ErrorKind::WrongArity,
                "expected a 3- or 4-qubit state, got " + std::to_string(rho.n_qubits()) + " qubits");
  }
}

int report_error(const Error& e, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
  if (opts.format == OutputFormat::Machine) out << error_to_machine(e);
  return kExitError;
}

constexpr const char* kMakeStateUsage =
    "families:\n"
    "  ghz       [--qubits 3|4]\n"
    "  werner    --x X              (0 <= X <= 1)\n"
    "  embed     --way 1..6 [--r FILE]  (two-qubit state R, Bell by default)\n"
    "  molecule  --p-ab P --p-ac P --p-bc P  (nonnegative, summing to 1)\n"
    "  upb\n"
    "  product   --a V --b V --c V [--d V]  (V = re0,re1 or re0,im0,re1,im1)\n";

[[noreturn]] void bad_params(const std::string& why) {
  throw Error(ErrorKind::BadParams, why + "\n" + kMakeStateUsage);
}

Qubit parse_qubit(const std::vector<double>& v, const char* name) {
  if (v.size() == 2) return Qubit{Complex(v[0], 0.0), Complex(v[1], 0.0)};
  if (v.size() == 4) return Qubit{Complex(v[0], v[1]), Complex(v[2], v[3])};
  bad_params(std::string("product: --") + name + " needs 2 or 4 numbers");
}

}  // namespace

int cmd_analyze(const std::string& path, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const LoadedState state = load_state(path, opts);
    require_multipartite(state.rho);
    const double ppt_tol = state.rho.tol();
    const WitnessReport w = witness(state.rho, ppt_tol);
    const ReportDocument doc =
        make_report(w, path, state.bytes, state.rho.n_qubits(), state.rho.validated(), state.rho.tol());
    out << (opts.format == OutputFormat::Machine ? to_machine(doc) : to_human(doc));
    if (opts.no_validate) err << "warning: input was not validated (--no-validate)\n";
    return w.conclusion == Conclusion::Entangled ? kExitEntangled : kExitOk;
  } catch (const Error& e) {
    return report_error(e, opts, out, err);
  }
}

int cmd_reduce(const std::string& path, const std::string& label, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err) {
  try {
    const LoadedState state = load_state(path, opts);
    require_multipartite(state.rho);
    const ReductionLabel parsed = parse_label(label, state.rho.n_qubits());
    const DensityMatrix reduced = reduce(state.rho, parsed);
    out << write_matrix_file(reduced.matrix(), 2);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, opts, out, err);
  }
}

int cmd_make_state(const MakeStateOptions& params, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const std::string& f = params.family;
    DensityMatrix rho = maximally_mixed(1);
    if (f == "ghz") {
      if (params.qubits != 3 && params.qubits != 4) bad_params("ghz: --qubits must be 3 or 4");
      rho = ghz(params.qubits);
    } else if (f == "werner") {
      if (!params.x) bad_params("werner: --x is required");
      rho = werner_embedded(*params.x);
    } else if (f == "embed") {
      if (!params.way) bad_params("embed: --way is required");
      DensityMatrix r = bell();
      if (params.r_path) {
        MatrixFile file = parse_matrix_file(read_text(*params.r_path));
        if (file.n_qubits != 2) bad_params("embed: --r must hold a two-qubit state");
        r = validate_density(file.matrix, 2, opts.tol.value_or(file.tol.value_or(kValidationTol)));
      }
      rho = embed_bipartite(r, *params.way);
    } else if (f == "molecule") {
      if (!params.p_ab || !params.p_ac || !params.p_bc) bad_params("molecule: --p-ab, --p-ac and --p-bc are required");
      rho = molecule_state(MoleculeParams{*params.p_ab, *params.p_ac, *params.p_bc});
    } else if (f == "upb") {
      rho = upb_state();
    } else if (f == "product") {
      if (params.a.empty() || params.b.empty() || params.c.empty()) bad_params("product: --a, --b and --c are required");
      std::vector<Qubit> factors{parse_qubit(params.a, "a"), parse_qubit(params.b, "b"), parse_qubit(params.c, "c")};
      if (!params.d.empty()) factors.push_back(parse_qubit(params.d, "d"));
      const PureState psi = product_pure_state(factors, opts.tol.value_or(kValidationTol));
      rho = psi.density();
    } else {
      bad_params("unknown family '" + f + "'");
    }
    out << write_matrix_file(rho.matrix(), rho.n_qubits());
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, opts, out, err);
  }
}

int cmd_sweep(const SweepOptions& params, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const SweepResult result = run_sweep(parse_sweep_family(params.family), params.from, params.to, params.steps,
                                         opts.tol.value_or(kValidationTol));
    out << (opts.format == OutputFormat::Machine ? sweep_to_machine(result) : sweep_to_human(result));
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, opts, out, err);
  }
}

}  // namespace qsep::cli
