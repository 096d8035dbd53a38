#include "qsep/cli/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qsep::cli {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report field '") + key + "': " + e.what());
  }
}

}  // namespace

ReportDocument make_report(const WitnessReport& witness, std::string source, std::string_view input_bytes,
                           int n_qubits, bool validated, double validation_tol) {
  ReportDocument doc;
  doc.source = std::move(source);
  doc.sha256 = sha256_hex(input_bytes);
  doc.n_qubits = n_qubits;
  doc.validated = validated;
  doc.validation_tol = validation_tol;
  doc.ppt_tol = witness.verdicts.empty() ? validation_tol : witness.verdicts.front().tolerance_used;
  for (const auto& v : witness.verdicts) {
    doc.reductions.push_back(
        ReductionRow{v.label.to_string(), std::string(to_string(v.label.kind)), v.min_pt_eigenvalue, v.separable});
  }
  doc.conclusion = std::string(to_string(witness.conclusion));
  if (witness.culprit) doc.culprit = witness.culprit->to_string();
  doc.min_pt_eigenvalue = witness.min_pt_eigenvalue();
  return doc;
}

std::string to_machine(const ReportDocument& doc) {
  json rows = json::array();
  for (const auto& r : doc.reductions) {
    rows.push_back({{"label", r.label}, {"kind", r.kind}, {"min_pt_eigenvalue", r.min_pt_eigenvalue}, {"separable", r.separable}});
  }
  json j = {
      {"schema", doc.schema},
      {"tool", doc.tool},
      {"version", doc.version},
      {"input", {{"source", doc.source}, {"sha256", doc.sha256}, {"n_qubits", doc.n_qubits}}},
      {"validation", {{"validated", doc.validated}, {"status", doc.validated ? "ok" : "skipped"}}},
      {"tolerances", {{"validation", doc.validation_tol}, {"ppt", doc.ppt_tol}}},
      {"reductions", std::move(rows)},
      {"conclusion", doc.conclusion},
      {"culprit", doc.culprit ? json(*doc.culprit) : json(nullptr)},
      {"min_pt_eigenvalue", doc.min_pt_eigenvalue},
  };
  if (!doc.validated) {
    j["validation"]["warning"] = "input was not validated as a density matrix; verdicts may be meaningless";
  }
  return j.dump(2) + "\n";
}

ReportDocument parse_machine_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  ReportDocument doc;
  doc.schema = field<int>(j, "schema");
  if (doc.schema != kReportSchema) throw Error(ErrorKind::ParseError, "report: unsupported schema");
  doc.tool = field<std::string>(j, "tool");
  doc.version = field<std::string>(j, "version");
  const json& input = j.at("input");
  doc.source = field<std::string>(input, "source");
  doc.sha256 = field<std::string>(input, "sha256");
  doc.n_qubits = field<int>(input, "n_qubits");
  doc.validated = field<bool>(j.at("validation"), "validated");
  doc.validation_tol = field<double>(j.at("tolerances"), "validation");
  doc.ppt_tol = field<double>(j.at("tolerances"), "ppt");
  for (const json& r : j.at("reductions")) {
    doc.reductions.push_back(ReductionRow{field<std::string>(r, "label"), field<std::string>(r, "kind"),
                                          field<double>(r, "min_pt_eigenvalue"), field<bool>(r, "separable")});
  }
  doc.conclusion = field<std::string>(j, "conclusion");
  if (!j.at("culprit").is_null()) doc.culprit = field<std::string>(j, "culprit");
  doc.min_pt_eigenvalue = field<double>(j, "min_pt_eigenvalue");
  return doc;
}

std::string to_human(const ReportDocument& doc) {
  std::ostringstream out;
  out << doc.tool << " " << doc.version << "  analyze " << doc.source << "\n";
  out << "input       " << doc.n_qubits << " qubits, sha256 " << doc.sha256.substr(0, 16) << "\n";
  if (doc.validated) {
    out << "validation  ok (tol " << doc.validation_tol << ")\n";
  } else {
    out << "\n";
    out << "  !!! WARNING: input was NOT validated as a density matrix (--no-validate).\n";
    out << "  !!! Reductions and verdicts below may be meaningless.\n\n";
  }
  out << "ppt tol     " << doc.ppt_tol << "\n\n";
  out << std::left << std::setw(8) << "label" << std::setw(14) << "kind" << std::right << std::setw(24)
      << "min PT eigenvalue" << "  verdict\n";
  for (const auto& r : doc.reductions) {
    out << std::left << std::setw(8) << r.label << std::setw(14) << r.kind << std::right << std::setw(24)
        << std::setprecision(12) << r.min_pt_eigenvalue << "  " << (r.separable ? "separable" : "ENTANGLED") << "\n";
  }
  out << "\nconclusion  " << doc.conclusion;
  if (doc.culprit) out << " (culprit " << *doc.culprit << ", min PT eigenvalue " << doc.min_pt_eigenvalue << ")";
  if (doc.conclusion == "INCONCLUSIVE") out << " (every reduction is PPT; this does not certify separability)";
  out << "\n";
  return out.str();
}

std::string error_to_machine(const Error& e) {
  json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  err["magnitude"] = e.magnitude() ? json(*e.magnitude()) : json(nullptr);
  json j = {{"schema", kReportSchema}, {"tool", std::string(kToolName)}, {"version", std::string(kToolVersion)}, {"error", err}};
  return j.dump(2) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::ParseError, "sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

}  // namespace qsep::cli
