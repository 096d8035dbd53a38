#include "qsep/cli/matrix_file.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace qsep::cli {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& why) {
  throw Error(ErrorKind::ParseError, where + ": " + why);
}

std::vector<double> read_part(const json& doc, const char* key, std::size_t dim) {
  if (!doc.contains(key)) parse_fail(key, "missing");
  const json& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != dim) {
    parse_fail(key, "expected an array of " + std::to_string(dim) + " rows");
  }
  std::vector<double> values;
  values.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = rows[r];
    const std::string where = std::string(key) + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != dim) parse_fail(where, "expected " + std::to_string(dim) + " numbers");
    for (std::size_t c = 0; c < dim; ++c) {
      if (!row[c].is_number()) parse_fail(where + "[" + std::to_string(c) + "]", "not a number");
      const double v = row[c].get<double>();
      if (!std::isfinite(v)) parse_fail(where + "[" + std::to_string(c) + "]", "not finite");
      values.push_back(v);
    }
  }
  return values;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  if (doc.contains("schema") && (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1)) {
    parse_fail("schema", "unsupported schema version");
  }
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) parse_fail("n_qubits", "missing integer");
  const int n = doc["n_qubits"].get<int>();
  if (n < 1 || n > 4) parse_fail("n_qubits", "must be between 1 and 4, got " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;

  const auto re = read_part(doc, "re", dim);
  const auto im = read_part(doc, "im", dim);
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Complex(re[i], im[i]);

  MatrixFile file{n, ComplexMatrix(dim, dim, std::move(entries)), std::nullopt};
  if (doc.contains("tol") && !doc["tol"].is_null()) {
    if (!doc["tol"].is_number() || doc["tol"].get<double>() < 0.0) parse_fail("tol", "expected a nonnegative number");
    file.tol = doc["tol"].get<double>();
  }
  return file;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string write_matrix_file(const ComplexMatrix& m, int n_qubits, std::optional<double> tol) {
  // One matrix row per line; json handles the shortest round-trip decimals.
  const auto write_part = [&m](std::ostream& out, bool imag) {
    out << "[\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
      out << "    " << row.dump() << (r + 1 < m.rows() ? ",\n" : "\n");
    }
    out << "  ]";
  };
  std::ostringstream out;
  out << "{\n  \"format\": \"qsep-matrix\",\n  \"schema\": 1,\n  \"n_qubits\": " << n_qubits << ",\n";
  if (tol) out << "  \"tol\": " << json(*tol).dump() << ",\n";
  out << "  \"re\": ";
  write_part(out, false);
  out << ",\n  \"im\": ";
  write_part(out, true);
  out << "\n}\n";
  return out.str();
}

}  // namespace qsep::cli
