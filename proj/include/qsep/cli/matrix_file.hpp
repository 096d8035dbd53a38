#pragma once

// Structured-text (JSON) container for a density matrix:
//
//   {
//     "format": "qsep-matrix",
//     "schema": 1,
//     "n_qubits": 3,
//     "re": [[...], ...],   // 2^n rows of 2^n reals
//     "im": [[...], ...],
//     "tol": 1e-9           // optional
//   }
//
// Real and imaginary parts are kept in separate arrays. Numbers are written
// as shortest round-trip decimals, so parse(write(m)) == m bit for bit.

#include <optional>
#include <string>
#include <string_view>

#include "qsep/linalg.hpp"

namespace qsep::cli {

struct MatrixFile {
  int n_qubits = 0;
  ComplexMatrix matrix;
  std::optional<double> tol;
};

/// Throws Error(ParseError) naming the offending location.
MatrixFile parse_matrix_file(std::string_view text);

/// Reads a file, or standard input for "-".
std::string read_text(const std::string& path);

std::string write_matrix_file(const ComplexMatrix& m, int n_qubits, std::optional<double> tol = std::nullopt);

}  // namespace qsep::cli
