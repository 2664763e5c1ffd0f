#include "isingq/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace isingq {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw std::runtime_error("write_csv: ragged row");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

void write_matrix_coordinate(const std::string& path, const SparseMatrixD& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_matrix_coordinate: cannot open " + path);
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << '\n';
  for (int o = 0; o < m.outerSize(); ++o) {
    for (SparseMatrixD::InnerIterator it(m, o); it; ++it) {
      out << (it.row() + 1) << ' ' << (it.col() + 1) << ' ' << format_double(it.value()) << '\n';
    }
  }
}

}  // namespace isingq
