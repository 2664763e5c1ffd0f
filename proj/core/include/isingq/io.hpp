#pragma once

// Plain-text artifact writers: CSV for field/trajectory data and
// coordinate-format (Matrix Market) export for sparse operators.  All
// numbers are written with %.17g so repeated runs are byte-identical.

#include <string>
#include <vector>

#include "isingq/generator.hpp"

namespace isingq {

std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

void write_matrix_coordinate(const std::string& path, const SparseMatrixD& m);

}  // namespace isingq
