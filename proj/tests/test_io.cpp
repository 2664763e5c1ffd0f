#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "isingq/io.hpp"

using namespace isingq;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("doubles are formatted round-trippably") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 12345.6789, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("CSV writer emits header and rows") {
  const std::string path = "io_test.csv";
  write_csv(path, {"t", "w"}, {{0.0, 1.0}, {0.5, 0.25}});
  const std::string text = slurp(path);
  CHECK(text.substr(0, 4) == "t,w\n");
  CHECK(text.find("0.5,0.25") != std::string::npos);
  CHECK_THROWS(write_csv(path, {"t", "w"}, {{1.0}}));
  std::remove(path.c_str());
}

TEST_CASE("coordinate export writes Matrix Market format") {
  SparseMatrixD m(3, 3);
  m.insert(0, 1) = 2.5;
  m.insert(2, 0) = -1.0;
  m.makeCompressed();
  const std::string path = "io_test.mtx";
  write_matrix_coordinate(path, m);
  const std::string text = slurp(path);
  CHECK(text.find("%%MatrixMarket matrix coordinate real general") == 0);
  CHECK(text.find("3 3 2") != std::string::npos);
  CHECK(text.find("1 2 2.5") != std::string::npos);
  CHECK(text.find("3 1 -1") != std::string::npos);
  std::remove(path.c_str());
}
