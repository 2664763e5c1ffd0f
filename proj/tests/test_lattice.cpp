#include <doctest.h>

#include "isingq/lattice.hpp"

using namespace isingq;

TEST_CASE("corner stencil resolves the identity and the T matrices") {
  Eigen::Matrix4d sum = Eigen::Matrix4d::Zero();
  std::array<Eigen::Matrix4d, 3> weighted{Eigen::Matrix4d::Zero(), Eigen::Matrix4d::Zero(),
                                          Eigen::Matrix4d::Zero()};
  for (int bits = 0; bits < 8; ++bits) {
    const std::array<int, 3> v{(bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1, (bits & 4) ? 1 : -1};
    const Eigen::Matrix4d y = stencil(v);
    sum += y;
    for (int k = 0; k < 3; ++k) weighted[k] += v[k] * y;

    // factorized form
    const Eigen::Matrix4d prod =
        stencil_axis(0, v[0]) * stencil_axis(1, v[1]) * stencil_axis(2, v[2]);
    CHECK((y - prod).cwiseAbs().maxCoeff() < 1e-15);
  }
  CHECK((sum - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  const auto& alg = spinor_algebra();
  for (int k = 0; k < 3; ++k) {
    CHECK((weighted[k] + alg.T[k]).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("site indexing round trip and periodic shifts") {
  LatticeGeometry geometry;
  geometry.sites_per_axis = {2, 3, 4};
  CHECK(geometry.num_sites() == 24);
  for (int s = 0; s < geometry.num_sites(); ++s) {
    CHECK(geometry.site_index(geometry.site_coord(s)) == s);
  }
  const int s0 = geometry.site_index({0, 0, 0});
  CHECK(geometry.shift_site(geometry.shift_site(s0, 2, 1), 2, 3) == s0);
  CHECK(geometry.shift_site(s0, 2, -1) == geometry.site_index({0, 0, 3}));
}

TEST_CASE("active axes track reduced geometries") {
  CHECK(LatticeGeometry::line(5).active_axes() == std::vector<int>{2});
  CHECK(LatticeGeometry::cube(3).active_axes() == std::vector<int>{0, 1, 2});
}

TEST_CASE("parameter validation") {
  const LatticeGeometry geometry = LatticeGeometry::line(4);
  ModelParams params;  // Ns = 4
  params.mass = 1.0;
  CHECK_THROWS(params.validate(geometry));  // Ns=4 carries no mass term

  ModelParams gauge;
  gauge.num_species = 8;
  gauge.coupling = 1.0;
  gauge.A0 = {1.0, 2.0};  // wrong length
  CHECK_THROWS(gauge.validate(geometry));
}

TEST_CASE("variable index round trip") {
  const LatticeGeometry geometry = LatticeGeometry::line(3);
  ModelParams params;
  params.num_species = 8;
  const int B = num_variables(geometry, params);
  CHECK(B == 24);
  for (int i = 0; i < B; ++i) {
    const VariableIndex v = variable_unpack(geometry, params, i);
    CHECK(variable_index(geometry, params, v) == i);
  }
}
