#include <doctest.h>

#include <random>

#include "isingq/observables.hpp"

using namespace isingq;

namespace {

struct Fixture {
  LatticeGeometry geometry = LatticeGeometry::line(3, 0.5);
  ModelParams params;
  int B;
  Fixture() : B(num_variables(geometry, params)) {}
};

}  // namespace

TEST_CASE("total number observable is constant on a sector") {
  Fixture f;
  for (int m : {0, 1, 2}) {
    const SectorBasis basis(f.B, m);
    const DiagonalObservable n = total_number_observable(basis);
    CHECK(n.values.minCoeff() == double(m));
    CHECK(n.values.maxCoeff() == double(m));
  }
}

TEST_CASE("occupation spectra are {0,1}") {
  Fixture f;
  const SectorBasis basis(f.B, 2);
  const DiagonalObservable occ = occupation_observable(basis, f.geometry, f.params, {0, 1, 2});
  for (double v : occ.spectrum()) CHECK((v == 0.0 || v == 1.0));
}

TEST_CASE("local numbers sum to the total") {
  Fixture f;
  const SectorBasis basis(f.B, 2);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(basis.dimension());
  for (int site = 0; site < f.geometry.num_sites(); ++site) {
    sum += local_number_observable(basis, f.geometry, f.params, site).values;
  }
  CHECK((sum - total_number_observable(basis).values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("position observable reads site coordinates on localized states") {
  Fixture f;
  const SectorBasis basis(f.B, 1);
  const DiagonalObservable x = position_observable(basis, f.geometry, f.params, 2);
  for (int site = 0; site < f.geometry.num_sites(); ++site) {
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(f.B);
    amps[variable_index(f.geometry, f.params, {0, site, 0})] = 1.0;
    const Eigen::VectorXd q = one_particle_state(basis, amps, VacuumKind::Empty);
    CHECK(expect(x, q).quantum == doctest::Approx(f.geometry.coordinate(site, 2)));
  }
}

TEST_CASE("classical and quantum expectation rules coincide for diagonal observables") {
  Fixture f;
  const SectorBasis basis(f.B, 1);
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(basis.dimension());
  for (int i = 0; i < q.size(); ++i) q[i] = gauss(rng);
  q.normalize();
  const DiagonalObservable x = position_observable(basis, f.geometry, f.params, 2);
  const ExpectationPair pair = expect(x, q);
  CHECK(std::abs(pair.classical - pair.quantum) < 1e-13);
}

TEST_CASE("number flow matches the generator on the one-particle sector") {
  Fixture f;
  const SectorBasis basis(f.B, 1);
  const SparseMatrixD K = build_generator_sector(f.geometry, f.params, basis);
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(basis.dimension());
  for (int i = 0; i < q.size(); ++i) q[i] = gauss(rng);
  q.normalize();
  for (int site = 0; site < f.geometry.num_sites(); ++site) {
    const DiagonalObservable nx = local_number_observable(basis, f.geometry, f.params, site);
    CHECK(std::abs(expectation_flow(nx, q, K) -
                   local_number_flow(basis, f.geometry, f.params, q, site)) < 1e-12);
  }
}

TEST_CASE("position moments are consistent between rules") {
  Fixture f;
  const SectorBasis basis(f.B, 1);
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(basis.dimension());
  for (int i = 0; i < q.size(); ++i) q[i] = gauss(rng);
  q.normalize();
  const PositionMoments moments = position_moments(basis, f.geometry, f.params, q);
  const DiagonalObservable x = position_observable(basis, f.geometry, f.params, 2);
  DiagonalObservable x2 = x;
  x2.values = x.values.cwiseProduct(x.values);
  const double mean = expect(x, q).classical;
  CHECK(moments.mean[2] == doctest::Approx(mean).epsilon(1e-12));
  CHECK(moments.dispersion[2] ==
        doctest::Approx(expect(x2, q).classical - mean * mean).epsilon(1e-10));
}
