#include <doctest.h>

#include <cmath>
#include <random>

#include "isingq/ensemble.hpp"

using namespace isingq;

namespace {

Eigen::SparseMatrix<double> random_antisymmetric(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-0.3, 0.3);
  std::uniform_int_distribution<int> idx(0, dim - 1);
  std::vector<Eigen::Triplet<double>> trips;
  for (int nz = 0; nz < 6 * dim; ++nz) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const double v = val(rng);
    trips.emplace_back(i, j, v);
    trips.emplace_back(j, i, -v);
  }
  Eigen::SparseMatrix<double> K(dim, dim);
  K.setFromTriplets(trips.begin(), trips.end());
  return K;
}

}  // namespace

TEST_CASE("split and join round trip") {
  ClassicalWaveFunction wf;
  wf.q.resize(4);
  wf.q << 0.5, -0.5, 0.5, 0.5;
  const SplitResult parts = split(wf);
  CHECK(parts.probabilities.p.sum() == doctest::Approx(1.0));
  CHECK(parts.signs.s[1] == -1);
  const ClassicalWaveFunction back = join(parts.probabilities, parts.signs);
  CHECK((back.q - wf.q).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("join rejects bad probabilities") {
  ProbabilityDistribution p;
  SignVector s;
  p.p.resize(2);
  s.s.resize(2);
  s.s << 1, 1;
  p.p << -0.5, 1.5;
  CHECK_THROWS(join(p, s));
  p.p << 0.3, 0.3;  // not normalized
  CHECK_THROWS(join(p, s));
}

TEST_CASE("normalization check") {
  ClassicalWaveFunction wf;
  wf.q = Eigen::VectorXd::Ones(4);
  CHECK_THROWS(wf.check_normalized());
}

TEST_CASE("evolution rejects non-antisymmetric generators") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(3, 3);
  Eigen::VectorXd q = Eigen::VectorXd::Unit(3, 0);
  CHECK_THROWS(evolve(q, bad, 1.0));
}

TEST_CASE("exact and Cayley integrators agree and preserve the norm") {
  const int dim = 60;
  const Eigen::SparseMatrix<double> K = random_antisymmetric(dim, 17);
  std::mt19937_64 rng(18);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(dim);
  for (int i = 0; i < dim; ++i) q[i] = gauss(rng);
  q.normalize();

  EvolveOptions exact;
  exact.method = EvolveMethod::ExactExp;
  EvolveOptions cayley;
  cayley.method = EvolveMethod::Cayley;
  cayley.dt = 1e-3;

  const Eigen::VectorXd qe = evolve(q, K, 1.0, exact);
  const Eigen::VectorXd qc = evolve(q, K, 1.0, cayley);
  CHECK(std::abs(qe.norm() - 1.0) < 1e-13);
  CHECK(std::abs(qc.norm() - 1.0) < 1e-12);
  CHECK((qe - qc).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("second-order law holds for the two-state solution") {
  const double omega = 1.3, alpha = 0.4, dt = 2e-4;
  std::vector<double> p0;
  for (int i = 0; i <= 2000; ++i) {
    const double c = std::cos(omega * i * dt + alpha);
    p0.push_back(c * c);
  }
  CHECK(second_order_check(p0, dt, omega) < 1e-6);
  CHECK_THROWS(second_order_check({1.0, 0.5}, dt, omega));
}

TEST_CASE("sign tracking flags flips and their probability") {
  std::vector<Eigen::VectorXd> series;
  std::vector<double> times;
  const double dt = 1e-4;
  for (int i = 0; i <= 20000; ++i) {
    Eigen::VectorXd q(2);
    q << std::cos(i * dt + 1.0), -std::sin(i * dt + 1.0);
    series.push_back(q);
    times.push_back(i * dt);
  }
  const SignTrackResult fine = track_signs(series, times);
  CHECK(fine.jumps.size() == 1);  // cos passes zero once in [1, 3]
  CHECK(fine.jumps[0].state == 0);
  CHECK(fine.jumps[0].below_threshold);

  // coarse sampling: the flip is detected but p at the flip is large
  std::vector<Eigen::VectorXd> coarse(series.begin(), series.end());
  std::vector<double> coarse_t(times.begin(), times.end());
  std::vector<Eigen::VectorXd> sparse;
  std::vector<double> sparse_t;
  for (size_t i = 0; i < coarse.size(); i += 4000) {
    sparse.push_back(coarse[i]);
    sparse_t.push_back(coarse_t[i]);
  }
  const SignTrackResult rough = track_signs(sparse, sparse_t);
  CHECK(rough.jumps.size() == 1);
  CHECK(!rough.jumps[0].below_threshold);
}
