#include <doctest.h>

#include <random>

#include "isingq/sector.hpp"

using namespace isingq;

TEST_CASE("wide mask bit bookkeeping") {
  WideMask m;
  m.set(3);
  m.set(70);
  CHECK(m.test(3));
  CHECK(m.test(70));
  CHECK(!m.test(4));
  CHECK(m.popcount() == 2);
  CHECK(m.count_below(70) == 1);
  m.clear(3);
  CHECK(m.popcount() == 1);
  CHECK(WideMask::full(128).popcount() == 128);
}

TEST_CASE("sector enumeration and rank are inverse") {
  const SectorBasis basis(6, 2);  // masks with popcount 4
  CHECK(basis.dimension() == binomial(6, 2));
  for (std::int64_t r = 0; r < basis.dimension(); ++r) {
    CHECK(basis.mask(r).popcount() == 4);
    CHECK(basis.rank(basis.mask(r)) == r);
  }
}

TEST_CASE("occupation convention: present generator means empty mode") {
  WideMask m = WideMask::full(4);
  CHECK(SectorBasis::occupation(m, 2) == 0);
  m.clear(2);
  CHECK(SectorBasis::occupation(m, 2) == 1);
}

TEST_CASE("binomial values") {
  CHECK(binomial(16, 8) == 12870);
  CHECK(binomial(128, 1) == 128);
}

TEST_CASE("creation/annihilation anticommutator on sector states") {
  const int B = 8;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  const SectorBasis mid(B, 2), up(B, 3), down(B, 1);
  Eigen::VectorXd state(mid.dimension());
  for (int i = 0; i < state.size(); ++i) state[i] = gauss(rng);

  for (int a = 0; a < B; ++a) {
    for (int b = 0; b < B; ++b) {
      const Eigen::VectorXd via_up =
          apply_annihilation(up, mid, apply_creation(mid, up, state, a), b);
      const Eigen::VectorXd via_down =
          apply_creation(down, mid, apply_annihilation(mid, down, state, b), a);
      const Eigen::VectorXd anti = via_up + via_down;
      const Eigen::VectorXd expected = (a == b) ? state : Eigen::VectorXd::Zero(state.size());
      CHECK((anti - expected).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("one-particle round trip over both vacua") {
  const int B = 8;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd amps(B);
  for (int i = 0; i < B; ++i) amps[i] = gauss(rng);
  amps.normalize();

  for (VacuumKind vac : {VacuumKind::Empty, VacuumKind::Full}) {
    const SectorBasis basis(B, one_particle_sector(B, vac));
    const Eigen::VectorXd state = one_particle_state(basis, amps, vac);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const Eigen::VectorXd back = extract_one_particle(basis, state, vac);
    CHECK((back - amps).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("creation sign on the empty vacuum is (-1)^b") {
  const int B = 4;
  const SectorBasis basis(B, 1);
  for (int b = 0; b < B; ++b) {
    Eigen::VectorXd amps = Eigen::VectorXd::Zero(B);
    amps[b] = 1.0;
    const Eigen::VectorXd state = one_particle_state(basis, amps, VacuumKind::Empty);
    WideMask expect = WideMask::full(B);
    expect.clear(b);
    CHECK(state[basis.rank(expect)] == (b % 2 == 0 ? 1.0 : -1.0));
  }
}

TEST_CASE("two-particle states are antisymmetric and reject symmetric input") {
  const int B = 6;
  const SectorBasis basis(B, 2);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd amp(B, B);
  for (int i = 0; i < B; ++i) {
    for (int j = 0; j < i; ++j) {
      amp(i, j) = gauss(rng);
      amp(j, i) = -amp(i, j);
    }
    amp(i, i) = 0.0;
  }
  const Eigen::VectorXd state = two_particle_state(basis, amp);
  CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-14));
  const Eigen::MatrixXd back = extract_two_particle(basis, state);
  const Eigen::MatrixXd normalized = amp / amp.norm();
  CHECK((back - normalized).cwiseAbs().maxCoeff() < 1e-13);

  CHECK_THROWS_AS(two_particle_state(basis, Eigen::MatrixXd::Ones(B, B)), std::invalid_argument);
}
