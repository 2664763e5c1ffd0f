#include <doctest.h>

#include <random>

#include "isingq/grassmann.hpp"

using namespace isingq;

TEST_CASE("generators anticommute and square to zero") {
  const GrassmannElement p0 = variable_element(3, 0);
  const GrassmannElement p1 = variable_element(3, 1);
  CHECK(norm(add(multiply(p0, p1), multiply(p1, p0))) == 0.0);
  CHECK(norm(multiply(p0, p0)) == 0.0);
}

TEST_CASE("left derivative picks up reordering signs") {
  // d/dpsi_0 (psi_0 psi_1) = psi_1, d/dpsi_1 (psi_0 psi_1) = -psi_0
  const GrassmannElement prod = multiply(variable_element(2, 0), variable_element(2, 1));
  CHECK(derive(prod, 0) == variable_element(2, 1));
  CHECK(derive(prod, 1) == scale(variable_element(2, 0), -1.0));
  CHECK(norm(derive(variable_element(2, 1), 0)) == 0.0);
}

TEST_CASE("vacuum and Berezin integral") {
  const GrassmannElement vac = vacuum_element(3);
  CHECK(berezin_integrate(vac) == 1.0);
  CHECK(berezin_integrate(variable_element(3, 1)) == 0.0);
}

TEST_CASE("conjugate basis satisfies conj * basis = vacuum") {
  for (int n = 1; n <= 6; ++n) {
    for (BasisMask tau = 0; tau < (1u << n); ++tau) {
      const ConjugateBasis cb = conjugate_basis(n, tau);
      const GrassmannElement prod =
          multiply(scale(basis_element(n, cb.mask), cb.sign), basis_element(n, tau));
      CHECK(berezin_integrate(prod) == 1.0);
    }
  }
}

TEST_CASE("pinned example: conjugate of psi_0 at B=2 is -psi_1") {
  const GrassmannElement got = conjugate(variable_element(2, 0));
  CHECK(norm(add(got, variable_element(2, 1))) == 0.0);
}

TEST_CASE("anticommutator of creation and annihilation is delta (B=3)") {
  const int B = 3;
  for (int a = 0; a < B; ++a) {
    for (int b = 0; b < B; ++b) {
      for (BasisMask tau = 0; tau < (1u << B); ++tau) {
        const GrassmannElement g = basis_element(B, tau);
        GrassmannElement anti = add(derive(multiply_var(b, g), a), multiply_var(b, derive(g, a)));
        if (a == b) anti = add(anti, scale(g, -1.0));
        CHECK(norm(anti) == 0.0);
      }
    }
  }
}

TEST_CASE("reorder sign of disjoint monomials") {
  CHECK(reorder_sign(0b001, 0b010) == 1.0);   // psi0 psi1 already canonical
  CHECK(reorder_sign(0b010, 0b001) == -1.0);  // psi1 psi0 needs one swap
}

TEST_CASE("wavefunction round trip") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  const int B = 4;
  Eigen::VectorXd q(1 << B);
  for (int i = 0; i < q.size(); ++i) q[i] = gauss(rng);
  q.normalize();
  const GrassmannElement g = from_wavefunction(q, B);
  CHECK((wavefunction_of(g) - q).cwiseAbs().maxCoeff() == 0.0);
  CHECK(norm(g) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS(from_wavefunction(2.0 * q, B));
}

TEST_CASE("mismatched variable sets are rejected") {
  CHECK_THROWS(multiply(variable_element(2, 0), variable_element(3, 0)));
}

TEST_CASE("debug dump is JSON-shaped") {
  const std::string dump = dump_json(variable_element(2, 1));
  CHECK(dump.find("bits") != std::string::npos);
  CHECK(dump.find("coeff") != std::string::npos);
}
