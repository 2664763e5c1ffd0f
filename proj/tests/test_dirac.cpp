#include <doctest.h>

#include <complex>

#include "isingq/dirac.hpp"

using namespace isingq;

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

TEST_CASE("discretized Hamiltonian is hermitean") {
  const Grid grid = Grid::line(6, 0.5);
  HamiltonianSpec spec;
  spec.mass = 0.7;
  spec.coupling = 0.4;
  spec.A0 = {0.1, -0.2, 0.3, 0.0, 0.2, -0.1};
  spec.Avec[2] = {0.05, 0.1, -0.05, 0.2, 0.0, 0.1};
  CHECK(hermiticity_defect(build_dirac_hamiltonian(grid, spec)) < 1e-14);
}

TEST_CASE("rest frame oscillates at exactly the mass frequency") {
  const Grid grid = Grid::line(4, 0.5);
  HamiltonianSpec spec;
  spec.mass = 1.3;
  const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
  // A very wide packet at zero momentum is spatially uniform to rounding,
  // i.e. an exact rest state of the lattice Hamiltonian.
  const DiracField phi0 = make_gaussian_dirac_packet(grid, spec.mass, 1.0, 1e8, 0.0);
  const double t = 0.8;
  const DiracField phit = dirac_evolve(phi0, H, t);
  // positive-energy rest state: phi(t) = e^{-i m t} phi(0)
  const Eigen::VectorXcd expected = std::exp(-kI * spec.mass * t) * phi0.phi;
  CHECK((phit.phi - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("constant A0 is a pure global phase on the density") {
  const Grid grid = Grid::line(8, 0.5);
  HamiltonianSpec free_spec;
  HamiltonianSpec gauged = free_spec;
  gauged.coupling = 0.9;
  gauged.A0.assign(grid.num_sites(), 0.6);

  const DiracField phi0 = make_gaussian_dirac_packet(grid, 0.0, 2.0, 0.8, 1.2);
  const double t = 0.7;
  const DiracField a = dirac_evolve(phi0, build_dirac_hamiltonian(grid, free_spec), t);
  const DiracField b = dirac_evolve(phi0, build_dirac_hamiltonian(grid, gauged), t);
  CHECK((a.density() - b.density()).cwiseAbs().maxCoeff() < 1e-12);
  const Eigen::VectorXcd rephased = std::exp(-kI * gauged.coupling * 0.6 * t) * a.phi;
  CHECK((b.phi - rephased).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("plane waves obey the lattice dispersion") {
  const Grid grid = Grid::line(8, 0.5);
  HamiltonianSpec spec;
  spec.mass = 0.9;
  const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
  const double k = 2.0 * M_PI * 2 / (grid.n[0] * grid.dx);
  Eigen::VectorXcd phi(4 * grid.num_sites());
  for (int s = 0; s < grid.num_sites(); ++s) {
    const std::complex<double> wave = std::exp(kI * k * (s * grid.dx));
    for (int sp = 0; sp < 4; ++sp) phi[4 * s + sp] = wave * double(1 + sp);
  }
  const double w2 = std::pow(lattice_dispersion(grid, {k, 0.0, 0.0}, spec.mass), 2);
  const Eigen::VectorXcd h2 = H * (H * phi).eval();
  CHECK((h2 - w2 * phi).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("sector crosscheck reproduces the Dirac evolution") {
  const Grid grid = Grid::line(4, 0.5);
  HamiltonianSpec spec;
  spec.mass = 0.6;
  spec.coupling = 0.5;
  spec.A0 = {0.2, -0.1, 0.0, 0.3};
  DiracField phi0 = make_gaussian_dirac_packet(grid, spec.mass, 1.0, 0.7, 1.0);
  CHECK(crosscheck_sector(phi0, spec, 0.9) < 1e-10);
}

TEST_CASE("basis change diagonalizes gamma^0 gammabar") {
  const Eigen::Matrix4cd& U = diagonalizing_basis();
  CHECK((U * U.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  const auto& alg = spinor_algebra();
  const Eigen::Matrix4cd diag = U.adjoint() * alg.g0gbar * U;
  Eigen::Vector4cd expected(1.0, 1.0, -1.0, -1.0);
  CHECK((diag - Eigen::Matrix4cd(expected.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("non-relativistic reduction is exact in the rest frame") {
  const Grid grid = Grid::line(16, 0.5);
  HamiltonianSpec spec;
  spec.mass = 3.0;
  const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
  // Uniform zero-momentum state: the Schroedinger field psi must then be
  // constant in time, with a vanishing lower-component residual.
  const DiracField phi0 = make_gaussian_dirac_packet(grid, spec.mass, 4.0, 1e8, 0.0);
  const ReductionResult r0 = nonrel_reduce(phi0, spec.mass, 0.0);
  CHECK(r0.residual < 1e-12);
  const double t = 1.1;
  const ReductionResult rt = nonrel_reduce(dirac_evolve(phi0, H, t), spec.mass, t);
  CHECK((rt.psi - r0.psi).cwiseAbs().maxCoeff() < 1e-9);
  CHECK_THROWS(nonrel_reduce(phi0, 0.0, 0.0));
}

TEST_CASE("Crank-Nicolson propagation converges to the exact flow") {
  const Grid grid = Grid::line(8, 0.5);
  HamiltonianSpec spec;
  spec.mass = 0.8;
  const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
  const DiracField phi0 = make_gaussian_dirac_packet(grid, spec.mass, 2.0, 0.8, 0.5);
  PropagatorOptions cn;
  cn.method = PropagatorMethod::CrankNicolson;
  cn.dt = 1e-3;
  const DiracField a = dirac_evolve(phi0, H, 0.5);
  const DiracField b = dirac_evolve(phi0, H, 0.5, cn);
  CHECK(std::abs(b.norm_sq() - 1.0) < 1e-12);
  CHECK((a.phi - b.phi).cwiseAbs().maxCoeff() < 1e-5);

  PropagatorOptions coarse;
  coarse.method = PropagatorMethod::CrankNicolson;
  coarse.dt = 100.0;
  CHECK_THROWS(dirac_evolve(phi0, H, 200.0, coarse));
}
