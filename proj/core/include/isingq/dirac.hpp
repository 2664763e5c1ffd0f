#pragma once

// Direct one-particle quantum solvers: the complex 4-spinor Dirac
// equation i d_t phi = H phi with
//   H = i T_k d_k + m g0 gammabar + e (A0 - T_k A_k),
// its cross-check against the many-body one-particle sector, and the
// non-relativistic two-component reduction.
//
// Grids are periodic with central spatial differences, matching the
// symmetric-difference sector generator when the grid spacing equals the
// sublattice spacing 2*delta. For d < 3 the last d axes are active, so a
// one-dimensional grid runs through T_3.

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "isingq/lattice.hpp"

namespace isingq {

using Complex = std::complex<double>;
using SparseMatrixC = Eigen::SparseMatrix<Complex>;

struct Grid {
  int dim = 1;                     // spatial dimension d in {1,2,3}
  std::array<int, 3> n{1, 1, 1};   // sites per active axis (last dim entries used)
  double dx = 1.0;

  static Grid line(int sites, double dx);
  int num_sites() const;
  std::vector<int> active_axes() const;  // mapped to lattice axes 3-dim..2
};

struct DiracField {
  Grid grid;
  Eigen::VectorXcd phi;  // 4 components per site, site-major

  double norm_sq() const;        // sum_x phi^dag phi * dx^d
  Eigen::VectorXd density() const;  // phi^dag phi per site
};

struct HamiltonianSpec {
  double mass = 0.0;
  double coupling = 0.0;
  std::vector<double> A0;
  std::array<std::vector<double>, 3> Avec{};
};

// Discretized Hamiltonian; hermitean by construction (checked, defect
// must stay below 1e-12).
SparseMatrixC build_dirac_hamiltonian(const Grid& grid, const HamiltonianSpec& spec);
double hermiticity_defect(const SparseMatrixC& H);

enum class PropagatorMethod { Auto, ExactExp, CrankNicolson };

struct PropagatorOptions {
  PropagatorMethod method = PropagatorMethod::Auto;
  double dt = 0.0;          // Crank-Nicolson step; 0 picks one from ||H||
  bool accuracy_guard = true;  // reject steps with h*||H|| too large
};

// Unitary propagation by exp(-i H t).
DiracField dirac_evolve(const DiracField& field, const SparseMatrixC& H, double t,
                        const PropagatorOptions& opts = {});

// Plane-wave frequency of the discretized free operator:
// omega^2 = sum_k sin^2(k_j dx)/dx^2 + m^2.
double lattice_dispersion(const Grid& grid, const std::array<double, 3>& k, double mass);

// Embeds (Re phi, Im phi) as the Ns = 8 one-particle classical state,
// evolves with the sector generator, extracts, and returns the maximum
// entrywise deviation from dirac_evolve on the same grid and time.
double crosscheck_sector(const DiracField& initial, const HamiltonianSpec& spec, double t);

// Fixed unitary basis change with U^dag (g0 gammabar) U = diag(1,1,-1,-1)
// and U^dag T_k U = -(0, sigma_k; sigma_k^dag, 0), sigma = (-1, i tau2, i tau3).
const Eigen::Matrix4cd& diagonalizing_basis();

struct ReductionResult {
  Eigen::VectorXcd psi;        // two-component amplitudes, rest phase removed
  double residual;             // || rho - A chi || / || chi ||
  double momentum_over_mass;   // diagnostic ratio reported, not enforced
};

// Non-relativistic reduction at time t: chi from the diagonalized basis,
// psi = exp(i M t) chi. Throws for M = 0.
ReductionResult nonrel_reduce(const DiracField& field, double mass, double time);

// Positive-energy Gaussian packet along the active axis of a d=1 grid,
// built in the diagonalized basis with rho = A chi.
DiracField make_gaussian_dirac_packet(const Grid& grid, double mass, double center, double width,
                                      double momentum);

}  // namespace isingq
