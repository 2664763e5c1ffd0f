#pragma once

// Lattice geometry, the real spinor-algebra constants and the corner
// stencil of the action. Sites live on one cubic sublattice of the bcc
// space-time lattice; the sublattice spacing is 2*delta and all spatial
// boundaries are periodic.

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace isingq {

// Real 4x4 spinor-algebra constants.
//   T[k]    : symmetric, T_j T_k + T_k T_j = 2 delta_jk
//   Itilde  : T1 T2 T3, antisymmetric, commutes with every T_k
//   gamma[mu], mu=0..3 : real Dirac matrices, {g^mu,g^nu} = 2 eta^{mu nu},
//                        eta = diag(-1,1,1,1), gamma[k] = -gamma[0] T[k]
//   gammabar: -i g0 g1 g2 g3 = -i*Itilde (purely imaginary, hermitean)
//   g0gbar  : gamma^0 gammabar = -i gamma^0 Itilde, hermitean, squares to 1
struct SpinorAlgebra {
  std::array<Eigen::Matrix4d, 3> T;
  Eigen::Matrix4d Itilde;
  std::array<Eigen::Matrix4d, 4> gamma;
  Eigen::Matrix4cd gammabar;
  Eigen::Matrix4cd g0gbar;
};

const SpinorAlgebra& spinor_algebra();

// Corner stencil Y({v}) = 1/8 [1 - sum_k (v_k + w_k Itilde) T_k - v1 v2 v3 Itilde]
// with w1 = -v2 v3, w2 = v1 v3, w3 = -v1 v2. Equivalently the product of
// per-axis factors (1 - v_k T_k)/2, which is the form used for reduced
// geometries.
Eigen::Matrix4d stencil(const std::array<int, 3>& v);
// Per-axis factor (1 - v T_k)/2.
Eigen::Matrix4d stencil_axis(int axis, int v);

// Periodic cubic sublattice. sites_per_axis[j] == 1 marks axis j as
// inactive (reduced desk-scale geometries keep axis 2 active so the test
// dynamics run through T_3). The full two-sublattice extent per axis is
// twice the per-axis site count.
struct LatticeGeometry {
  std::array<int, 3> sites_per_axis{1, 1, 1};
  double delta = 1.0;  // half the sublattice spacing
  double eps = 1.0;    // time step of the staggered transfer

  static LatticeGeometry line(int sites, double delta = 1.0, double eps = 1.0);
  static LatticeGeometry cube(int sites_per_axis, double delta = 1.0, double eps = 1.0);

  int num_sites() const;
  // Active axes (site count > 1), used for derivative stencils.
  std::vector<int> active_axes() const;
  int site_index(const std::array<int, 3>& coord) const;
  std::array<int, 3> site_coord(int index) const;
  int shift_site(int index, int axis, int steps) const;
  // Physical coordinate of a site along an axis (units of the sublattice
  // spacing 2*delta).
  double coordinate(int site, int axis) const;
};

// Model parameters. Ns = 4 is the single massless Majorana sector; Ns = 8
// carries two Majorana flavors and admits a mass and a coupling to an
// external electromagnetic potential sampled at lattice sites.
struct ModelParams {
  int num_species = 4;  // 4 or 8
  double mass = 0.0;
  double coupling = 0.0;
  std::vector<double> A0;                     // per site; empty = zero
  std::array<std::vector<double>, 3> Avec{};  // per site; empty = zero

  void validate(const LatticeGeometry& geometry) const;
};

// Linear variable index: flavor-major, then site (lexicographic by
// coordinate), then species. Total count B = Ns * S.
struct VariableIndex {
  int flavor;   // 0 or 1; always 0 when Ns == 4
  int site;
  int species;  // 0..3
};

int num_variables(const LatticeGeometry& geometry, const ModelParams& params);
int variable_index(const LatticeGeometry& geometry, const ModelParams& params,
                   const VariableIndex& v);
VariableIndex variable_unpack(const LatticeGeometry& geometry, const ModelParams& params,
                              int linear);

}  // namespace isingq
