#pragma once

// Construction of the evolution generator K from the lattice action, in
// three guises:
//   * a one-body coefficient matrix C with K = sum_{ab} C_ab d/dpsi_a psi_b
//     (real antisymmetric, B x B),
//   * an exact operator on Grassmann elements (the brute-force oracle),
//   * sparse antisymmetric matrices restricted to particle-number sectors.
// The continuous-time path discretizes the spatial derivative as the
// symmetric difference over sublattice neighbours at distance 2*delta.
// The staggered finite-step path (build_one_particle_transfer) uses the
// corner stencil directly.

#include <Eigen/Sparse>

#include "isingq/grassmann.hpp"
#include "isingq/lattice.hpp"
#include "isingq/sector.hpp"

namespace isingq {

using SparseMatrixD = Eigen::SparseMatrix<double>;

// One-body coefficient matrix of the generator:
//   K = K0 + Km + KA,
//   K0 + Km = sum_x sum_a d/dpsi_a(x) (T_k d_k - m g0 Itilde) psi_a(x)
//   KA      = e sum_x [ d/dpsi_1 (A0 - A_k T_k) psi_2
//                      - d/dpsi_2 (A0 - A_k T_k) psi_1 ]
// Always antisymmetric.
SparseMatrixD one_body_coefficients(const LatticeGeometry& geometry, const ModelParams& params);

// Exact Grassmann-operator form of K (oracle scale, B <= kMaxVariables).
class GrassmannGenerator {
 public:
  GrassmannGenerator(const LatticeGeometry& geometry, const ModelParams& params);

  int num_vars() const { return num_vars_; }
  GrassmannElement apply(const GrassmannElement& g) const;
  // Total particle number operator N = sum_b d/dpsi_b psi_b.
  GrassmannElement apply_number(const GrassmannElement& g) const;

  // Matrix elements K_{rho,tau} = Int Dpsi conj(g_rho) K g_tau over a
  // sector basis (conjugate-basis projection).
  Eigen::MatrixXd project_sector(const SectorBasis& basis) const;

 private:
  int num_vars_;
  SparseMatrixD coefficients_;
};

// Sparse antisymmetric generator restricted to the m-particle sector.
SparseMatrixD build_generator_sector(const LatticeGeometry& geometry, const ModelParams& params,
                                     const SectorBasis& basis);

// Sector matrix of an arbitrary one-body operator sum_{ab} C_ab d/dpsi_a psi_b.
SparseMatrixD sector_one_body(const SparseMatrixD& coefficients, const SectorBasis& basis);

// Staggered one-particle transfer. Each half step maps amplitudes on one
// sublattice to the other via the corner stencil; both half steps are
// orthogonal, hence so is the two-step map on a single sublattice.
struct OneParticleTransfer {
  // q'(site through corner v) += Y(v)^T q(site); parity selects which
  // sublattice carries psi.
  SparseMatrixD even_to_odd;
  SparseMatrixD odd_to_even;

  SparseMatrixD two_step() const { return odd_to_even * even_to_odd; }
};

OneParticleTransfer build_one_particle_transfer(const LatticeGeometry& geometry,
                                                const ModelParams& params);

}  // namespace isingq
