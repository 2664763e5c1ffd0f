#pragma once

// Classical diagonal observables on sector bases: occupation numbers,
// local and total particle number, position, interval observables, and
// the two expectation-value rules sum_tau p_tau A_tau = q^T A q.

#include <set>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "isingq/generator.hpp"
#include "isingq/lattice.hpp"
#include "isingq/sector.hpp"

namespace isingq {

struct DiagonalObservable {
  std::string name;
  Eigen::VectorXd values;  // A_tau per basis state
  std::set<double> spectrum() const;
};

// Occupation of one (flavor, site, species) bit.
DiagonalObservable occupation_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                         const ModelParams& params, const VariableIndex& v);
// N(x) = sum over species (and flavors) at one site.
DiagonalObservable local_number_observable(const SectorBasis& basis,
                                           const LatticeGeometry& geometry,
                                           const ModelParams& params, int site);
DiagonalObservable total_number_observable(const SectorBasis& basis);
// X_axis = sum_x x_axis N(x), coordinates in physical units.
DiagonalObservable position_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                       const ModelParams& params, int axis);
// J_R = sum_{x in R} N(x).
DiagonalObservable interval_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                       const ModelParams& params, const std::set<int>& region);

struct ExpectationPair {
  double classical;  // sum_tau p_tau A_tau
  double quantum;    // q^T A q
};
ExpectationPair expect(const DiagonalObservable& obs, const Eigen::VectorXd& q);

struct PositionMoments {
  Eigen::Vector3d mean;
  Eigen::Vector3d dispersion;  // <X_k^2> - <X_k>^2 per axis
};
PositionMoments position_moments(const SectorBasis& basis, const LatticeGeometry& geometry,
                                 const ModelParams& params, const Eigen::VectorXd& q);

// d<A>/dt = q^T [A_hat, K] q for diagonal A.
double expectation_flow(const DiagonalObservable& obs, const Eigen::VectorXd& q,
                        const SparseMatrixD& K);

// Right side of the local-number flow law,
// d<N(x)>/dt = (T_k)_{eta,alpha} d_k <M_{alpha,eta}>, evaluated from the
// off-diagonal bilinears <M_{alpha,eta}(y)> = q^T M q with
// M = d/dpsi_alpha psi_eta in the sector representation.
double local_number_flow(const SectorBasis& basis, const LatticeGeometry& geometry,
                         const ModelParams& params, const Eigen::VectorXd& q, int site);

}  // namespace isingq
