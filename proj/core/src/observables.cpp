#include "isingq/observables.hpp"

#include <stdexcept>

namespace isingq {

namespace {

int flavors_of(const ModelParams& params) { return params.num_species / 4; }

void check_vars(const SectorBasis& basis, const LatticeGeometry& geometry,
                const ModelParams& params) {
  if (basis.num_vars() != num_variables(geometry, params)) {
    throw std::invalid_argument("observable: basis does not match geometry");
  }
}

}  // namespace

std::set<double> DiagonalObservable::spectrum() const {
  std::set<double> out;
  for (Eigen::Index i = 0; i < values.size(); ++i) out.insert(values[i]);
  return out;
}

DiagonalObservable occupation_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                         const ModelParams& params, const VariableIndex& v) {
  check_vars(basis, geometry, params);
  const int b = variable_index(geometry, params, v);
  DiagonalObservable obs{"occupation", Eigen::VectorXd(basis.dimension()), };
  for (std::int64_t r = 0; r < basis.dimension(); ++r) {
    obs.values[r] = SectorBasis::occupation(basis.mask(r), b);
  }
  return obs;
}

DiagonalObservable local_number_observable(const SectorBasis& basis,
                                           const LatticeGeometry& geometry,
                                           const ModelParams& params, int site) {
  check_vars(basis, geometry, params);
  DiagonalObservable obs{"local_N", Eigen::VectorXd::Zero(basis.dimension())};
  for (int a = 0; a < flavors_of(params); ++a) {
    for (int sp = 0; sp < 4; ++sp) {
      const int b = variable_index(geometry, params, VariableIndex{a, site, sp});
      for (std::int64_t r = 0; r < basis.dimension(); ++r) {
        obs.values[r] += SectorBasis::occupation(basis.mask(r), b);
      }
    }
  }
  return obs;
}

DiagonalObservable total_number_observable(const SectorBasis& basis) {
  DiagonalObservable obs{"total_N", Eigen::VectorXd(basis.dimension())};
  for (std::int64_t r = 0; r < basis.dimension(); ++r) {
    obs.values[r] = basis.num_vars() - basis.mask(r).popcount();
  }
  return obs;
}

DiagonalObservable position_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                       const ModelParams& params, int axis) {
  check_vars(basis, geometry, params);
  DiagonalObservable obs{"position", Eigen::VectorXd::Zero(basis.dimension())};
  const int B = basis.num_vars();
  for (std::int64_t r = 0; r < basis.dimension(); ++r) {
    double x = 0.0;
    for (int b = 0; b < B; ++b) {
      if (SectorBasis::occupation(basis.mask(r), b)) {
        x += geometry.coordinate(variable_unpack(geometry, params, b).site, axis);
      }
    }
    obs.values[r] = x;
  }
  return obs;
}

DiagonalObservable interval_observable(const SectorBasis& basis, const LatticeGeometry& geometry,
                                       const ModelParams& params, const std::set<int>& region) {
  check_vars(basis, geometry, params);
  DiagonalObservable obs{"interval", Eigen::VectorXd::Zero(basis.dimension())};
  for (int site : region) {
    obs.values += local_number_observable(basis, geometry, params, site).values;
  }
  return obs;
}

ExpectationPair expect(const DiagonalObservable& obs, const Eigen::VectorXd& q) {
  if (obs.values.size() != q.size()) throw std::invalid_argument("expect: dimension mismatch");
  double classical = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) classical += q[i] * q[i] * obs.values[i];
  const double quantum = q.dot(obs.values.asDiagonal() * q);
  return ExpectationPair{classical, quantum};
}

PositionMoments position_moments(const SectorBasis& basis, const LatticeGeometry& geometry,
                                 const ModelParams& params, const Eigen::VectorXd& q) {
  PositionMoments out;
  for (int axis = 0; axis < 3; ++axis) {
    const DiagonalObservable x = position_observable(basis, geometry, params, axis);
    const double mean = expect(x, q).classical;
    DiagonalObservable x2{"position2", x.values.array().square().matrix()};
    out.mean[axis] = mean;
    out.dispersion[axis] = expect(x2, q).classical - mean * mean;
  }
  return out;
}

double expectation_flow(const DiagonalObservable& obs, const Eigen::VectorXd& q,
                        const SparseMatrixD& K) {
  if (obs.values.size() != q.size() || K.rows() != q.size()) {
    throw std::invalid_argument("expectation_flow: dimension mismatch");
  }
  const Eigen::VectorXd aq = obs.values.asDiagonal() * q;
  const Eigen::VectorXd kq = K * q;
  return aq.dot(kq) - q.dot(K * aq);
}

double local_number_flow(const SectorBasis& basis, const LatticeGeometry& geometry,
                         const ModelParams& params, const Eigen::VectorXd& q, int site) {
  check_vars(basis, geometry, params);
  const auto& alg = spinor_algebra();
  const int B = basis.num_vars();
  const double inv4d = 1.0 / (4.0 * geometry.delta);

  // The mass and potential terms are diagonal in the site index, so only the
  // kinetic hopping contributes to the change of the local particle number.
  // Collect the neighbour-current coefficient matrix and evaluate it as a
  // one-body expectation value in the sector.
  std::vector<Eigen::Triplet<double>> trips;
  const auto add_current = [&](int row_site, int alpha, int col_site, int beta, double value) {
    for (int a = 0; a < flavors_of(params); ++a) {
      trips.emplace_back(variable_index(geometry, params, VariableIndex{a, row_site, alpha}),
                         variable_index(geometry, params, VariableIndex{a, col_site, beta}),
                         value);
    }
  };
  for (int axis : geometry.active_axes()) {
    const int plus = geometry.shift_site(site, axis, +1);
    const int minus = geometry.shift_site(site, axis, -1);
    for (int alpha = 0; alpha < 4; ++alpha) {
      for (int beta = 0; beta < 4; ++beta) {
        const double t = alg.T[axis](alpha, beta);
        if (t == 0.0) continue;
        // Current into the site from both neighbours of the symmetric
        // difference, with the signs fixed by the hopping term.
        add_current(site, alpha, plus, beta, t * inv4d);
        add_current(site, alpha, minus, beta, -t * inv4d);
        add_current(plus, alpha, site, beta, t * inv4d);
        add_current(minus, alpha, site, beta, -t * inv4d);
      }
    }
  }
  SparseMatrixD D(B, B);
  D.setFromTriplets(trips.begin(), trips.end());
  const SparseMatrixD M = sector_one_body(D, basis);
  return q.dot(M * q);
}

}  // namespace isingq
