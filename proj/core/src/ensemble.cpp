#include "isingq/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/MatrixFunctions>

namespace isingq {

namespace {

void check_antisymmetric(const Eigen::SparseMatrix<double>& K, double tol) {
  Eigen::SparseMatrix<double> D = Eigen::SparseMatrix<double>(K.transpose()) + K;
  double maxabs = 0.0;
  for (int o = 0; o < D.outerSize(); ++o) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(D, o); it; ++it) {
      maxabs = std::max(maxabs, std::abs(it.value()));
    }
  }
  if (maxabs > tol) {
    throw std::invalid_argument("evolve: generator is not antisymmetric");
  }
}

Eigen::VectorXd evolve_exact(const Eigen::MatrixXd& K, const Eigen::VectorXd& q, double t) {
  const Eigen::MatrixXd R = (t * K).exp();
  return R * q;
}

Eigen::VectorXd evolve_cayley(const Eigen::SparseMatrix<double>& K, const Eigen::VectorXd& q,
                              double t, double dt) {
  if (dt <= 0.0) {
    // heuristic default: resolve the fastest rotation frequency
    double norm_inf = 0.0;
    Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(K.rows());
    for (int o = 0; o < K.outerSize(); ++o) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(K, o); it; ++it) {
        rowsum[it.row()] += std::abs(it.value());
      }
    }
    norm_inf = rowsum.maxCoeff();
    dt = (norm_inf > 0.0) ? 0.05 / norm_inf : std::abs(t);
  }
  const double direction = (t >= 0.0) ? 1.0 : -1.0;
  const double total = std::abs(t);
  const long steps = std::max(1L, static_cast<long>(std::ceil(total / dt)));
  const double h = direction * total / double(steps);

  // (1 - h/2 K) q_{n+1} = (1 + h/2 K) q_n : exactly orthogonal for K^T = -K
  Eigen::SparseMatrix<double> I(K.rows(), K.cols());
  I.setIdentity();
  const Eigen::SparseMatrix<double> A = I - (h / 2.0) * K;
  const Eigen::SparseMatrix<double> Bm = I + (h / 2.0) * K;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("evolve: Cayley factorization failed");
  }
  Eigen::VectorXd x = q;
  for (long n = 0; n < steps; ++n) x = lu.solve(Bm * x);
  return x;
}

}  // namespace

void ClassicalWaveFunction::check_normalized(double tol) const {
  if (!q.allFinite() || std::abs(q.squaredNorm() - 1.0) > tol) {
    throw std::invalid_argument("ClassicalWaveFunction: not normalized");
  }
}

SplitResult split(const ClassicalWaveFunction& wf) {
  SplitResult out;
  out.probabilities.p = wf.q.array().square();
  out.signs.s.resize(wf.q.size());
  for (Eigen::Index i = 0; i < wf.q.size(); ++i) {
    out.signs.s[i] = (wf.q[i] < 0.0) ? -1 : 1;
  }
  return out;
}

ClassicalWaveFunction join(const ProbabilityDistribution& p, const SignVector& s) {
  if (p.p.size() != s.s.size()) throw std::invalid_argument("join: size mismatch");
  if ((p.p.array() < 0.0).any()) throw std::invalid_argument("join: negative probability");
  if (std::abs(p.p.sum() - 1.0) > 1e-9) throw std::invalid_argument("join: p not normalized");
  ClassicalWaveFunction wf;
  wf.q = p.p.array().sqrt() * s.s.cast<double>().array();
  return wf;
}

Eigen::VectorXd evolve(const Eigen::VectorXd& q, const Eigen::SparseMatrix<double>& K, double t,
                       const EvolveOptions& opts) {
  if (K.rows() != K.cols() || K.rows() != q.size()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  check_antisymmetric(K, opts.antisymmetry_tol);
  EvolveMethod method = opts.method;
  if (method == EvolveMethod::Auto) {
    method = (K.rows() < 512) ? EvolveMethod::ExactExp : EvolveMethod::Cayley;
  }
  if (method == EvolveMethod::ExactExp) return evolve_exact(Eigen::MatrixXd(K), q, t);
  return evolve_cayley(K, q, t, opts.dt);
}

Eigen::VectorXd evolve(const Eigen::VectorXd& q, const Eigen::MatrixXd& K, double t,
                       const EvolveOptions& opts) {
  return evolve(q, Eigen::SparseMatrix<double>(K.sparseView()), t, opts);
}

double second_order_check(const std::vector<double>& p0_series, double step, double omega) {
  if (p0_series.size() < 3) {
    throw std::invalid_argument("second_order_check: need at least 3 samples");
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < p0_series.size(); ++i) {
    const double d2 = (p0_series[i + 1] - 2.0 * p0_series[i] + p0_series[i - 1]) / (step * step);
    const double rhs = 2.0 * omega * omega * (1.0 - 2.0 * p0_series[i]);
    worst = std::max(worst, std::abs(d2 - rhs));
  }
  return worst;
}

SignTrackResult track_signs(const std::vector<Eigen::VectorXd>& q_series,
                            const std::vector<double>& times, double jump_threshold) {
  if (q_series.size() != times.size()) {
    throw std::invalid_argument("track_signs: series length mismatch");
  }
  SignTrackResult out;
  out.signs.reserve(q_series.size());
  for (const auto& q : q_series) {
    SignVector sv;
    sv.s.resize(q.size());
    for (Eigen::Index i = 0; i < q.size(); ++i) sv.s[i] = (q[i] < 0.0) ? -1 : 1;
    out.signs.push_back(std::move(sv));
  }
  for (std::size_t n = 1; n < q_series.size(); ++n) {
    for (Eigen::Index i = 0; i < q_series[n].size(); ++i) {
      // a flip through an exact zero is gauge, not a jump
      if (q_series[n][i] == 0.0 || q_series[n - 1][i] == 0.0) continue;
      if (out.signs[n].s[i] != out.signs[n - 1].s[i]) {
        const double p = std::min(q_series[n][i] * q_series[n][i],
                                  q_series[n - 1][i] * q_series[n - 1][i]);
        out.jumps.push_back(SignJump{int(i), int(n), times[n], p, p < jump_threshold});
      }
    }
  }
  return out;
}

}  // namespace isingq
