#pragma once

// Classical statistical layer: probabilities, signs, the classical wave
// function q_tau = s_tau sqrt(p_tau), and its orthogonal evolution
// dq/dt = K q for antisymmetric K.

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace isingq {

struct ClassicalWaveFunction {
  Eigen::VectorXd q;

  // Throws unless sum q^2 = 1 within tol.
  void check_normalized(double tol = 1e-9) const;
};

struct ProbabilityDistribution {
  Eigen::VectorXd p;
};

struct SignVector {
  // Entries +-1; +1 at exact zeros of q (sign gauge).
  Eigen::VectorXi s;
};

struct SplitResult {
  ProbabilityDistribution probabilities;
  SignVector signs;
};

SplitResult split(const ClassicalWaveFunction& wf);
// join(p, s): q_tau = s_tau sqrt(p_tau). Throws on negative or
// non-normalized p.
ClassicalWaveFunction join(const ProbabilityDistribution& p, const SignVector& s);

enum class EvolveMethod {
  Auto,      // exact exponential below dim 512, Cayley above
  ExactExp,  // dense matrix exponential (the oracle)
  Cayley,    // orthogonality-preserving implicit-midpoint steps
};

struct EvolveOptions {
  EvolveMethod method = EvolveMethod::Auto;
  // Cayley step size; 0 picks a step from the generator norm.
  double dt = 0.0;
  double antisymmetry_tol = 1e-12;
};

// Returns R(t) q with R orthogonal. Throws if K is not antisymmetric.
Eigen::VectorXd evolve(const Eigen::VectorXd& q, const Eigen::SparseMatrix<double>& K, double t,
                       const EvolveOptions& opts = {});
Eigen::VectorXd evolve(const Eigen::VectorXd& q, const Eigen::MatrixXd& K, double t,
                       const EvolveOptions& opts = {});

// Max residual of the two-state second-order law
// d^2_t p0 = 2 omega^2 (1 - 2 p0) over a uniformly sampled series.
// Throws if fewer than 3 samples.
double second_order_check(const std::vector<double>& p0_series, double step, double omega);

// Sign-jump tracking along a sampled trajectory.
struct SignJump {
  int state;          // tau
  int sample;         // first sample index after the flip
  double time;
  double p_at_flip;   // min p_tau on the two samples bracketing the flip
  bool below_threshold;
};

struct SignTrackResult {
  std::vector<SignVector> signs;
  std::vector<SignJump> jumps;
};

SignTrackResult track_signs(const std::vector<Eigen::VectorXd>& q_series,
                            const std::vector<double>& times, double jump_threshold = 1e-6);

}  // namespace isingq
