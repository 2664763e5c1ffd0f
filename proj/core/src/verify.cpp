#include "isingq/verify.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "isingq/demos.hpp"
#include "isingq/dirac.hpp"
#include "isingq/ensemble.hpp"
#include "isingq/generator.hpp"
#include "isingq/grassmann.hpp"
#include "isingq/lattice.hpp"
#include "isingq/observables.hpp"
#include "isingq/schrodinger.hpp"
#include "isingq/sector.hpp"

namespace isingq {

namespace {

using Checks = std::vector<CheckResult>;

void push(Checks& out, const std::string& suite, const std::string& name, double measured,
          double tolerance) {
  out.push_back({suite, name, measured, tolerance, measured <= tolerance});
}

void push_flag(Checks& out, const std::string& suite, const std::string& name, double measured,
               double tolerance, bool pass) {
  out.push_back({suite, name, measured, tolerance, pass});
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs_c(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------- clifford

void suite_clifford(VerifyGeometry, std::uint64_t, Checks& out) {
  const auto& alg = spinor_algebra();
  const std::string s = "clifford";

  double d = 0.0;
  for (int k = 0; k < 3; ++k) d = std::max(d, max_abs(alg.T[k] - alg.T[k].transpose()));
  push(out, s, "T symmetric", d, 1e-15);

  d = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const Eigen::Matrix4d anti = alg.T[j] * alg.T[k] + alg.T[k] * alg.T[j];
      const double delta = (j == k) ? 2.0 : 0.0;
      d = std::max(d, max_abs(anti - delta * Eigen::Matrix4d::Identity()));
    }
  }
  push(out, s, "{T_j,T_k} = 2 delta_jk", d, 1e-15);

  d = max_abs(alg.Itilde + alg.Itilde.transpose());
  d = std::max(d, max_abs(alg.Itilde - alg.T[0] * alg.T[1] * alg.T[2]));
  for (int k = 0; k < 3; ++k) d = std::max(d, max_abs(alg.Itilde * alg.T[k] - alg.T[k] * alg.Itilde));
  push(out, s, "Itilde = T1T2T3 antisymmetric central", d, 1e-15);

  d = 0.0;
  const Eigen::Vector4d eta(-1.0, 1.0, 1.0, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Eigen::Matrix4d anti = alg.gamma[mu] * alg.gamma[nu] + alg.gamma[nu] * alg.gamma[mu];
      const double rhs = (mu == nu) ? 2.0 * eta[mu] : 0.0;
      d = std::max(d, max_abs(anti - rhs * Eigen::Matrix4d::Identity()));
    }
  }
  push(out, s, "{gamma^mu,gamma^nu} = 2 eta", d, 1e-15);

  const std::complex<double> mi(0.0, -1.0);
  const Eigen::Matrix4cd prod =
      (alg.gamma[0] * alg.gamma[1] * alg.gamma[2] * alg.gamma[3]).cast<std::complex<double>>();
  d = max_abs_c(alg.gammabar - mi * prod);
  d = std::max(d, max_abs_c(alg.g0gbar - alg.g0gbar.adjoint()));
  d = std::max(d, max_abs_c(alg.g0gbar * alg.g0gbar - Eigen::Matrix4cd::Identity()));
  for (int k = 0; k < 3; ++k) {
    const Eigen::Matrix4cd tk = alg.T[k].cast<std::complex<double>>();
    d = std::max(d, max_abs_c(alg.g0gbar * tk + tk * alg.g0gbar));
  }
  push(out, s, "gammabar and gamma^0 gammabar identities", d, 1e-15);
}

// --------------------------------------------------------------- grassmann

void suite_grassmann(VerifyGeometry, std::uint64_t, Checks& out) {
  const std::string s = "grassmann";

  // {creation, annihilation} = delta on every basis monomial, B = 4
  double d = 0.0;
  const int B = 4;
  for (int a = 0; a < B; ++a) {
    for (int b = 0; b < B; ++b) {
      for (BasisMask tau = 0; tau < (1u << B); ++tau) {
        const GrassmannElement g = basis_element(B, tau);
        GrassmannElement anti = add(derive(multiply_var(b, g), a), multiply_var(b, derive(g, a)));
        if (a == b) anti = add(anti, scale(g, -1.0));
        d = std::max(d, norm(anti));
      }
    }
  }
  push(out, s, "{a+_a, a_b} = delta_ab exhaustive (B=4)", d, 0.0);

  // conjugate-basis orthonormality, exhaustive up to B = 6
  d = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (BasisMask sigma = 0; sigma < (1u << n); ++sigma) {
      const GrassmannElement conj = conjugate(basis_element(n, sigma));
      for (BasisMask tau = 0; tau < (1u << n); ++tau) {
        const double ip = berezin_integrate(multiply(conj, basis_element(n, tau)));
        d = std::max(d, std::abs(ip - (sigma == tau ? 1.0 : 0.0)));
      }
    }
  }
  push(out, s, "conjugate-basis orthonormality exhaustive (B<=6)", d, 0.0);

  // pinned example: B = 2, conjugate of psi_0 is -psi_1
  const GrassmannElement got = conjugate(variable_element(2, 0));
  const GrassmannElement want = scale(variable_element(2, 1), -1.0);
  push(out, s, "conjugate(psi_0) = -psi_1 (B=2)", norm(add(got, scale(want, -1.0))), 0.0);
}

// --------------------------------------------------------------- generator

struct GeneratorConfig {
  std::string label;
  LatticeGeometry geometry;
  ModelParams params;
};

std::vector<GeneratorConfig> oracle_configs() {
  std::vector<GeneratorConfig> configs;
  {
    GeneratorConfig c;
    c.label = "free Ns=4 S=4";
    c.geometry = LatticeGeometry::line(4, 0.5);
    c.params.num_species = 4;
    configs.push_back(c);
  }
  {
    GeneratorConfig c;
    c.label = "Ns=8 S=2 mass+gauge";
    c.geometry = LatticeGeometry::line(2, 0.5);
    c.params.num_species = 8;
    c.params.mass = 0.8;
    c.params.coupling = 0.6;
    c.params.A0 = {0.2, -0.4};
    c.params.Avec[2] = {0.3, 0.1};
    configs.push_back(c);
  }
  return configs;
}

void suite_generator(VerifyGeometry, std::uint64_t seed, Checks& out) {
  const std::string s = "generator";
  for (const auto& cfg : oracle_configs()) {
    const int B = num_variables(cfg.geometry, cfg.params);
    const SparseMatrixD C = one_body_coefficients(cfg.geometry, cfg.params);
    push(out, s, cfg.label + ": C antisymmetric",
         max_abs(Eigen::MatrixXd(C) + Eigen::MatrixXd(C).transpose()), 1e-13);

    const GrassmannGenerator oracle(cfg.geometry, cfg.params);
    for (int m : {1, 2}) {
      const SectorBasis basis(B, m);
      const Eigen::MatrixXd sector =
          Eigen::MatrixXd(build_generator_sector(cfg.geometry, cfg.params, basis));
      const Eigen::MatrixXd projected = oracle.project_sector(basis);
      push(out, s, cfg.label + ": sector m=" + std::to_string(m) + " vs oracle",
           max_abs(sector - projected), 1e-14);
      push(out, s, cfg.label + ": K_m=" + std::to_string(m) + " antisymmetric",
           max_abs(sector + sector.transpose()), 1e-13);
    }

    // [N, K] = 0 exactly: N is diagonal on basis monomials with eigenvalue
    // B - popcount(mask), so the commutator vanishes identically iff K maps
    // every monomial into monomials of the same particle number.  Checking
    // that structurally avoids the rounding that a floating-point commutator
    // of the two operator orders would pick up.
    std::mt19937_64 rng(seed);
    double number_defect = 0.0;
    for (int i = 0; i < 64; ++i) {
      const BasisMask mask = static_cast<BasisMask>(rng() & ((1u << B) - 1));
      const GrassmannElement image = oracle.apply(basis_element(B, mask));
      for (const auto& [m, c] : image.terms) {
        if (c == 0.0) continue;
        number_defect = std::max(
            number_defect, std::abs(double(std::popcount(m)) - double(std::popcount(mask))));
      }
    }
    push(out, s, cfg.label + ": [N, K] = 0", number_defect, 0.0);
  }
}

// --------------------------------------------------------------- two-state

void suite_two_state(VerifyGeometry, std::uint64_t, Checks& out) {
  const std::string s = "two-state";
  TwoStateConfig config;
  const TwoStateResult run = run_two_state(config);
  push(out, s, "p0(t) vs cos^2(wt+a) over 10 periods", run.max_error, 1e-10);

  const double step = run.times[1] - run.times[0];
  push(out, s, "second-order law d2p0 = 2w^2(1-2p0)",
       second_order_check(run.p0, step, config.omega), 1e-2);

  // fine sampling around the zero crossings for the sign-flip rule
  const double dt = 1e-3;
  const double wdt = config.omega * dt;
  Eigen::Matrix2d R;
  R << std::cos(wdt), std::sin(wdt), -std::sin(wdt), std::cos(wdt);
  Eigen::VectorXd q(2);
  q << std::cos(config.alpha), -std::sin(config.alpha);
  std::vector<Eigen::VectorXd> series;
  std::vector<double> times;
  const int steps = static_cast<int>(std::ceil(10.0 * M_PI / config.omega / dt));
  for (int i = 0; i <= steps; ++i) {
    series.push_back(q);
    times.push_back(i * dt);
    q = R * q;
  }
  const SignTrackResult tracked = track_signs(series, times);
  double worst = 0.0;
  bool all_below = !tracked.jumps.empty();
  for (const auto& jump : tracked.jumps) {
    worst = std::max(worst, jump.p_at_flip);
    all_below = all_below && jump.below_threshold;
  }
  push_flag(out, s, "sign flips only where p < 1e-6", worst, 1e-6, all_below);
}

// --------------------------------------------------------------- evolution

void suite_evolution(VerifyGeometry geometry, std::uint64_t seed, Checks& out) {
  const std::string s = "evolution";
  const int dim = geometry == VerifyGeometry::Small ? 2000 : 400;

  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> val(-0.2, 0.2);
  std::uniform_int_distribution<int> idx(0, dim - 1);
  std::vector<Eigen::Triplet<double>> trips;
  for (int nz = 0; nz < 5 * dim; ++nz) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const double v = val(rng);
    trips.emplace_back(i, j, v);
    trips.emplace_back(j, i, -v);
  }
  SparseMatrixD K(dim, dim);
  K.setFromTriplets(trips.begin(), trips.end());

  Eigen::VectorXd q(dim);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < dim; ++i) q[i] = gauss(rng);
  q.normalize();

  EvolveOptions opts;
  opts.method = EvolveMethod::Cayley;
  const Eigen::VectorXd qt = evolve(q, K, 10.0, opts);
  push(out, s, "norm drift over t=10, random K dim " + std::to_string(dim),
       std::abs(qt.norm() - 1.0), 1e-9);

  const int side = geometry == VerifyGeometry::Small ? 4 : 2;
  LatticeGeometry lattice = LatticeGeometry::cube(side, 0.5);
  ModelParams params;  // Ns = 4, massless
  const OneParticleTransfer transfer = build_one_particle_transfer(lattice, params);
  const Eigen::MatrixXd R2 = Eigen::MatrixXd(transfer.two_step());
  const Eigen::MatrixXd half = Eigen::MatrixXd(transfer.even_to_odd);
  const int n = static_cast<int>(R2.rows());
  push(out, s, "finite-step transfer R^T R = 1",
       max_abs(R2.transpose() * R2 - Eigen::MatrixXd::Identity(n, n)), 1e-12);
  push(out, s, "half-step transfer orthogonal",
       max_abs(half.transpose() * half - Eigen::MatrixXd::Identity(n, n)), 1e-12);
}

// ------------------------------------------------------------- equivalence

struct EquivalenceSetup {
  Grid grid;
  HamiltonianSpec spec;
  LatticeGeometry geometry;
  ModelParams params;
};

EquivalenceSetup equivalence_setup(int sites) {
  EquivalenceSetup setup;
  setup.grid = Grid::line(sites, 0.5);
  setup.spec.mass = 0.7;
  setup.spec.coupling = 0.5;
  setup.spec.A0.resize(sites);
  for (int i = 0; i < sites; ++i) {
    setup.spec.A0[i] = 0.3 * std::sin(2.0 * M_PI * i / sites) + 0.1;
  }
  setup.geometry.delta = setup.grid.dx / 2.0;
  setup.geometry.sites_per_axis = {1, 1, sites};
  setup.params.num_species = 8;
  setup.params.mass = setup.spec.mass;
  setup.params.coupling = setup.spec.coupling;
  setup.params.A0 = setup.spec.A0;
  return setup;
}

Eigen::VectorXcd random_field(int sites, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd phi(4 * sites);
  for (int i = 0; i < phi.size(); ++i) phi[i] = std::complex<double>(gauss(rng), gauss(rng));
  phi /= phi.norm();
  return phi;
}

void suite_equivalence(VerifyGeometry geometry, std::uint64_t seed, Checks& out) {
  const std::string s = "equivalence";
  const int sites = geometry == VerifyGeometry::Small ? 16 : 8;
  const int trials = geometry == VerifyGeometry::Small ? 50 : 10;
  EquivalenceSetup setup = equivalence_setup(sites);
  const double dx = setup.grid.dx;

  std::mt19937_64 rng(seed + 2);
  double worst = 0.0;
  DiracField field;
  field.grid = setup.grid;
  for (int trial = 0; trial < trials; ++trial) {
    field.phi = random_field(sites, rng) / std::sqrt(dx);
    worst = std::max(worst, crosscheck_sector(field, setup.spec, 1.0));
  }
  push(out, s, "sector vs Dirac, " + std::to_string(trials) + " random states", worst, 1e-8);

  // two-rule expectation values and the density rule on an evolved state
  const int B = num_variables(setup.geometry, setup.params);
  const SectorBasis basis(B, 1);
  const SparseMatrixD K = build_generator_sector(setup.geometry, setup.params, basis);

  field.phi = random_field(sites, rng) / std::sqrt(dx);
  Eigen::VectorXd amps(B);
  for (int site = 0; site < sites; ++site) {
    for (int sp = 0; sp < 4; ++sp) {
      const std::complex<double> v = field.phi[4 * site + sp] * std::sqrt(dx);
      amps[variable_index(setup.geometry, setup.params, {0, site, sp})] = v.real();
      amps[variable_index(setup.geometry, setup.params, {1, site, sp})] = v.imag();
    }
  }
  const Eigen::VectorXd state =
      evolve(one_particle_state(basis, amps, VacuumKind::Empty), K, 1.0);

  std::vector<DiagonalObservable> shipped;
  shipped.push_back(total_number_observable(basis));
  shipped.push_back(position_observable(basis, setup.geometry, setup.params, 2));
  for (int site = 0; site < sites; ++site) {
    shipped.push_back(local_number_observable(basis, setup.geometry, setup.params, site));
  }
  std::set<int> half_region;
  for (int site = 0; site < sites / 2; ++site) half_region.insert(site);
  shipped.push_back(interval_observable(basis, setup.geometry, setup.params, half_region));
  shipped.push_back(occupation_observable(basis, setup.geometry, setup.params, {0, 0, 0}));

  double rule_diff = 0.0;
  for (const auto& obs : shipped) {
    const ExpectationPair pair = expect(obs, state);
    rule_diff = std::max(rule_diff, std::abs(pair.classical - pair.quantum));
  }
  push(out, s, "classical vs quantum expectation rule, all shipped observables", rule_diff, 1e-12);

  const SparseMatrixC H = build_dirac_hamiltonian(setup.grid, setup.spec);
  const DiracField evolved = dirac_evolve(field, H, 1.0);
  double density_diff = 0.0;
  for (int site = 0; site < sites; ++site) {
    const double classical =
        expect(local_number_observable(basis, setup.geometry, setup.params, site), state).classical;
    const double quantum = dx * evolved.phi.segment<4>(4 * site).squaredNorm();
    density_diff = std::max(density_diff, std::abs(classical - quantum));
  }
  push(out, s, "density rule <N(x)> = phi^dag phi", density_diff, 1e-12);
}

// -------------------------------------------------------------- dispersion

std::vector<double> generator_frequencies(const LatticeGeometry& geometry,
                                          const ModelParams& params) {
  const Eigen::MatrixXd C = Eigen::MatrixXd(one_body_coefficients(geometry, params));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
  std::vector<double> freqs;
  for (int i = 0; i < C.rows(); ++i) freqs.push_back(std::abs(solver.eigenvalues()[i].imag()));
  return freqs;
}

void suite_dispersion(VerifyGeometry geometry, std::uint64_t, Checks& out) {
  const std::string s = "dispersion";
  const int sites = geometry == VerifyGeometry::Small ? 16 : 8;
  const double delta = 0.5;
  const double spacing = 2.0 * delta;

  const auto lattice_k = [&](int n) { return 2.0 * M_PI * n / (sites * spacing); };
  const auto lat_sq = [&](int n) {
    const double sk = std::sin(lattice_k(n) * spacing) / spacing;
    return sk * sk;
  };

  {
    LatticeGeometry lat = LatticeGeometry::line(sites, delta);
    ModelParams params;  // massless, Ns = 4
    double worst = 0.0;
    for (double w : generator_frequencies(lat, params)) {
      double best = std::numeric_limits<double>::max();
      for (int n = 0; n < sites; ++n) best = std::min(best, std::abs(w - std::sqrt(lat_sq(n))));
      worst = std::max(worst, best);
    }
    for (int n = 0; n < sites; ++n) {
      double best = std::numeric_limits<double>::max();
      for (double w : generator_frequencies(lat, params)) {
        best = std::min(best, std::abs(w - std::sqrt(lat_sq(n))));
      }
      worst = std::max(worst, best);
    }
    push(out, s, "massless plane-wave frequencies = lattice dispersion", worst, 1e-10);
  }
  {
    LatticeGeometry lat = LatticeGeometry::line(sites, delta);
    ModelParams params;
    params.num_species = 8;
    params.mass = 1.3;
    double worst = 0.0;
    for (double w : generator_frequencies(lat, params)) {
      double best = std::numeric_limits<double>::max();
      for (int n = 0; n < sites; ++n) {
        best = std::min(best, std::abs(w * w - lat_sq(n) - params.mass * params.mass));
      }
      worst = std::max(worst, best);
    }
    push(out, s, "massive: w^2 - k_lat^2 = m^2", worst, 1e-8);
  }
  {
    LatticeGeometry lat = LatticeGeometry::line(sites, delta);
    ModelParams params;
    params.num_species = 8;
    params.mass = 0.9;
    params.coupling = 0.7;
    const double a0 = 0.5;
    params.A0.assign(sites, a0);
    double worst = 0.0;
    for (double w : generator_frequencies(lat, params)) {
      double best = std::numeric_limits<double>::max();
      for (int n = 0; n < sites; ++n) {
        const double wk = std::sqrt(lat_sq(n) + params.mass * params.mass);
        for (double sgn : {1.0, -1.0}) {
          best = std::min(best, std::abs(w - std::abs(sgn * wk + params.coupling * a0)));
        }
      }
      worst = std::max(worst, best);
    }
    push(out, s, "constant A0 shifts the spectrum by e A0", worst, 1e-8);
  }
}

// ------------------------------------------------------------- observables

void suite_observables(VerifyGeometry, std::uint64_t seed, Checks& out) {
  const std::string s = "observables";
  LatticeGeometry lat = LatticeGeometry::line(4, 0.5);
  ModelParams params;  // Ns = 4, B = 16
  const int B = num_variables(lat, params);
  const SectorBasis basis(B, 1);

  double spectrum_defect = 0.0;
  for (int lo = 0; lo < lat.num_sites(); ++lo) {
    for (int len = 1; len <= lat.num_sites(); ++len) {
      std::set<int> region;
      for (int i = 0; i < len; ++i) region.insert((lo + i) % lat.num_sites());
      for (double v : interval_observable(basis, lat, params, region).spectrum()) {
        spectrum_defect = std::max(spectrum_defect, std::min(std::abs(v), std::abs(v - 1.0)));
      }
    }
  }
  push(out, s, "interval spectrum in {0,1} on one-particle sector (B=16)", spectrum_defect, 0.0);

  std::mt19937_64 rng(seed + 3);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd q(basis.dimension());
  for (int i = 0; i < q.size(); ++i) q[i] = gauss(rng);
  q.normalize();

  double rule_diff = 0.0;
  for (int axis : lat.active_axes()) {
    const DiagonalObservable x = position_observable(basis, lat, params, axis);
    const ExpectationPair pair = expect(x, q);
    rule_diff = std::max(rule_diff, std::abs(pair.classical - pair.quantum));
    DiagonalObservable x2 = x;
    x2.values = x.values.cwiseProduct(x.values);
    const ExpectationPair pair2 = expect(x2, q);
    rule_diff = std::max(rule_diff, std::abs(pair2.classical - pair2.quantum));
  }
  push(out, s, "position moments: classical rule vs quantum rule", rule_diff, 1e-12);

  // continuity: d<N(x)>/dt from the generator equals the discrete flow law
  const SparseMatrixD K = build_generator_sector(lat, params, basis);
  double flow_diff = 0.0;
  for (int site = 0; site < lat.num_sites(); ++site) {
    const DiagonalObservable nx = local_number_observable(basis, lat, params, site);
    flow_diff = std::max(flow_diff, std::abs(expectation_flow(nx, q, K) -
                                             local_number_flow(basis, lat, params, q, site)));
  }
  push(out, s, "local-number flow matches d<N(x)>/dt", flow_diff, 1e-10);
}

// ------------------------------------------------------------------ nonrel

void suite_nonrel(VerifyGeometry geometry, std::uint64_t, Checks& out) {
  const std::string s = "nonrel";
  const bool small = geometry == VerifyGeometry::Small;
  const int n = small ? 192 : 128;
  const double dx = 0.5;
  const double k0 = 0.4, width = small ? 8.0 : 6.0;
  const double center = n * dx / 2.0;
  const double t = small ? 16.0 : 8.0;
  const std::vector<double> masses{2.0, 4.0, 8.0, 16.0};

  const Grid grid = Grid::line(n, dx);
  Schrodinger1D nr;
  nr.n = n;
  nr.dx = dx;
  nr.periodic = true;

  std::vector<double> l1, residuals;
  for (double mass : masses) {
    HamiltonianSpec spec;
    spec.mass = mass;
    const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
    const DiracField phi0 = make_gaussian_dirac_packet(grid, mass, center, width, k0);
    PropagatorOptions opts;
    opts.method = PropagatorMethod::ExactExp;
    const DiracField phit = dirac_evolve(phi0, H, t, opts);

    nr.mass = mass;
    const Eigen::VectorXcd psi0 = gaussian_packet_1d(nr, center, width, k0);
    const Eigen::VectorXcd psit = schrodinger_evolve(nr, psi0, t, 0.02);

    Eigen::VectorXd wd = phit.density();
    Eigen::VectorXd ws = psit.cwiseAbs2();
    wd /= wd.sum();
    ws /= ws.sum();
    l1.push_back((wd - ws).cwiseAbs().sum());
    residuals.push_back(nonrel_reduce(phit, mass, t).residual);
  }

  double worst_ratio = 0.0;
  for (size_t i = 1; i < l1.size(); ++i) worst_ratio = std::max(worst_ratio, l1[i] / l1[i - 1]);
  push_flag(out, s, "L1(Dirac, Schrodinger) decreases over M sweep x8", worst_ratio, 1.0,
            worst_ratio < 1.0);
  push(out, s, "final L1 distance", l1.back(), 1e-3);

  double worst_res_ratio = 0.0;
  for (size_t i = 1; i < residuals.size(); ++i) {
    worst_res_ratio = std::max(worst_res_ratio, residuals[i] / residuals[i - 1]);
  }
  push_flag(out, s, "reduction residual decreases over sweep", worst_res_ratio, 1.0,
            worst_res_ratio < 1.0);
  push(out, s, "final reduction residual", residuals.back(), 2e-2);
}

// ------------------------------------------------------------------- demos

TunnelingConfig tunneling_config(bool small) {
  TunnelingConfig cfg;
  if (!small) {
    cfg.sites = 1024;
    cfg.length = 500.0;
    cfg.barrier_center = 250.0;
    cfg.packet_center = 130.0;
    cfg.t_final = 240.0;
  }
  return cfg;
}

DoubleSlitConfig double_slit_config(bool small) {
  DoubleSlitConfig cfg;
  if (!small) {
    cfg.nx = 160;
    cfg.ny = 160;
    cfg.packet_center_x = 8.0;
    cfg.packet_width_x = 3.0;
    cfg.packet_width_y = 8.0;
    cfg.barrier_x = 18.0;
    cfg.slit_width_cells = 4;
    cfg.slit_separation_cells = 10;
    cfg.t_final = 4.5;
  }
  return cfg;
}

void suite_demos(VerifyGeometry geometry, std::uint64_t, Checks& out) {
  const std::string s = "demos";
  const bool small = geometry == VerifyGeometry::Small;

  TunnelingConfig tcfg = tunneling_config(small);
  const TunnelingResult tun = run_tunneling(tcfg);
  push(out, s, "tunneling T vs analytic (relative)",
       std::abs(tun.transmission - tun.transmission_analytic) / tun.transmission_analytic, 0.15);
  push(out, s, "tunneling norm drift", tun.norm_drift, 1e-9);

  TunnelingConfig zcfg = tcfg;
  zcfg.barrier_height = 0.0;
  push(out, s, "zero barrier: T = 1", std::abs(run_tunneling(zcfg).transmission - 1.0), 1e-6);

  std::vector<double> widths{tcfg.barrier_width, tcfg.barrier_width + 1.0,
                             tcfg.barrier_width + 2.0};
  double prev = std::numeric_limits<double>::max();
  double worst_ratio = 0.0;
  for (double w : widths) {
    TunnelingConfig wcfg = tcfg;
    wcfg.barrier_width = w;
    const double trans = run_tunneling(wcfg).transmission;
    worst_ratio = std::max(worst_ratio, trans / prev);
    prev = trans;
  }
  push_flag(out, s, "T decreases with barrier width", worst_ratio, 1.0, worst_ratio < 1.0);

  DoubleSlitConfig dcfg = double_slit_config(small);
  const DoubleSlitResult both = run_double_slit(dcfg);
  push_flag(out, s, "double slit fringe contrast > 0.5", both.contrast, 0.5, both.contrast > 0.5);
  push(out, s, "double slit symmetry about the axis", both.symmetry_defect, 1e-10);
  push(out, s, "double slit norm drift", both.norm_drift, 1e-9);

  DoubleSlitConfig scfg = dcfg;
  scfg.second_slit_open = false;
  const DoubleSlitResult single = run_double_slit(scfg);
  push_flag(out, s, "single slit lacks multi-fringe structure",
            static_cast<double>(single.central_maxima), 2.0,
            single.central_maxima <= 2 && single.central_maxima < both.central_maxima);
  push_flag(out, s, "single-slit contrast below two-slit contrast", single.contrast,
            both.contrast, single.contrast < both.contrast);
}

// ------------------------------------------------------------ antisymmetry

void suite_antisymmetry(VerifyGeometry, std::uint64_t seed, Checks& out) {
  const std::string s = "antisymmetry";
  const auto cfg = oracle_configs()[1];  // Ns=8 S=2 with mass and gauge
  const int B = num_variables(cfg.geometry, cfg.params);
  const SectorBasis pairs(B, 2), singles(B, 1), empty(B, 0);
  const SparseMatrixD K = build_generator_sector(cfg.geometry, cfg.params, pairs);

  std::mt19937_64 rng(seed + 4);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd amp(B, B);
  for (int i = 0; i < B; ++i) {
    for (int j = 0; j < i; ++j) {
      amp(i, j) = gauss(rng);
      amp(j, i) = -amp(i, j);
    }
    amp(i, i) = 0.0;
  }

  const Eigen::VectorXd evolved = evolve(two_particle_state(pairs, amp), K, 1.0);
  push(out, s, "two-particle norm drift", std::abs(evolved.norm() - 1.0), 1e-12);

  // pull the pair amplitudes back out through two annihilations; Pauli
  // antisymmetry must survive the evolution
  Eigen::MatrixXd back(B, B);
  for (int b = 0; b < B; ++b) {
    const Eigen::VectorXd once = apply_annihilation(pairs, singles, evolved, b);
    for (int a = 0; a < B; ++a) {
      back(a, b) = apply_annihilation(singles, empty, once, a)[0];
    }
  }
  push(out, s, "antisymmetry defect after evolution",
       max_abs(back + back.transpose()) / std::max(1e-300, max_abs(back)), 1e-12);
  double diag = 0.0;
  for (int b = 0; b < B; ++b) diag = std::max(diag, std::abs(back(b, b)));
  push(out, s, "double occupation amplitude", diag, 1e-14);
}

using SuiteFn = void (*)(VerifyGeometry, std::uint64_t, Checks&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"clifford", suite_clifford},       {"grassmann", suite_grassmann},
    {"generator", suite_generator},     {"two-state", suite_two_state},
    {"evolution", suite_evolution},     {"equivalence", suite_equivalence},
    {"dispersion", suite_dispersion},   {"observables", suite_observables},
    {"nonrel", suite_nonrel},           {"demos", suite_demos},
    {"antisymmetry", suite_antisymmetry},
};

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& entry : kSuites) names.push_back(entry.name);
  return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, VerifyGeometry geometry,
                                          std::uint64_t seed) {
  for (const auto& entry : kSuites) {
    if (suite == entry.name) {
      Checks out;
      entry.fn(geometry, seed, out);
      return out;
    }
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<CheckResult> run_verify_all(VerifyGeometry geometry, std::uint64_t seed) {
  Checks out;
  for (const auto& entry : kSuites) entry.fn(geometry, seed, out);
  return out;
}

std::vector<CriterionResult> run_acceptance() {
  const struct {
    int index;
    const char* suite;
    const char* title;
  } criteria[] = {
      {1, "clifford", "spinor-algebra identities"},
      {2, "grassmann", "Grassmann-engine exactness"},
      {3, "generator", "generator vs brute-force oracle"},
      {4, "two-state", "two-state oscillation and sign rule"},
      {5, "evolution", "orthogonal evolution at scale"},
      {6, "equivalence", "quantum-from-classical equivalence"},
      {7, "dispersion", "lattice dispersion relations"},
      {8, "observables", "observable spectra and expectation rules"},
      {9, "nonrel", "non-relativistic limit"},
      {10, "demos", "double slit and tunneling"},
      {11, "antisymmetry", "fermionic antisymmetry"},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.index = c.index;
    r.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    r.checks = run_verify_suite(c.suite, VerifyGeometry::Small, 12345);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = true;
    for (const auto& check : r.checks) r.pass = r.pass && check.pass;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace isingq
