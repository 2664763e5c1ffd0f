#include "isingq/dirac.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/MatrixFunctions>

#include "isingq/ensemble.hpp"
#include "isingq/generator.hpp"
#include "isingq/sector.hpp"

namespace isingq {

namespace {

constexpr Complex kI{0.0, 1.0};

int wrap(int i, int n) { return ((i % n) + n) % n; }

double norm_inf(const SparseMatrixC& H) {
  Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(H.rows());
  for (int o = 0; o < H.outerSize(); ++o) {
    for (SparseMatrixC::InnerIterator it(H, o); it; ++it) {
      rowsum[it.row()] += std::abs(it.value());
    }
  }
  return rowsum.size() ? rowsum.maxCoeff() : 0.0;
}

}  // namespace

Grid Grid::line(int sites, double dx) { return Grid{1, {sites, 1, 1}, dx}; }

int Grid::num_sites() const {
  int s = 1;
  for (int i = 0; i < dim; ++i) s *= n[i];
  return s;
}

std::vector<int> Grid::active_axes() const {
  std::vector<int> axes;
  for (int i = 0; i < dim; ++i) axes.push_back(3 - dim + i);
  return axes;
}

double DiracField::norm_sq() const {
  return phi.squaredNorm() * std::pow(grid.dx, grid.dim);
}

Eigen::VectorXd DiracField::density() const {
  const int S = grid.num_sites();
  Eigen::VectorXd w(S);
  for (int s = 0; s < S; ++s) w[s] = phi.segment<4>(4 * s).squaredNorm();
  return w;
}

SparseMatrixC build_dirac_hamiltonian(const Grid& grid, const HamiltonianSpec& spec) {
  if (grid.dim < 1 || grid.dim > 3) throw std::invalid_argument("Grid: dim must be 1..3");
  const auto& alg = spinor_algebra();
  const int S = grid.num_sites();
  const int N = 4 * S;
  std::vector<Eigen::Triplet<Complex>> trips;

  const auto add_block = [&](int row_site, int col_site, const Eigen::Matrix4cd& block) {
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (block(r, c) != Complex{0.0, 0.0}) {
          trips.emplace_back(4 * row_site + r, 4 * col_site + c, block(r, c));
        }
      }
    }
  };

  // site index arithmetic over the first `dim` entries of n
  const auto shift = [&](int site, int grid_axis, int step) {
    std::array<int, 3> c{0, 0, 0};
    int idx = site;
    for (int i = grid.dim - 1; i >= 0; --i) {
      c[i] = idx % grid.n[i];
      idx /= grid.n[i];
    }
    c[grid_axis] = wrap(c[grid_axis] + step, grid.n[grid_axis]);
    int out = 0;
    for (int i = 0; i < grid.dim; ++i) out = out * grid.n[i] + c[i];
    return out;
  };

  const Complex over2dx = kI / (2.0 * grid.dx);
  for (int s = 0; s < S; ++s) {
    for (int i = 0; i < grid.dim; ++i) {
      const int axis = 3 - grid.dim + i;  // lattice axis carrying T_k
      const Eigen::Matrix4cd tk = alg.T[axis].cast<Complex>();
      add_block(s, shift(s, i, +1), over2dx * tk);
      add_block(s, shift(s, i, -1), -over2dx * tk);
    }
    Eigen::Matrix4cd local = spec.mass * alg.g0gbar;
    if (spec.coupling != 0.0) {
      if (!spec.A0.empty()) local += spec.coupling * spec.A0[s] * Eigen::Matrix4cd::Identity();
      for (int k = 0; k < 3; ++k) {
        if (!spec.Avec[k].empty()) {
          local -= spec.coupling * spec.Avec[k][s] * alg.T[k].cast<Complex>();
        }
      }
    }
    add_block(s, s, local);
  }

  SparseMatrixC H(N, N);
  H.setFromTriplets(trips.begin(), trips.end());
  H.prune(Complex{0.0, 0.0});
  const double defect = hermiticity_defect(H);
  if (defect > 1e-12) {
    throw std::runtime_error("build_dirac_hamiltonian: hermiticity defect " +
                             std::to_string(defect));
  }
  return H;
}

double hermiticity_defect(const SparseMatrixC& H) {
  SparseMatrixC D = SparseMatrixC(H.adjoint()) - H;
  double maxabs = 0.0;
  for (int o = 0; o < D.outerSize(); ++o) {
    for (SparseMatrixC::InnerIterator it(D, o); it; ++it) {
      maxabs = std::max(maxabs, std::abs(it.value()));
    }
  }
  return maxabs;
}

DiracField dirac_evolve(const DiracField& field, const SparseMatrixC& H, double t,
                        const PropagatorOptions& opts) {
  if (H.rows() != field.phi.size()) throw std::invalid_argument("dirac_evolve: size mismatch");
  PropagatorMethod method = opts.method;
  if (method == PropagatorMethod::Auto) {
    method = (H.rows() <= 1024) ? PropagatorMethod::ExactExp : PropagatorMethod::CrankNicolson;
  }
  DiracField out = field;
  if (method == PropagatorMethod::ExactExp) {
    const Eigen::MatrixXcd U = (-kI * t * Eigen::MatrixXcd(H)).exp();
    out.phi = U * field.phi;
    return out;
  }
  const double hnorm = norm_inf(H);
  double dt = opts.dt;
  if (dt <= 0.0) dt = (hnorm > 0.0) ? 0.1 / hnorm : std::abs(t);
  if (opts.accuracy_guard && hnorm > 0.0 && dt * hnorm > 1.0) {
    throw std::invalid_argument("dirac_evolve: step too large for accuracy; use dt <= " +
                                std::to_string(0.5 / hnorm));
  }
  const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / dt)));
  const double h = t / double(steps);

  SparseMatrixC I(H.rows(), H.cols());
  I.setIdentity();
  const SparseMatrixC A = I + (kI * h / 2.0) * H;
  const SparseMatrixC B = I - (kI * h / 2.0) * H;
  Eigen::SparseLU<SparseMatrixC> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw std::runtime_error("dirac_evolve: factorization failed");
  for (long s = 0; s < steps; ++s) out.phi = lu.solve(B * out.phi);
  return out;
}

double lattice_dispersion(const Grid& grid, const std::array<double, 3>& k, double mass) {
  double s2 = 0.0;
  for (int i = 0; i < grid.dim; ++i) {
    const double s = std::sin(k[i] * grid.dx) / grid.dx;
    s2 += s * s;
  }
  return std::sqrt(s2 + mass * mass);
}

double crosscheck_sector(const DiracField& initial, const HamiltonianSpec& spec, double t) {
  const Grid& grid = initial.grid;
  // lattice geometry on the same grid: sublattice spacing 2*delta = dx
  LatticeGeometry geometry;
  geometry.delta = grid.dx / 2.0;
  for (int i = 0; i < grid.dim; ++i) geometry.sites_per_axis[3 - grid.dim + i] = grid.n[i];
  ModelParams params;
  params.num_species = 8;
  params.mass = spec.mass;
  params.coupling = spec.coupling;
  params.A0 = spec.A0;
  params.Avec = spec.Avec;
  params.validate(geometry);

  const int S = geometry.num_sites();
  if (S != grid.num_sites()) throw std::invalid_argument("crosscheck_sector: grid mismatch");
  const int B = num_variables(geometry, params);

  // classical amplitudes: flavor 0 = Re phi, flavor 1 = Im phi
  const double scale = std::pow(grid.dx, grid.dim / 2.0);
  Eigen::VectorXd amps(B);
  for (int s = 0; s < S; ++s) {
    for (int sp = 0; sp < 4; ++sp) {
      const Complex v = initial.phi[4 * s + sp] * scale;
      amps[variable_index(geometry, params, VariableIndex{0, s, sp})] = v.real();
      amps[variable_index(geometry, params, VariableIndex{1, s, sp})] = v.imag();
    }
  }
  amps.normalize();  // guard rounding of an already-normalized field

  const SectorBasis basis(B, 1);
  const SparseMatrixD K = build_generator_sector(geometry, params, basis);
  const Eigen::VectorXd state0 = one_particle_state(basis, amps, VacuumKind::Empty);
  const Eigen::VectorXd state1 = evolve(state0, K, t);
  const Eigen::VectorXd amps1 = extract_one_particle(basis, state1, VacuumKind::Empty);

  const SparseMatrixC H = build_dirac_hamiltonian(grid, spec);
  const DiracField dirac1 = dirac_evolve(initial, H, t);

  double dev = 0.0;
  for (int s = 0; s < S; ++s) {
    for (int sp = 0; sp < 4; ++sp) {
      const Complex from_sector(
          amps1[variable_index(geometry, params, VariableIndex{0, s, sp})] / scale,
          amps1[variable_index(geometry, params, VariableIndex{1, s, sp})] / scale);
      dev = std::max(dev, std::abs(from_sector - dirac1.phi[4 * s + sp]));
    }
  }
  return dev;
}

const Eigen::Matrix4cd& diagonalizing_basis() {
  static const Eigen::Matrix4cd U = [] {
    Eigen::Matrix4cd u;
    const double r = 1.0 / std::sqrt(2.0);
    u << 0, r, 0, kI * r,
         r, 0, -kI * r, 0,
         0, kI * r, 0, r,
         -kI * r, 0, r, 0;
    return u;
  }();
  return U;
}

ReductionResult nonrel_reduce(const DiracField& field, double mass, double time) {
  if (mass == 0.0) throw std::invalid_argument("nonrel_reduce: no non-relativistic limit at m=0");
  if (field.grid.dim != 1) throw std::invalid_argument("nonrel_reduce: implemented for d=1");
  const Eigen::Matrix4cd Udag = diagonalizing_basis().adjoint();
  const int S = field.grid.num_sites();
  Eigen::VectorXcd chi(2 * S), rho(2 * S);
  for (int s = 0; s < S; ++s) {
    const Eigen::Vector4cd v = Udag * field.phi.segment<4>(4 * s);
    chi.segment<2>(2 * s) = v.head<2>();
    rho.segment<2>(2 * s) = v.tail<2>();
  }
  // A chi = sigma_3^dag p chi / (2M), p = -i d, central difference, sigma_3 = i tau_3
  const Eigen::Matrix2cd sig3d = (Complex(0, 1) * Eigen::Matrix2cd(Eigen::Vector2cd(1, -1).asDiagonal())).adjoint();
  Eigen::VectorXcd achi(2 * S), dchi(2 * S);
  for (int s = 0; s < S; ++s) {
    const int sp = wrap(s + 1, S), sm = wrap(s - 1, S);
    const Eigen::Vector2cd d =
        (chi.segment<2>(2 * sp) - chi.segment<2>(2 * sm)) / (2.0 * field.grid.dx);
    dchi.segment<2>(2 * s) = d;
    achi.segment<2>(2 * s) = sig3d * (-kI * d) / (2.0 * mass);
  }
  ReductionResult out;
  out.psi = std::exp(kI * mass * time) * chi;
  out.residual = (rho - achi).norm() / chi.norm();
  out.momentum_over_mass = dchi.norm() / chi.norm() / mass;
  return out;
}

DiracField make_gaussian_dirac_packet(const Grid& grid, double mass, double center, double width,
                                      double momentum) {
  if (grid.dim != 1) throw std::invalid_argument("make_gaussian_dirac_packet: d=1 only");
  const int S = grid.num_sites();
  const double L = S * grid.dx;
  Eigen::VectorXcd chi(2 * S);
  for (int s = 0; s < S; ++s) {
    double x = s * grid.dx - center;
    x -= L * std::round(x / L);  // nearest periodic image
    chi[2 * s] = std::exp(-x * x / (4.0 * width * width)) * std::exp(kI * momentum * (s * grid.dx));
    chi[2 * s + 1] = 0.0;
  }
  const Eigen::Matrix2cd sig3d =
      (Complex(0, 1) * Eigen::Matrix2cd(Eigen::Vector2cd(1, -1).asDiagonal())).adjoint();
  DiracField field;
  field.grid = grid;
  field.phi.resize(4 * S);
  const Eigen::Matrix4cd& U = diagonalizing_basis();
  for (int s = 0; s < S; ++s) {
    const int sp = wrap(s + 1, S), sm = wrap(s - 1, S);
    const Eigen::Vector2cd d =
        (chi.segment<2>(2 * sp) - chi.segment<2>(2 * sm)) / (2.0 * grid.dx);
    const Eigen::Vector2cd rho = mass != 0.0 ? Eigen::Vector2cd(sig3d * (-kI * d) / (2.0 * mass))
                                             : Eigen::Vector2cd::Zero();
    Eigen::Vector4cd v;
    v << chi.segment<2>(2 * s), rho;
    field.phi.segment<4>(4 * s) = U * v;
  }
  field.phi /= std::sqrt(field.norm_sq());
  return field;
}

}  // namespace isingq
