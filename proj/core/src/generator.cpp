#include "isingq/generator.hpp"

#include <stdexcept>
#include <vector>

namespace isingq {

namespace {

using Triplet = Eigen::Triplet<double>;

void add_block(std::vector<Triplet>& trips, int row_base, int col_base,
               const Eigen::Matrix4d& block, double factor) {
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double v = factor * block(r, c);
      if (v != 0.0) trips.emplace_back(row_base + r, col_base + c, v);
    }
  }
}

BasisMask narrow(const WideMask& m, int num_vars) {
  if (num_vars > kMaxVariables) {
    throw std::invalid_argument("grassmann oracle: variable count exceeds the full-algebra cap");
  }
  return static_cast<BasisMask>(m.w[0]);
}

}  // namespace

SparseMatrixD one_body_coefficients(const LatticeGeometry& geometry, const ModelParams& params) {
  params.validate(geometry);
  const auto& alg = spinor_algebra();
  const int S = geometry.num_sites();
  const int flavors = params.num_species / 4;
  const int B = num_variables(geometry, params);
  const double inv4d = 1.0 / (4.0 * geometry.delta);

  std::vector<Triplet> trips;
  const auto base = [&](int flavor, int site) { return (flavor * S + site) * 4; };

  for (int a = 0; a < flavors; ++a) {
    for (int s = 0; s < S; ++s) {
      // kinetic: T_k * symmetric difference over sublattice neighbours
      for (int axis : geometry.active_axes()) {
        add_block(trips, base(a, s), base(a, geometry.shift_site(s, axis, +1)), alg.T[axis],
                  inv4d);
        add_block(trips, base(a, s), base(a, geometry.shift_site(s, axis, -1)), alg.T[axis],
                  -inv4d);
      }
      // mass: -m g0 Itilde, diagonal in site and flavor
      if (params.mass != 0.0) {
        add_block(trips, base(a, s), base(a, s), alg.gamma[0] * alg.Itilde, -params.mass);
      }
    }
  }
  // gauge coupling: antisymmetric in flavor space
  if (params.coupling != 0.0) {
    for (int s = 0; s < S; ++s) {
      Eigen::Matrix4d pot = Eigen::Matrix4d::Zero();
      if (!params.A0.empty()) pot += params.A0[s] * Eigen::Matrix4d::Identity();
      for (int k = 0; k < 3; ++k) {
        if (!params.Avec[k].empty()) pot -= params.Avec[k][s] * alg.T[k];
      }
      add_block(trips, base(0, s), base(1, s), pot, params.coupling);
      add_block(trips, base(1, s), base(0, s), pot, -params.coupling);
    }
  }

  SparseMatrixD C(B, B);
  C.setFromTriplets(trips.begin(), trips.end());
  C.prune(0.0);
  return C;
}

GrassmannGenerator::GrassmannGenerator(const LatticeGeometry& geometry, const ModelParams& params)
    : num_vars_(num_variables(geometry, params)),
      coefficients_(one_body_coefficients(geometry, params)) {
  if (num_vars_ > kMaxVariables) {
    throw std::invalid_argument(
        "GrassmannGenerator: geometry too large for the full-algebra oracle; "
        "use the sector generator instead");
  }
}

GrassmannElement GrassmannGenerator::apply(const GrassmannElement& g) const {
  if (g.num_vars != num_vars_) {
    throw std::invalid_argument("GrassmannGenerator: mismatched variable sets");
  }
  GrassmannElement out{num_vars_, {}};
  for (int a = 0; a < coefficients_.outerSize(); ++a) {
    for (SparseMatrixD::InnerIterator it(coefficients_, a); it; ++it) {
      // K g = sum C_ab d/dpsi_a (psi_b g)
      const GrassmannElement term = derive(multiply_var(int(it.col()), g), int(it.row()));
      for (const auto& [m, c] : term.terms) out.terms[m] += it.value() * c;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = (it->second == 0.0) ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

GrassmannElement GrassmannGenerator::apply_number(const GrassmannElement& g) const {
  GrassmannElement out{num_vars_, {}};
  for (int b = 0; b < num_vars_; ++b) {
    const GrassmannElement term = derive(multiply_var(b, g), b);
    for (const auto& [m, c] : term.terms) out.terms[m] += c;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = (it->second == 0.0) ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

Eigen::MatrixXd GrassmannGenerator::project_sector(const SectorBasis& basis) const {
  if (basis.num_vars() != num_vars_) {
    throw std::invalid_argument("project_sector: basis over different variable set");
  }
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(basis.dimension(), basis.dimension());
  for (std::int64_t tau = 0; tau < basis.dimension(); ++tau) {
    const GrassmannElement g_tau = basis_element(num_vars_, narrow(basis.mask(tau), num_vars_));
    const GrassmannElement kg = apply(g_tau);
    // Project on the conjugate basis: K_{rho,tau} = Int Dpsi conj(g_rho) K g_tau.
    for (const auto& [m, c] : kg.terms) {
      (void)c;
      WideMask wm;
      wm.w[0] = m;
      const std::int64_t rho = basis.rank(wm);
      const auto cb = conjugate_basis(num_vars_, narrow(basis.mask(rho), num_vars_));
      GrassmannElement conj = basis_element(num_vars_, cb.mask);
      conj = scale(conj, cb.sign);
      K(rho, tau) = berezin_integrate(multiply(conj, kg));
    }
  }
  return K;
}

SparseMatrixD sector_one_body(const SparseMatrixD& coefficients, const SectorBasis& basis) {
  if (coefficients.rows() != basis.num_vars() || coefficients.cols() != basis.num_vars()) {
    throw std::invalid_argument("sector_one_body: coefficient matrix has wrong dimension");
  }
  std::vector<Triplet> trips;
  for (std::int64_t tau = 0; tau < basis.dimension(); ++tau) {
    const WideMask& m0 = basis.mask(tau);
    for (int a = 0; a < coefficients.outerSize(); ++a) {
      for (SparseMatrixD::InnerIterator it(coefficients, a); it; ++it) {
        const int row = int(it.row());
        const int col = int(it.col());
        // d/dpsi_row psi_col g_tau
        WideMask m = m0;
        if (m.test(col)) continue;
        double sign = (m.count_below(col) & 1) ? -1.0 : 1.0;
        m.set(col);
        if (!m.test(row)) continue;
        sign *= (m.count_below(row) & 1) ? -1.0 : 1.0;
        m.clear(row);
        trips.emplace_back(int(basis.rank(m)), int(tau), it.value() * sign);
      }
    }
  }
  SparseMatrixD K(basis.dimension(), basis.dimension());
  K.setFromTriplets(trips.begin(), trips.end());
  K.prune(0.0);
  return K;
}

SparseMatrixD build_generator_sector(const LatticeGeometry& geometry, const ModelParams& params,
                                     const SectorBasis& basis) {
  if (basis.num_vars() != num_variables(geometry, params)) {
    throw std::invalid_argument("build_generator_sector: basis does not match geometry");
  }
  return sector_one_body(one_body_coefficients(geometry, params), basis);
}

OneParticleTransfer build_one_particle_transfer(const LatticeGeometry& geometry,
                                                const ModelParams& params) {
  params.validate(geometry);
  if (params.num_species != 4 || params.mass != 0.0 || params.coupling != 0.0) {
    throw std::invalid_argument(
        "build_one_particle_transfer: the staggered stencil path is the massless Ns=4 action");
  }
  const auto axes = geometry.active_axes();
  const int S = geometry.num_sites();
  const int dim = 4 * S;

  // Reduced corner stencil: product of per-axis factors over active axes.
  const auto corner = [&](const std::vector<int>& v) {
    Eigen::Matrix4d y = Eigen::Matrix4d::Identity();
    for (std::size_t i = 0; i < axes.size(); ++i) y = y * stencil_axis(axes[i], v[i]);
    return y;
  };

  const auto build = [&](int parity) {
    // parity 0: psi on the even sublattice (positions 2c), targets odd;
    // parity 1: psi on the odd sublattice (positions 2c+1), targets even.
    std::vector<Triplet> trips;
    std::vector<int> v(axes.size(), 1);
    while (true) {
      const Eigen::Matrix4d yt = corner(v).transpose();
      for (int s = 0; s < S; ++s) {
        int dest = s;
        for (std::size_t i = 0; i < axes.size(); ++i) {
          const int step = (parity == 0) ? (v[i] - 1) / 2 : (v[i] + 1) / 2;
          dest = geometry.shift_site(dest, axes[i], step);
        }
        add_block(trips, 4 * dest, 4 * s, yt, 1.0);
      }
      // next corner sign vector
      std::size_t i = 0;
      while (i < axes.size() && v[i] == -1) v[i++] = 1;
      if (i == axes.size()) break;
      v[i] = -1;
    }
    SparseMatrixD w(dim, dim);
    w.setFromTriplets(trips.begin(), trips.end());
    w.prune(0.0);
    return w;
  };

  return OneParticleTransfer{build(0), build(1)};
}

}  // namespace isingq
