#include "isingq/schrodinger.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace isingq {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

// Thomas algorithm for a constant-offdiagonal tridiagonal system
// (b[i] varies through the potential, off is shared).  Overwrites rhs with
// the solution.
void solve_tridiag(const std::vector<Complex>& b, Complex off, Complex* rhs, int n,
                   std::vector<Complex>& scratch) {
  scratch.resize(n);
  Complex beta = b[0];
  rhs[0] /= beta;
  for (int i = 1; i < n; ++i) {
    scratch[i] = off / beta;
    beta = b[i] - off * scratch[i];
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / beta;
  }
  for (int i = n - 2; i >= 0; --i) rhs[i] -= scratch[i + 1] * rhs[i + 1];
}

}  // namespace

Eigen::VectorXcd schrodinger_evolve(const Schrodinger1D& model, const Eigen::VectorXcd& psi0,
                                    double t, double dt) {
  const int n = model.n;
  if (psi0.size() != n) throw std::invalid_argument("schrodinger_evolve: size mismatch");
  if (dt <= 0.0) dt = std::abs(t) / 100.0;
  const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / dt)));
  const double h = t / double(steps);

  const double kin = 1.0 / (2.0 * model.mass * model.dx * model.dx);
  // Split off the mean of the potential and apply it as an exact phase at the
  // end.  The Cayley step only approximates a constant shift, so without the
  // split a constant potential would perturb the density at O(dt^2).
  double vbar = 0.0;
  if (model.potential.size()) {
    for (int j = 0; j < n; ++j) vbar += model.potential[j];
    vbar /= double(n);
  }
  Eigen::SparseMatrix<Complex> H(n, n);
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int j = 0; j < n; ++j) {
    double v = 2.0 * kin;
    if (model.potential.size()) v += model.potential[j] - vbar;
    trips.emplace_back(j, j, Complex(v, 0.0));
    const int jp = j + 1, jm = j - 1;
    if (jp < n) trips.emplace_back(j, jp, Complex(-kin, 0.0));
    else if (model.periodic) trips.emplace_back(j, 0, Complex(-kin, 0.0));
    if (jm >= 0) trips.emplace_back(j, jm, Complex(-kin, 0.0));
    else if (model.periodic) trips.emplace_back(j, n - 1, Complex(-kin, 0.0));
  }
  H.setFromTriplets(trips.begin(), trips.end());

  Eigen::SparseMatrix<Complex> I(n, n);
  I.setIdentity();
  const Eigen::SparseMatrix<Complex> A = I + (kI * h / 2.0) * H;
  const Eigen::SparseMatrix<Complex> B = I - (kI * h / 2.0) * H;
  Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) {
    throw std::runtime_error("schrodinger_evolve: factorization failed");
  }
  Eigen::VectorXcd psi = psi0;
  for (long s = 0; s < steps; ++s) psi = lu.solve(B * psi);
  if (vbar != 0.0) psi *= std::exp(-kI * vbar * t);
  return psi;
}

Eigen::VectorXcd schrodinger_evolve_2d(const Schrodinger2D& model, const Eigen::VectorXcd& psi0,
                                       double t, double dt) {
  const int nx = model.nx, ny = model.ny;
  if (psi0.size() != model.num_sites()) {
    throw std::invalid_argument("schrodinger_evolve_2d: size mismatch");
  }
  if (dt <= 0.0) throw std::invalid_argument("schrodinger_evolve_2d: dt must be positive");
  const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / dt)));
  const double h = t / double(steps);
  const double kin = 1.0 / (2.0 * model.mass * model.dx * model.dx);

  // Cayley factor (1 - i a H1)^-1 (1 + ... ) along one axis; H1 carries the
  // Dirichlet second difference plus half the potential.
  std::vector<Complex> diag, rhs, scratch;
  Eigen::VectorXcd psi = psi0;

  const auto cayley_x = [&](double a) {
    const Complex ia = kI * a / 2.0;
    // A = I + i(a/2) H1 has off-diagonal -i(a/2) kin; B = I - i(a/2) H1 has
    // off-diagonal +i(a/2) kin.
    const Complex off_explicit = ia * kin;
    const Complex off_implicit = -ia * kin;
    diag.resize(nx);
    rhs.resize(nx);
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x) {
        double hd = 2.0 * kin;
        if (model.potential.size()) hd += 0.5 * model.potential[model.site(x, y)];
        const Complex p = psi[model.site(x, y)];
        const Complex pm = x > 0 ? psi[model.site(x - 1, y)] : Complex{};
        const Complex pp = x + 1 < nx ? psi[model.site(x + 1, y)] : Complex{};
        rhs[x] = (1.0 - ia * hd) * p + off_explicit * (pm + pp);
        diag[x] = 1.0 + ia * hd;
      }
      solve_tridiag(diag, off_implicit, rhs.data(), nx, scratch);
      for (int x = 0; x < nx; ++x) psi[model.site(x, y)] = rhs[x];
    }
  };
  const auto cayley_y = [&](double a) {
    const Complex ia = kI * a / 2.0;
    // A = I + i(a/2) H1 has off-diagonal -i(a/2) kin; B = I - i(a/2) H1 has
    // off-diagonal +i(a/2) kin.
    const Complex off_explicit = ia * kin;
    const Complex off_implicit = -ia * kin;
    diag.resize(ny);
    rhs.resize(ny);
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) {
        double hd = 2.0 * kin;
        if (model.potential.size()) hd += 0.5 * model.potential[model.site(x, y)];
        const Complex p = psi[model.site(x, y)];
        const Complex pm = y > 0 ? psi[model.site(x, y - 1)] : Complex{};
        const Complex pp = y + 1 < ny ? psi[model.site(x, y + 1)] : Complex{};
        rhs[y] = (1.0 - ia * hd) * p + off_explicit * (pm + pp);
        diag[y] = 1.0 + ia * hd;
      }
      solve_tridiag(diag, off_implicit, rhs.data(), ny, scratch);
      for (int y = 0; y < ny; ++y) psi[model.site(x, y)] = rhs[y];
    }
  };

  for (long s = 0; s < steps; ++s) {
    cayley_y(h / 2.0);
    cayley_x(h);
    cayley_y(h / 2.0);
  }
  return psi;
}

Eigen::VectorXcd gaussian_packet_1d(const Schrodinger1D& model, double center, double width,
                                    double k0) {
  Eigen::VectorXcd psi(model.n);
  const double L = model.length();
  for (int j = 0; j < model.n; ++j) {
    const double xj = j * model.dx;
    double x = xj - center;
    if (model.periodic) x -= L * std::round(x / L);
    psi[j] = std::exp(-x * x / (4.0 * width * width)) * std::exp(kI * k0 * xj);
  }
  psi /= psi.norm() * std::sqrt(model.dx);
  return psi;
}

double free_packet_center(double center, double k0, double mass, double t) {
  return center + k0 / mass * t;
}

double free_packet_width(double width, double mass, double t) {
  const double r = t / (2.0 * mass * width * width);
  return width * std::sqrt(1.0 + r * r);
}

void position_moments_1d(const Schrodinger1D& model, const Eigen::VectorXcd& psi, double& mean,
                         double& spread) {
  double w = 0.0, m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < model.n; ++j) {
    const double p = std::norm(psi[j]);
    const double x = j * model.dx;
    w += p;
    m1 += p * x;
    m2 += p * x * x;
  }
  mean = m1 / w;
  spread = std::sqrt(std::max(0.0, m2 / w - mean * mean));
}

}  // namespace isingq
