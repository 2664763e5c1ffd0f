#include <doctest.h>

#include <cmath>
#include <complex>

#include "isingq/schrodinger.hpp"

using namespace isingq;

TEST_CASE("free Gaussian packet follows the analytic moments") {
  Schrodinger1D model;
  model.n = 3000;
  model.dx = 0.02;
  model.mass = 1.0;
  const double x0 = 25.0, width = 5.0, k0 = 0.1, t = 20.0;
  const Eigen::VectorXcd psi0 = gaussian_packet_1d(model, x0, width, k0);
  const Eigen::VectorXcd psit = schrodinger_evolve(model, psi0, t, 0.05);

  double mean = 0.0, spread = 0.0;
  position_moments_1d(model, psit, mean, spread);
  const double mean_exact = free_packet_center(x0, k0, model.mass, t);
  const double spread_exact = free_packet_width(width, model.mass, t);
  CHECK(std::abs(mean - mean_exact) / mean_exact < 1e-6);
  CHECK(std::abs(spread - spread_exact) / spread_exact < 1e-4);
  CHECK(std::abs(psit.squaredNorm() * model.dx - 1.0) < 1e-12);
}

TEST_CASE("stiff-walled box conserves norm and energy") {
  Schrodinger1D model;
  model.n = 400;
  model.dx = 0.1;
  model.mass = 1.0;
  model.periodic = false;
  const Eigen::VectorXcd psi0 = gaussian_packet_1d(model, 20.0, 2.0, 1.5);

  const auto energy = [&](const Eigen::VectorXcd& psi) {
    const double kin = 1.0 / (2.0 * model.mass * model.dx * model.dx);
    std::complex<double> e = 0.0;
    for (int j = 0; j < model.n; ++j) {
      std::complex<double> h = 2.0 * kin * psi[j];
      if (j > 0) h -= kin * psi[j - 1];
      if (j + 1 < model.n) h -= kin * psi[j + 1];
      e += std::conj(psi[j]) * h * model.dx;
    }
    return e.real();
  };

  const Eigen::VectorXcd psit = schrodinger_evolve(model, psi0, 40.0, 0.02);
  CHECK(std::abs(psit.squaredNorm() * model.dx - 1.0) < 1e-9);
  CHECK(std::abs(energy(psit) - energy(psi0)) < 1e-8);
}

TEST_CASE("constant potential leaves the density invariant") {
  Schrodinger1D model;
  model.n = 200;
  model.dx = 0.1;
  model.mass = 1.0;
  model.potential = Eigen::VectorXd::Constant(model.n, 2.5);
  Schrodinger1D free_model = model;
  free_model.potential.resize(0);

  const Eigen::VectorXcd psi0 = gaussian_packet_1d(model, 10.0, 1.5, 0.8);
  const Eigen::VectorXcd a = schrodinger_evolve(model, psi0, 3.0, 0.01);
  const Eigen::VectorXcd b = schrodinger_evolve(free_model, psi0, 3.0, 0.01);
  CHECK((a.cwiseAbs2() - b.cwiseAbs2()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("2D propagator is exactly unitary and preserves mirror symmetry") {
  Schrodinger2D model;
  model.nx = 40;
  model.ny = 41;
  model.dx = 0.25;
  model.mass = 1.0;
  model.potential = Eigen::VectorXd::Zero(model.num_sites());
  // symmetric potential bump
  for (int x = 0; x < model.nx; ++x) {
    for (int y = 0; y < model.ny; ++y) {
      const double dy = y - (model.ny - 1) / 2.0;
      model.potential[model.site(x, y)] = 2.0 * std::exp(-dy * dy / 8.0);
    }
  }

  Eigen::VectorXcd psi(model.num_sites());
  const std::complex<double> ik(0.0, 1.0);
  for (int x = 0; x < model.nx; ++x) {
    for (int y = 0; y < model.ny; ++y) {
      const double gx = x - 12.0, gy = y - (model.ny - 1) / 2.0;
      psi[model.site(x, y)] =
          std::exp(-gx * gx / 30.0 - gy * gy / 30.0) * std::exp(ik * (2.0 * x * model.dx));
    }
  }
  psi /= psi.norm() * model.dx;

  const double norm0 = psi.squaredNorm();
  const Eigen::VectorXcd out = schrodinger_evolve_2d(model, psi, 1.0, 0.01);
  CHECK(std::abs(out.squaredNorm() - norm0) / norm0 < 1e-12);

  double defect = 0.0;
  for (int x = 0; x < model.nx; ++x) {
    for (int y = 0; y < model.ny; ++y) {
      defect = std::max(defect, std::abs(std::norm(out[model.site(x, y)]) -
                                         std::norm(out[model.site(x, model.ny - 1 - y)])));
    }
  }
  CHECK(defect < 1e-12);
}

TEST_CASE("2D packet drifts at the lattice group velocity") {
  Schrodinger2D model;
  model.nx = 160;
  model.ny = 9;
  model.dx = 0.5;
  model.mass = 1.0;

  const double k0 = 0.8;
  Eigen::VectorXcd psi(model.num_sites());
  const std::complex<double> ik(0.0, 1.0);
  for (int x = 0; x < model.nx; ++x) {
    for (int y = 0; y < model.ny; ++y) {
      const double gx = x * model.dx - 20.0;
      psi[model.site(x, y)] =
          std::exp(-gx * gx / (4.0 * 4.0 * 4.0)) * std::exp(ik * (k0 * x * model.dx));
    }
  }
  psi /= psi.norm() * model.dx;

  const double t = 15.0;
  const Eigen::VectorXcd out = schrodinger_evolve_2d(model, psi, t, 0.005);
  const auto center_x = [&](const Eigen::VectorXcd& f) {
    double w = 0.0, m1 = 0.0;
    for (int x = 0; x < model.nx; ++x) {
      for (int y = 0; y < model.ny; ++y) {
        const double p = std::norm(f[model.site(x, y)]);
        w += p;
        m1 += p * x * model.dx;
      }
    }
    return m1 / w;
  };
  // group velocity of the second-difference dispersion
  const double v = std::sin(k0 * model.dx) / (model.mass * model.dx);
  CHECK(center_x(out) - center_x(psi) == doctest::Approx(v * t).epsilon(0.02));
}
