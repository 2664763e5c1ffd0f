#include "isingq/demos.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "isingq/ensemble.hpp"

namespace isingq {

TwoStateResult run_two_state(const TwoStateConfig& config) {
  const double omega = config.omega;
  Eigen::MatrixXd K(2, 2);
  K << 0.0, omega, -omega, 0.0;

  const double period = M_PI / omega;  // p0 repeats with period pi/omega
  const int total = static_cast<int>(config.periods * config.samples_per_period);
  const double dt = period / config.samples_per_period;

  Eigen::VectorXd q(2);
  q << std::cos(config.alpha), -std::sin(config.alpha);

  TwoStateResult out;
  for (int i = 0; i <= total; ++i) {
    const double t = i * dt;
    out.times.push_back(t);
    out.q0.push_back(q[0]);
    out.q1.push_back(q[1]);
    out.p0.push_back(q[0] * q[0]);
    out.s0.push_back(q[0] >= 0.0 ? +1 : -1);
    const double exact = std::cos(omega * t + config.alpha);
    out.max_error = std::max(out.max_error, std::abs(q[0] * q[0] - exact * exact));
    if (i < total) q = evolve(q, K, dt);
  }
  return out;
}

double barrier_transmission_analytic(double energy, double height, double width, double mass) {
  if (height == 0.0) return 1.0;
  const double diff = height - energy;
  if (std::abs(diff) < 1e-12 * height) {
    return 1.0 / (1.0 + mass * energy * width * width / 2.0);
  }
  if (diff > 0.0) {
    const double kappa = std::sqrt(2.0 * mass * diff);
    const double s = std::sinh(kappa * width);
    return 1.0 / (1.0 + height * height * s * s / (4.0 * energy * diff));
  }
  const double k2 = std::sqrt(-2.0 * mass * diff);
  const double s = std::sin(k2 * width);
  return 1.0 / (1.0 + height * height * s * s / (4.0 * energy * (-diff)));
}

TunnelingResult run_tunneling(const TunnelingConfig& config) {
  TunnelingResult out;
  Schrodinger1D& model = out.model;
  model.n = config.sites;
  model.dx = config.length / config.sites;
  model.mass = config.mass;
  model.periodic = false;
  model.potential = Eigen::VectorXd::Zero(model.n);
  const double lo = config.barrier_center - config.barrier_width / 2.0;
  const double hi = config.barrier_center + config.barrier_width / 2.0;
  int barrier_sites = 0;
  for (int j = 0; j < model.n; ++j) {
    const double x = j * model.dx;
    if (x >= lo && x < hi) {
      model.potential[j] = config.barrier_height;
      ++barrier_sites;
    }
  }

  Eigen::VectorXcd psi =
      gaussian_packet_1d(model, config.packet_center, config.packet_width, config.momentum);

  const int frames = std::max(2, config.num_frames);
  const double seg = config.t_final / (frames - 1);
  out.frames.push_back({0.0, psi.cwiseAbs2()});
  for (int f = 1; f < frames; ++f) {
    psi = schrodinger_evolve(model, psi, seg, config.dt);
    out.frames.push_back({f * seg, psi.cwiseAbs2()});
  }

  double transmitted = 0.0;
  for (int j = 0; j < model.n; ++j) {
    if (j * model.dx > hi) transmitted += std::norm(psi[j]);
  }
  out.transmission = transmitted * model.dx;
  // compare against the barrier width actually realized on the grid
  const double energy = config.momentum * config.momentum / (2.0 * config.mass);
  out.transmission_analytic = barrier_transmission_analytic(energy, config.barrier_height,
                                                            barrier_sites * model.dx, config.mass);
  out.norm_drift = std::abs(psi.squaredNorm() * model.dx - 1.0);
  return out;
}

DoubleSlitResult run_double_slit(const DoubleSlitConfig& config) {
  const int nx = config.nx, ny = config.ny;
  DoubleSlitResult out;
  Schrodinger2D& model = out.model;
  model.nx = nx;
  model.ny = ny;
  model.dx = config.dx;
  model.mass = config.mass;
  model.potential = Eigen::VectorXd::Zero(nx * ny);

  const int bx = static_cast<int>(std::lround(config.barrier_x / config.dx));
  if (bx <= 0 || bx + config.barrier_cells >= nx) {
    throw std::invalid_argument("run_double_slit: barrier outside the box");
  }
  // slit 1 low of center, slit 2 its exact mirror under y -> ny-1-y
  const int a1 = ny / 2 - config.slit_separation_cells / 2 - config.slit_width_cells / 2;
  const int b1 = a1 + config.slit_width_cells;  // half-open [a1, b1)
  const int a2 = ny - b1;
  if (a1 < 0 || (config.second_slit_open && a2 < b1)) {
    throw std::invalid_argument("run_double_slit: slits overlap or leave the box");
  }
  const auto open_cell = [&](int y) {
    if (y >= a1 && y < b1) return true;
    if (config.second_slit_open && ny - 1 - y >= a1 && ny - 1 - y < b1) return true;
    return false;
  };
  for (int x = bx; x < bx + config.barrier_cells; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (!open_cell(y)) model.potential[model.site(x, y)] = config.barrier_height;
    }
  }

  // incident packet, centered on the symmetry axis
  const double yc = (ny - 1) / 2.0 * config.dx;
  Eigen::VectorXcd psi(nx * ny);
  const std::complex<double> ik0(0.0, config.momentum);
  for (int x = 0; x < nx; ++x) {
    const double xv = x * config.dx;
    const double gx = std::exp(-std::pow(xv - config.packet_center_x, 2) /
                               (4.0 * config.packet_width_x * config.packet_width_x));
    const std::complex<double> phase = std::exp(ik0 * xv);
    for (int y = 0; y < ny; ++y) {
      const double yv = y * config.dx;
      const double gy = std::exp(-std::pow(yv - yc, 2) /
                                 (4.0 * config.packet_width_y * config.packet_width_y));
      psi[model.site(x, y)] = gx * gy * phase;
    }
  }
  psi /= psi.norm() * config.dx;

  const double det_offset =
      config.detector_offset > 0.0 ? config.detector_offset : config.packet_width_x;
  out.detector_cell =
      bx + config.barrier_cells + static_cast<int>(std::lround(det_offset / config.dx));
  if (out.detector_cell >= nx) throw std::invalid_argument("run_double_slit: detector outside box");

  // march in short segments: frames at a coarse cadence, detector profile
  // accumulated every segment
  const double seg = 0.1;
  const int segments = std::max(1, static_cast<int>(std::lround(config.t_final / seg)));
  const int frames = std::max(2, config.num_frames);
  const int frame_every = std::max(1, segments / (frames - 1));
  out.detector_profile = Eigen::VectorXd::Zero(ny);
  out.frames.push_back({0.0, psi.cwiseAbs2()});
  for (int s = 1; s <= segments; ++s) {
    psi = schrodinger_evolve_2d(model, psi, seg, config.dt);
    for (int y = 0; y < ny; ++y) {
      out.detector_profile[y] += std::norm(psi[model.site(out.detector_cell, y)]) * seg;
    }
    if (s % frame_every == 0 || s == segments) out.frames.push_back({s * seg, psi.cwiseAbs2()});
  }

  // fringe metrics: contrast over the central fringes (one slit separation
  // either side of the axis), maxima counted over a wider window
  const int c = (ny - 1) / 2;
  const int narrow = config.slit_separation_cells;
  const int wide = 3 * config.slit_separation_cells;
  const int nlo = std::max(0, c - narrow), nhi = std::min(ny - 1, c + 1 + narrow);
  double wmax = 0.0, wmin = std::numeric_limits<double>::max();
  for (int y = nlo; y <= nhi; ++y) {
    wmax = std::max(wmax, out.detector_profile[y]);
    wmin = std::min(wmin, out.detector_profile[y]);
  }
  out.contrast = (wmax + wmin) > 0.0 ? (wmax - wmin) / (wmax + wmin) : 0.0;
  const int wlo = std::max(1, c - wide), whi = std::min(ny - 2, c + 1 + wide);
  double peak = 0.0;
  for (int y = wlo; y <= whi; ++y) peak = std::max(peak, out.detector_profile[y]);
  out.central_maxima = 0;
  for (int y = wlo; y <= whi; ++y) {
    const double w = out.detector_profile[y];
    if (w > out.detector_profile[y - 1] && w > out.detector_profile[y + 1] && w > 0.1 * peak) {
      ++out.central_maxima;
    }
  }

  const Eigen::VectorXd final_density = out.frames.back().density;
  double defect = 0.0;
  if (config.second_slit_open) {
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) {
        defect = std::max(defect, std::abs(final_density[model.site(x, y)] -
                                           final_density[model.site(x, ny - 1 - y)]));
      }
    }
  }
  out.symmetry_defect = final_density.maxCoeff() > 0.0 ? defect / final_density.maxCoeff() : 0.0;
  out.norm_drift =
      std::abs(psi.squaredNorm() * config.dx * config.dx - 1.0);
  return out;
}

}  // namespace isingq
