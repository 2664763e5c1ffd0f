#pragma once

// Self-contained demonstration scenarios: the two-state oscillator, 1D
// barrier tunneling, and the 2D double slit.  Each returns the full run
// record (frames plus the headline metric) so callers can write artifacts
// or assert on the numbers.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "isingq/schrodinger.hpp"

namespace isingq {

// --- two-state oscillator ------------------------------------------------

struct TwoStateConfig {
  double omega = 1.0;
  double alpha = 0.3;       // initial phase, q = (cos a, -sin a)
  double periods = 10.0;    // total run length in units of pi/omega
  int samples_per_period = 64;
};

struct TwoStateResult {
  std::vector<double> times;
  std::vector<double> q0, q1;  // classical amplitudes
  std::vector<double> p0;      // probability of state 0
  std::vector<int> s0;         // sign of q0
  double max_error = 0.0;      // |p0(t) - cos^2(omega t + alpha)|
};

TwoStateResult run_two_state(const TwoStateConfig& config);

// --- 1D tunneling --------------------------------------------------------

struct TunnelingConfig {
  int sites = 4096;
  double length = 1000.0;
  double mass = 1.0;
  double momentum = 1.0;        // packet momentum k0; mean energy k0^2/2M
  double packet_center = 300.0;
  double packet_width = 20.0;
  double barrier_center = 500.0;
  double barrier_width = 2.0;
  double barrier_height = 1.0;
  double t_final = 400.0;
  double dt = 0.5;
  int num_frames = 9;
};

struct TunnelingFrame {
  double time = 0.0;
  Eigen::VectorXd density;  // |psi|^2 per site
};

struct TunnelingResult {
  Schrodinger1D model;
  std::vector<TunnelingFrame> frames;
  double transmission = 0.0;        // probability past the barrier at t_final
  double transmission_analytic = 0.0;
  double norm_drift = 0.0;
};

// Plane-wave transmission through a rectangular barrier of height V0 and
// width w at energy E (works on both sides of E = V0).
double barrier_transmission_analytic(double energy, double height, double width, double mass);

TunnelingResult run_tunneling(const TunnelingConfig& config);

// --- 2D double slit ------------------------------------------------------

struct DoubleSlitConfig {
  int nx = 300;               // propagation axis
  int ny = 300;               // transverse axis
  double dx = 0.25;
  double mass = 1.0;
  double momentum = 5.0;      // along x
  double packet_center_x = 10.0;
  double packet_width_x = 4.0;
  double packet_width_y = 10.0;
  double barrier_x = 30.0;
  int barrier_cells = 3;      // barrier thickness in cells
  double barrier_height = 400.0;
  int slit_width_cells = 6;
  int slit_separation_cells = 12;  // center-to-center
  bool second_slit_open = true;
  double t_final = 7.0;
  double dt = 0.005;
  int num_frames = 5;
  double detector_offset = 0.0;  // 0 -> one packet width behind the barrier
};

struct DoubleSlitFrame {
  double time = 0.0;
  Eigen::VectorXd density;  // nx*ny, index x*ny + y
};

struct DoubleSlitResult {
  Schrodinger2D model;
  std::vector<DoubleSlitFrame> frames;
  Eigen::VectorXd detector_profile;  // time-integrated density on the line
  int detector_cell = 0;
  double contrast = 0.0;      // (max-min)/(max+min) over the central fringes
  int central_maxima = 0;     // local maxima above 10% of peak there
  double symmetry_defect = 0.0;  // max |w(y) - w(mirror y)| on the line
  double norm_drift = 0.0;
};

DoubleSlitResult run_double_slit(const DoubleSlitConfig& config);

}  // namespace isingq
