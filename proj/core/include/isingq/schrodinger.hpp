#pragma once

// Non-relativistic Schrodinger propagation used by the demos and by the
// non-relativistic reduction checks.  The 1D propagator is plain
// Crank-Nicolson (periodic or Dirichlet); the 2D propagator is a
// Strang-split pair of Cayley factors acting along rows and columns, so a
// full step is an exact product of unitaries and the norm is conserved to
// rounding.

#include <complex>

#include <Eigen/Dense>

namespace isingq {

struct Schrodinger1D {
  int n = 0;
  double dx = 1.0;
  double mass = 1.0;
  bool periodic = true;
  Eigen::VectorXd potential;  // size n, or empty for a free particle

  double length() const { return n * dx; }
};

// Schrodinger CN evolution of psi0 by time t in steps of dt (dt <= 0 picks
// t/100).  Unitary for any step size.
Eigen::VectorXcd schrodinger_evolve(const Schrodinger1D& model, const Eigen::VectorXcd& psi0,
                                    double t, double dt = 0.0);

struct Schrodinger2D {
  int nx = 0;
  int ny = 0;
  double dx = 1.0;
  double mass = 1.0;
  Eigen::VectorXd potential;  // size nx*ny, index x*ny + y, or empty

  int num_sites() const { return nx * ny; }
  int site(int x, int y) const { return x * ny + y; }
};

// 2D evolution with Dirichlet walls (psi = 0 outside the box).
Eigen::VectorXcd schrodinger_evolve_2d(const Schrodinger2D& model, const Eigen::VectorXcd& psi0,
                                       double t, double dt);

// Normalized Gaussian wave packet exp(-(x-c)^2/(4 w^2) + i k0 x) on the grid.
Eigen::VectorXcd gaussian_packet_1d(const Schrodinger1D& model, double center, double width,
                                    double k0);

// Free-particle moments of that packet after time t (continuum formulas).
double free_packet_center(double center, double k0, double mass, double t);
double free_packet_width(double width, double mass, double t);

// <x> and sqrt(<x^2>-<x>^2) of |psi|^2 on a 1D grid.
void position_moments_1d(const Schrodinger1D& model, const Eigen::VectorXcd& psi, double& mean,
                         double& spread);

}  // namespace isingq
