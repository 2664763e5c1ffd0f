#include "isingq/lattice.hpp"

#include <stdexcept>

namespace isingq {

namespace {

SpinorAlgebra build_spinor_algebra() {
  SpinorAlgebra a;
  Eigen::Matrix2d c, tau1, id2;
  c << 0, 1, -1, 0;  // i*tau_2
  tau1 << 0, 1, 1, 0;
  id2.setIdentity();

  a.T[0].setZero();
  a.T[0].block<2, 2>(0, 2) = id2;
  a.T[0].block<2, 2>(2, 0) = id2;
  a.T[1].setZero();
  a.T[1].block<2, 2>(0, 2) = c;
  a.T[1].block<2, 2>(2, 0) = -c;
  a.T[2].setZero();
  a.T[2].block<2, 2>(0, 0) = id2;
  a.T[2].block<2, 2>(2, 2) = -id2;

  a.Itilde = a.T[0] * a.T[1] * a.T[2];

  a.gamma[0].setZero();
  a.gamma[0].block<2, 2>(0, 2) = tau1;
  a.gamma[0].block<2, 2>(2, 0) = -tau1;
  for (int k = 0; k < 3; ++k) a.gamma[k + 1] = -a.gamma[0] * a.T[k];

  const std::complex<double> mi(0.0, -1.0);
  a.gammabar = mi * a.Itilde;  // -i g0 g1 g2 g3, with g0 g1 g2 g3 = Itilde
  a.g0gbar = mi * (a.gamma[0] * a.Itilde);
  return a;
}

}  // namespace

const SpinorAlgebra& spinor_algebra() {
  static const SpinorAlgebra algebra = build_spinor_algebra();
  return algebra;
}

Eigen::Matrix4d stencil_axis(int axis, int v) {
  if (axis < 0 || axis > 2 || (v != 1 && v != -1)) {
    throw std::invalid_argument("stencil_axis: bad corner sign");
  }
  return 0.5 * (Eigen::Matrix4d::Identity() - double(v) * spinor_algebra().T[axis]);
}

Eigen::Matrix4d stencil(const std::array<int, 3>& v) {
  const auto& a = spinor_algebra();
  for (int s : v) {
    if (s != 1 && s != -1) throw std::invalid_argument("stencil: corner signs must be +-1");
  }
  const double w1 = -double(v[1] * v[2]);
  const double w2 = double(v[0] * v[2]);
  const double w3 = -double(v[0] * v[1]);
  const std::array<double, 3> w{w1, w2, w3};
  Eigen::Matrix4d y = Eigen::Matrix4d::Identity();
  for (int k = 0; k < 3; ++k) {
    y -= (double(v[k]) * Eigen::Matrix4d::Identity() + w[k] * a.Itilde) * a.T[k];
  }
  y -= double(v[0] * v[1] * v[2]) * a.Itilde;
  return y / 8.0;
}

LatticeGeometry LatticeGeometry::line(int sites, double delta, double eps) {
  return LatticeGeometry{{1, 1, sites}, delta, eps};
}

LatticeGeometry LatticeGeometry::cube(int sites_per_axis, double delta, double eps) {
  return LatticeGeometry{{sites_per_axis, sites_per_axis, sites_per_axis}, delta, eps};
}

int LatticeGeometry::num_sites() const {
  return sites_per_axis[0] * sites_per_axis[1] * sites_per_axis[2];
}

std::vector<int> LatticeGeometry::active_axes() const {
  std::vector<int> axes;
  for (int j = 0; j < 3; ++j) {
    if (sites_per_axis[j] > 1) axes.push_back(j);
  }
  return axes;
}

int LatticeGeometry::site_index(const std::array<int, 3>& coord) const {
  int idx = 0;
  for (int j = 0; j < 3; ++j) {
    idx = idx * sites_per_axis[j] + coord[j];
  }
  return idx;
}

std::array<int, 3> LatticeGeometry::site_coord(int index) const {
  std::array<int, 3> coord{};
  for (int j = 2; j >= 0; --j) {
    coord[j] = index % sites_per_axis[j];
    index /= sites_per_axis[j];
  }
  return coord;
}

int LatticeGeometry::shift_site(int index, int axis, int steps) const {
  auto coord = site_coord(index);
  const int n = sites_per_axis[axis];
  coord[axis] = ((coord[axis] + steps) % n + n) % n;
  return site_index(coord);
}

double LatticeGeometry::coordinate(int site, int axis) const {
  return 2.0 * delta * site_coord(site)[axis];
}

void ModelParams::validate(const LatticeGeometry& geometry) const {
  if (num_species != 4 && num_species != 8) {
    throw std::invalid_argument("ModelParams: num_species must be 4 or 8");
  }
  if (num_species == 4 && (mass != 0.0 || coupling != 0.0)) {
    throw std::invalid_argument("ModelParams: Ns = 4 forces m = 0 and e = 0");
  }
  const auto check_grid = [&](const std::vector<double>& f, const char* name) {
    if (!f.empty() && static_cast<int>(f.size()) != geometry.num_sites()) {
      throw std::invalid_argument(std::string("ModelParams: potential grid ") + name +
                                  " does not match the geometry");
    }
  };
  check_grid(A0, "A0");
  for (int k = 0; k < 3; ++k) check_grid(Avec[k], "Ak");
  if (geometry.num_sites() < 1 || geometry.delta <= 0.0 || geometry.eps <= 0.0) {
    throw std::invalid_argument("LatticeGeometry: need S >= 1, delta > 0, eps > 0");
  }
}

int num_variables(const LatticeGeometry& geometry, const ModelParams& params) {
  return (params.num_species / 4) * geometry.num_sites() * 4;
}

int variable_index(const LatticeGeometry& geometry, const ModelParams& params,
                   const VariableIndex& v) {
  const int S = geometry.num_sites();
  const int flavors = params.num_species / 4;
  if (v.flavor < 0 || v.flavor >= flavors || v.site < 0 || v.site >= S || v.species < 0 ||
      v.species >= 4) {
    throw std::invalid_argument("variable_index: out of range");
  }
  return (v.flavor * S + v.site) * 4 + v.species;
}

VariableIndex variable_unpack(const LatticeGeometry& geometry, const ModelParams& params,
                              int linear) {
  const int S = geometry.num_sites();
  if (linear < 0 || linear >= num_variables(geometry, params)) {
    throw std::invalid_argument("variable_unpack: out of range");
  }
  VariableIndex v;
  v.species = linear % 4;
  linear /= 4;
  v.site = linear % S;
  v.flavor = linear / S;
  return v;
}

}  // namespace isingq
