#include "isingq/sector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace isingq {

WideMask WideMask::full(int num_bits) {
  WideMask m;
  for (int i = 0; i < 2; ++i) {
    const int bits = std::clamp(num_bits - 64 * i, 0, 64);
    if (bits == 64) {
      m.w[i] = ~std::uint64_t{0};
    } else if (bits > 0) {
      m.w[i] = (std::uint64_t{1} << bits) - 1;
    }
  }
  return m;
}

bool WideMask::test(int b) const { return (w[b >> 6] >> (b & 63)) & 1; }
void WideMask::set(int b) { w[b >> 6] |= std::uint64_t{1} << (b & 63); }
void WideMask::clear(int b) { w[b >> 6] &= ~(std::uint64_t{1} << (b & 63)); }

int WideMask::popcount() const { return std::popcount(w[0]) + std::popcount(w[1]); }

int WideMask::count_below(int b) const {
  const int word = b >> 6;
  const int bit = b & 63;
  int count = bit ? std::popcount(w[word] << (64 - bit)) : 0;
  for (int i = 0; i < word; ++i) count += std::popcount(w[i]);
  return count;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result < 0 || result > (std::int64_t{1} << 62)) {
      throw std::overflow_error("binomial: overflow");
    }
  }
  return result;
}

SectorBasis::SectorBasis(int num_vars, int num_particles, std::int64_t max_dimension)
    : num_vars_(num_vars), num_particles_(num_particles) {
  if (num_vars < 0 || num_vars > kMaxWideBits) {
    throw std::invalid_argument("SectorBasis: variable count out of range");
  }
  if (num_particles < 0 || num_particles > num_vars) {
    throw std::invalid_argument("SectorBasis: particle count out of range");
  }
  const int set_bits = num_vars - num_particles;  // psi present <=> unoccupied
  const std::int64_t dim = binomial(num_vars, set_bits);
  if (dim > max_dimension) {
    throw std::length_error("SectorBasis: sector dimension " + std::to_string(dim) +
                            " exceeds the memory budget");
  }
  masks_.reserve(dim);
  // Lexicographically first combination: lowest set_bits bits.
  std::vector<int> pos(set_bits);
  for (int i = 0; i < set_bits; ++i) pos[i] = i;
  while (true) {
    WideMask m;
    for (int p : pos) m.set(p);
    masks_.push_back(m);
    // next combination of positions
    int i = set_bits - 1;
    while (i >= 0 && pos[i] == num_vars - set_bits + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < set_bits; ++j) pos[j] = pos[j - 1] + 1;
    if (set_bits == 0) break;
  }
  std::sort(masks_.begin(), masks_.end());
}

std::int64_t SectorBasis::rank(const WideMask& mask) const {
  const auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) {
    throw std::invalid_argument("SectorBasis: mask not in sector");
  }
  return it - masks_.begin();
}

namespace {

void check_shift(const SectorBasis& from, const SectorBasis& to, int delta, const char* op) {
  if (from.num_vars() != to.num_vars() || to.num_particles() != from.num_particles() + delta) {
    throw std::invalid_argument(std::string(op) + ": sector mismatch");
  }
}

}  // namespace

Eigen::VectorXd apply_creation(const SectorBasis& from, const SectorBasis& to,
                               const Eigen::VectorXd& state, int b) {
  check_shift(from, to, +1, "apply_creation");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(to.dimension());
  for (std::int64_t r = 0; r < from.dimension(); ++r) {
    if (state[r] == 0.0) continue;
    WideMask m = from.mask(r);
    if (!m.test(b)) continue;  // psi_b absent: already occupied
    const double sign = (m.count_below(b) & 1) ? -1.0 : 1.0;
    m.clear(b);
    out[to.rank(m)] += sign * state[r];
  }
  return out;
}

Eigen::VectorXd apply_annihilation(const SectorBasis& from, const SectorBasis& to,
                                   const Eigen::VectorXd& state, int b) {
  check_shift(from, to, -1, "apply_annihilation");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(to.dimension());
  for (std::int64_t r = 0; r < from.dimension(); ++r) {
    if (state[r] == 0.0) continue;
    WideMask m = from.mask(r);
    if (m.test(b)) continue;  // psi_b psi_b = 0
    const double sign = (m.count_below(b) & 1) ? -1.0 : 1.0;
    m.set(b);
    out[to.rank(m)] += sign * state[r];
  }
  return out;
}

int one_particle_sector(int num_vars, VacuumKind vacuum) {
  return vacuum == VacuumKind::Empty ? 1 : num_vars - 1;
}

Eigen::VectorXd one_particle_state(const SectorBasis& basis, const Eigen::VectorXd& amplitudes,
                                   VacuumKind vacuum) {
  const int B = basis.num_vars();
  if (amplitudes.size() != B) {
    throw std::invalid_argument("one_particle_state: need one amplitude per variable");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-9) {
    throw std::invalid_argument("one_particle_state: amplitudes not normalized");
  }
  if (basis.num_particles() != one_particle_sector(B, vacuum)) {
    throw std::invalid_argument("one_particle_state: wrong sector for this vacuum");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.dimension());
  for (int b = 0; b < B; ++b) {
    if (vacuum == VacuumKind::Empty) {
      // a+_b |0> = d/dpsi_b (psi_0...psi_{B-1}) = (-1)^b * (product without psi_b)
      WideMask m = WideMask::full(B);
      m.clear(b);
      out[basis.rank(m)] = ((b & 1) ? -1.0 : 1.0) * amplitudes[b];
    } else {
      // hole on the fully occupied vacuum g_0 = 1: a_b g_0 = psi_b
      WideMask m;
      m.set(b);
      out[basis.rank(m)] = amplitudes[b];
    }
  }
  return out;
}

Eigen::VectorXd extract_one_particle(const SectorBasis& basis, const Eigen::VectorXd& state,
                                     VacuumKind vacuum) {
  const int B = basis.num_vars();
  Eigen::VectorXd q(B);
  for (int b = 0; b < B; ++b) {
    if (vacuum == VacuumKind::Empty) {
      WideMask m = WideMask::full(B);
      m.clear(b);
      q[b] = ((b & 1) ? -1.0 : 1.0) * state[basis.rank(m)];
    } else {
      WideMask m;
      m.set(b);
      q[b] = state[basis.rank(m)];
    }
  }
  return q;
}

Eigen::VectorXd two_particle_state(const SectorBasis& basis, const Eigen::MatrixXd& amplitudes) {
  const int B = basis.num_vars();
  if (amplitudes.rows() != B || amplitudes.cols() != B) {
    throw std::invalid_argument("two_particle_state: amplitude matrix has wrong shape");
  }
  if (basis.num_particles() != 2) {
    throw std::invalid_argument("two_particle_state: need the two-particle sector");
  }
  Eigen::MatrixXd anti = 0.5 * (amplitudes - amplitudes.transpose());
  const double n = anti.norm();
  if (n < 1e-12) {
    throw std::invalid_argument("two_particle_state: Pauli-excluded input");
  }
  anti /= n;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.dimension());
  const WideMask vac = WideMask::full(B);
  for (int a = 0; a < B; ++a) {
    for (int b = a + 1; b < B; ++b) {
      // a+_a a+_b |0>: remove psi_b from |0>, then psi_a.
      WideMask m = vac;
      double sign = (m.count_below(b) & 1) ? -1.0 : 1.0;
      m.clear(b);
      sign *= (m.count_below(a) & 1) ? -1.0 : 1.0;
      m.clear(a);
      // (1/sqrt(2)) * (q_ab a+a a+b + q_ba a+b a+a) = sqrt(2) q_ab a+a a+b
      out[basis.rank(m)] += std::sqrt(2.0) * anti(a, b) * sign;
    }
  }
  return out;
}

Eigen::MatrixXd extract_two_particle(const SectorBasis& basis, const Eigen::VectorXd& state) {
  const int B = basis.num_vars();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(B, B);
  const WideMask vac = WideMask::full(B);
  for (int a = 0; a < B; ++a) {
    for (int b = a + 1; b < B; ++b) {
      WideMask m = vac;
      double sign = (m.count_below(b) & 1) ? -1.0 : 1.0;
      m.clear(b);
      sign *= (m.count_below(a) & 1) ? -1.0 : 1.0;
      m.clear(a);
      const double v = sign * state[basis.rank(m)] / std::sqrt(2.0);
      q(a, b) = v;
      q(b, a) = -v;
    }
  }
  return q;
}

}  // namespace isingq
