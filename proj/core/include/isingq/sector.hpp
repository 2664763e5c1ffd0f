#pragma once

// Fixed-particle-number sectors. The basis bitmask follows the Grassmann
// convention: bit b set means psi_b is present in the monomial, i.e. the
// occupation number n_b is 0. A sector with m particles therefore
// collects the masks with popcount B - m.

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace isingq {

// Up to 128 Grassmann generators; enough for the desk-scale geometries.
struct WideMask {
  std::array<std::uint64_t, 2> w{0, 0};

  static WideMask full(int num_bits);
  bool test(int b) const;
  void set(int b);
  void clear(int b);
  int popcount() const;
  int count_below(int b) const;
  auto operator<=>(const WideMask&) const = default;
};

inline constexpr int kMaxWideBits = 128;

// Dense enumeration of the m-particle sector, ordered by combinatorial
// rank (masks ascending). rank() is the inverse of mask(); both are total
// on the sector.
class SectorBasis {
 public:
  SectorBasis(int num_vars, int num_particles, std::int64_t max_dimension = 4'000'000);

  int num_vars() const { return num_vars_; }
  int num_particles() const { return num_particles_; }
  std::int64_t dimension() const { return static_cast<std::int64_t>(masks_.size()); }
  const WideMask& mask(std::int64_t rank) const { return masks_[rank]; }
  std::int64_t rank(const WideMask& mask) const;

  // Occupation n_b of a basis state: 1 when psi_b is absent.
  static int occupation(const WideMask& mask, int b) { return mask.test(b) ? 0 : 1; }

 private:
  int num_vars_;
  int num_particles_;
  std::vector<WideMask> masks_;
};

std::int64_t binomial(int n, int k);

// a^dagger_b: removes psi_b (occupies bit b), shifting the sector m -> m+1.
// a_b: multiplies by psi_b, shifting m -> m-1. Zero results are valid.
Eigen::VectorXd apply_creation(const SectorBasis& from, const SectorBasis& to,
                               const Eigen::VectorXd& state, int b);
Eigen::VectorXd apply_annihilation(const SectorBasis& from, const SectorBasis& to,
                                   const Eigen::VectorXd& state, int b);

// Vacuum designation for particle states.
enum class VacuumKind { Empty, Full };

// One-particle state above a static vacuum: for the empty vacuum the
// amplitudes ride on creation operators, for the full vacuum on
// annihilation operators (one hole). amplitudes must be normalized.
Eigen::VectorXd one_particle_state(const SectorBasis& basis, const Eigen::VectorXd& amplitudes,
                                   VacuumKind vacuum);
Eigen::VectorXd extract_one_particle(const SectorBasis& basis, const Eigen::VectorXd& state,
                                     VacuumKind vacuum);
// Sector that one-particle states above the given vacuum live in.
int one_particle_sector(int num_vars, VacuumKind vacuum);

// Two-particle state above the empty vacuum, (1/sqrt(2)) sum q_{ab} a+_a a+_b |vac>.
// The input matrix is antisymmetrized; a symmetric input is Pauli-excluded
// and throws.
Eigen::VectorXd two_particle_state(const SectorBasis& basis, const Eigen::MatrixXd& amplitudes);
Eigen::MatrixXd extract_two_particle(const SectorBasis& basis, const Eigen::VectorXd& state);

}  // namespace isingq
