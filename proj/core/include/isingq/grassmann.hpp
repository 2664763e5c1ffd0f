#pragma once

// Exact sparse engine for finite real Grassmann algebras and Berezin
// calculus. Basis monomials are encoded as bitmasks: bit b set means the
// generator psi_b appears in the product, and products are always stored
// in canonical ascending-index order. All reordering signs are defined
// relative to that order.
//
// The engine is exact up to floating arithmetic and is used as the
// brute-force oracle for the sector machinery. Full-algebra operations
// are capped at kMaxVariables generators; larger systems must go through
// the fixed-particle-number sector representation.

#include <cstdint>
#include <map>
#include <string>

#include <Eigen/Dense>

namespace isingq {

using BasisMask = std::uint32_t;

inline constexpr int kMaxVariables = 24;

struct GrassmannElement {
  int num_vars = 0;
  // basis mask -> coefficient; zero coefficients are never stored.
  std::map<BasisMask, double> terms;

  bool operator==(const GrassmannElement&) const = default;
};

// Scalar multiple of the empty product.
GrassmannElement scalar_element(int num_vars, double value);
// Single generator psi_b.
GrassmannElement variable_element(int num_vars, int b);
// Basis monomial for a mask, coefficient +1.
GrassmannElement basis_element(int num_vars, BasisMask mask);
// |0> = psi_0 psi_1 ... psi_{B-1}, sign +1 by convention.
GrassmannElement vacuum_element(int num_vars);

GrassmannElement add(const GrassmannElement& g, const GrassmannElement& h);
GrassmannElement scale(const GrassmannElement& g, double factor);
// Graded anticommuting product. Throws std::invalid_argument if the
// operands live over different variable sets.
GrassmannElement multiply(const GrassmannElement& g, const GrassmannElement& h);
// Left derivative d/dpsi_b.
GrassmannElement derive(const GrassmannElement& g, int b);
// Left multiplication psi_b * g.
GrassmannElement multiply_var(int b, const GrassmannElement& g);

// Coefficient of the top-grade monomial |0>.
double berezin_integrate(const GrassmannElement& g);

// Conjugate basis element: the complement monomial with the unique sign
// such that conj * basis = +|0>.
struct ConjugateBasis {
  BasisMask mask;
  double sign;
};
ConjugateBasis conjugate_basis(int num_vars, BasisMask tau);

// g~ = sum_tau q_tau g~_tau for g = sum_tau q_tau g_tau.
GrassmannElement conjugate(const GrassmannElement& g);

// Coefficient extraction over the full 2^B basis (index = mask) and its
// inverse. The inverse requires a normalized coefficient vector.
Eigen::VectorXd wavefunction_of(const GrassmannElement& g);
GrassmannElement from_wavefunction(const Eigen::VectorXd& q, int num_vars,
                                   double norm_tol = 1e-9);

double norm(const GrassmannElement& g);

// Parity helpers used throughout the sector code as well.
// Number of set bits of m strictly below position b, mod 2.
int parity_below(BasisMask m, int b);
// Sign of reordering the concatenation (a, b) of two disjoint canonical
// monomials into one canonical monomial.
double reorder_sign(BasisMask a, BasisMask b);

// Debug dump: JSON list of {bits: hex string, coeff: decimal}.
std::string dump_json(const GrassmannElement& g);

}  // namespace isingq
