#include "isingq/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isingq {

namespace {

void check_vars(int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) {
    throw std::invalid_argument("grassmann: number of variables out of range");
  }
}

void prune(GrassmannElement& g) {
  for (auto it = g.terms.begin(); it != g.terms.end();) {
    it = (it->second == 0.0) ? g.terms.erase(it) : std::next(it);
  }
}

}  // namespace

int parity_below(BasisMask m, int b) {
  return std::popcount(m & ((BasisMask{1} << b) - 1)) & 1;
}

double reorder_sign(BasisMask a, BasisMask b) {
  // Count pairs (i in a, j in b) with i > j: each such pair is one
  // transposition when merging the two ascending monomials.
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    swaps += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1.0 : 1.0;
}

GrassmannElement scalar_element(int num_vars, double value) {
  check_vars(num_vars);
  GrassmannElement g{num_vars, {}};
  if (value != 0.0) g.terms[0] = value;
  return g;
}

GrassmannElement variable_element(int num_vars, int b) {
  check_vars(num_vars);
  if (b < 0 || b >= num_vars) throw std::invalid_argument("grassmann: bad variable index");
  return GrassmannElement{num_vars, {{BasisMask{1} << b, 1.0}}};
}

GrassmannElement basis_element(int num_vars, BasisMask mask) {
  check_vars(num_vars);
  return GrassmannElement{num_vars, {{mask, 1.0}}};
}

GrassmannElement vacuum_element(int num_vars) {
  check_vars(num_vars);
  return basis_element(num_vars, (BasisMask{1} << num_vars) - 1);
}

GrassmannElement add(const GrassmannElement& g, const GrassmannElement& h) {
  if (g.num_vars != h.num_vars) throw std::invalid_argument("grassmann: mismatched variable sets");
  GrassmannElement out = g;
  for (const auto& [m, c] : h.terms) out.terms[m] += c;
  prune(out);
  return out;
}

GrassmannElement scale(const GrassmannElement& g, double factor) {
  GrassmannElement out{g.num_vars, {}};
  if (factor == 0.0) return out;
  for (const auto& [m, c] : g.terms) out.terms[m] = c * factor;
  return out;
}

GrassmannElement multiply(const GrassmannElement& g, const GrassmannElement& h) {
  if (g.num_vars != h.num_vars) throw std::invalid_argument("grassmann: mismatched variable sets");
  GrassmannElement out{g.num_vars, {}};
  for (const auto& [ma, ca] : g.terms) {
    for (const auto& [mb, cb] : h.terms) {
      if (ma & mb) continue;  // nilpotency
      out.terms[ma | mb] += ca * cb * reorder_sign(ma, mb);
    }
  }
  prune(out);
  return out;
}

GrassmannElement derive(const GrassmannElement& g, int b) {
  if (b < 0 || b >= g.num_vars) throw std::invalid_argument("grassmann: bad variable index");
  const BasisMask bit = BasisMask{1} << b;
  GrassmannElement out{g.num_vars, {}};
  for (const auto& [m, c] : g.terms) {
    if (!(m & bit)) continue;
    const double s = parity_below(m, b) ? -1.0 : 1.0;
    out.terms[m & ~bit] = c * s;
  }
  return out;
}

GrassmannElement multiply_var(int b, const GrassmannElement& g) {
  if (b < 0 || b >= g.num_vars) throw std::invalid_argument("grassmann: bad variable index");
  const BasisMask bit = BasisMask{1} << b;
  GrassmannElement out{g.num_vars, {}};
  for (const auto& [m, c] : g.terms) {
    if (m & bit) continue;
    const double s = parity_below(m, b) ? -1.0 : 1.0;
    out.terms[m | bit] = c * s;
  }
  return out;
}

double berezin_integrate(const GrassmannElement& g) {
  const BasisMask top = (BasisMask{1} << g.num_vars) - 1;
  const auto it = g.terms.find(top);
  return it == g.terms.end() ? 0.0 : it->second;
}

ConjugateBasis conjugate_basis(int num_vars, BasisMask tau) {
  check_vars(num_vars);
  const BasisMask full = (BasisMask{1} << num_vars) - 1;
  const BasisMask sigma = full & ~tau;
  return ConjugateBasis{sigma, reorder_sign(sigma, tau)};
}

GrassmannElement conjugate(const GrassmannElement& g) {
  GrassmannElement out{g.num_vars, {}};
  for (const auto& [m, c] : g.terms) {
    const auto cb = conjugate_basis(g.num_vars, m);
    out.terms[cb.mask] += c * cb.sign;
  }
  prune(out);
  return out;
}

Eigen::VectorXd wavefunction_of(const GrassmannElement& g) {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(std::int64_t{1} << g.num_vars);
  for (const auto& [m, c] : g.terms) q[m] = c;
  return q;
}

GrassmannElement from_wavefunction(const Eigen::VectorXd& q, int num_vars, double norm_tol) {
  check_vars(num_vars);
  if (q.size() != (std::int64_t{1} << num_vars)) {
    throw std::invalid_argument("grassmann: coefficient vector has wrong dimension");
  }
  if (std::abs(q.squaredNorm() - 1.0) > norm_tol) {
    throw std::invalid_argument("grassmann: coefficient vector is not normalized");
  }
  GrassmannElement out{num_vars, {}};
  for (std::int64_t m = 0; m < q.size(); ++m) {
    if (q[m] != 0.0) out.terms[static_cast<BasisMask>(m)] = q[m];
  }
  return out;
}

double norm(const GrassmannElement& g) {
  double s = 0.0;
  for (const auto& [m, c] : g.terms) s += c * c;
  return std::sqrt(s);
}

std::string dump_json(const GrassmannElement& g) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : g.terms) {
    if (!first) os << ",";
    first = false;
    os << "{\"bits\":\"0x" << std::hex << m << std::dec << "\",\"coeff\":" << c << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace isingq
