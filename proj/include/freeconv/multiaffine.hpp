#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeconv/roots.hpp"

namespace freeconv {

// Multivariate polynomial of bounded multidegree gamma, sparse exact
// rational coefficients keyed by exponent vectors (lexicographic map order
// keeps every traversal deterministic).
class MultiPoly {
 public:
  explicit MultiPoly(std::vector<int> gamma);
  MultiPoly(std::vector<int> gamma, std::map<std::vector<int>, Rat> terms);

  int nvars() const { return static_cast<int>(gamma_.size()); }
  const std::vector<int>& gamma() const { return gamma_; }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_multiaffine() const;

  Rat coeff(const std::vector<int>& mu) const;
  void set_coeff(const std::vector<int>& mu, const Rat& c);

  // Same variable count and identical nonzero terms (gamma may differ).
  bool same_poly(const MultiPoly& o) const;
  bool operator==(const MultiPoly& o) const {
    return gamma_ == o.gamma_ && terms_ == o.terms_;
  }

 private:
  std::vector<int> gamma_;
  std::map<std::vector<int>, Rat> terms_;
};

MultiPoly mp_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mp_sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly mp_scale(const MultiPoly& p, const Rat& c);
MultiPoly mp_mul(const MultiPoly& p, const MultiPoly& q);

// Mixed partial derivative d^mu; gamma drops by mu (floored at zero).
MultiPoly partial(const MultiPoly& p, const std::vector<int>& mu);

// p(x + a); gamma unchanged.
MultiPoly mshift(const MultiPoly& p, const std::vector<Rat>& a);

Rat meval(const MultiPoly& p, const std::vector<Rat>& a);

// Multivariate convolution at multidegree gamma:
//   (p boxplus^gamma q)(x) = sum_{0 <= mu <= gamma} d^mu p(x) * d^(gamma-mu) q(0),
// with no factorial normalization. Requires p.gamma() == q.gamma()
// (GammaMismatch) and nvars agreement.
MultiPoly boxplus_gamma(const MultiPoly& p, const MultiPoly& q);

// Strong Rayleigh check for multiaffine p: every pairwise difference
// Delta_ij = d_i p * d_j p - p * d_ij p (a polynomial free of x_i, x_j) must
// be nonnegative everywhere. Exact decision for nvars <= 3; for nvars >= 4
// negativity is certified by exact sampling, nonnegativity is Indeterminate.
Trilean strongly_rayleigh(const MultiPoly& p);

struct AbVerdict {
  Trilean verdict = Trilean::yes();
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Is a above the roots of p (a in Ab(p))? Decided by the sign pattern of
// mshift(p, a): membership iff all nonzero coefficients agree in sign.
// Requires strongly_rayleigh(p) certified True (StabilityNotCertified
// otherwise); the decision itself is exact.
AbVerdict above_roots(const MultiPoly& p, const std::vector<Rat>& a);

// Log-derivative Phi_p^i(a) = d_i p(a) / p(a). PoleAtPoint when p(a) = 0.
Rat potential(const MultiPoly& p, int i, const std::vector<Rat>& a);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

struct ReproduceReport {
  std::vector<CheckItem> checks;
  bool all_pass = false;
  MultiPoly conv;
  Rat value_at_point{0};

  ReproduceReport() : conv(std::vector<int>{1, 1, 1}) {}
};

// Rebuilds the published three-variable counterexample to the strengthened
// shift conjecture from scratch and re-derives every exact value around it.
ReproduceReport reproduce_counterexample();

}  // namespace freeconv
