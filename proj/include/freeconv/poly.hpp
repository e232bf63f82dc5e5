#pragma once

#include <utility>
#include <vector>

#include "freeconv/rat.hpp"

namespace freeconv {

// Univariate polynomial with exact rational coefficients, carried inside an
// ambient degree n (the convolution degree). Coefficients are stored in
// ascending order and kept trimmed; the zero polynomial has no coefficients
// and degree() == -1.
class RatPoly {
 public:
  RatPoly() : ambient_(0) {}
  RatPoly(std::vector<Rat> coeffs_ascending, int ambient);

  static RatPoly zero(int ambient) { return RatPoly({}, ambient); }
  static RatPoly constant(const Rat& c, int ambient);
  // x^k within ambient n.
  static RatPoly monomial(int k, int ambient);

  int ambient() const { return ambient_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^i (zero beyond degree).
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  RatPoly with_ambient(int n) const;

  bool operator==(const RatPoly& o) const {
    return ambient_ == o.ambient_ && coeffs_ == o.coeffs_;
  }

 private:
  std::vector<Rat> coeffs_;
  int ambient_;
  static const Rat kZero;
};

// Monic polynomial prod (x - r) over the given roots; ambient = #roots.
RatPoly from_roots(const std::vector<Rat>& roots);

RatPoly add(const RatPoly& p, const RatPoly& q);
RatPoly sub(const RatPoly& p, const RatPoly& q);
RatPoly mul(const RatPoly& p, const RatPoly& q);
RatPoly scale(const RatPoly& p, const Rat& c);
RatPoly negate(const RatPoly& p);

Rat eval(const RatPoly& p, const Rat& x);
int sign_at(const RatPoly& p, const Rat& x);

// k-th derivative, k >= 0. Ambient shrinks by k (floor 0).
RatPoly derivative(const RatPoly& p, int k = 1);

// Argument translation: shift(p, c)(t) = p(t - c), so every root moves up by c.
RatPoly shift(const RatPoly& p, const Rat& c);

// Argument dilation: scale_arg(p, a)(t) = p(t / a), so every root is scaled
// by a. Requires a != 0.
RatPoly scale_arg(const RatPoly& p, const Rat& a);

// Finite free additive convolution at ambient degree n:
//   (p boxplus_n q)(t) = (1/n!) sum_k D^k p(t) * (n-k)! q_{n-k}.
// Requires deg p <= n, deg q <= n, p, q nonzero.
RatPoly boxplus(const RatPoly& p, const RatPoly& q, int n);

// u_alpha(t) = t^n - n*alpha*t^(n-1), the boxplus representer of 1 - alpha*D.
RatPoly u_alpha(int n, const Rat& alpha);

// (1 - alpha*D) p = p - alpha * p'. Ambient preserved.
RatPoly apply_U_alpha(const RatPoly& p, const Rat& alpha);

// Quotient and remainder of p by d over Q (d nonzero).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& d);

// Positive rational c with p/c primitive over Z. Requires p nonzero.
Rat content(const RatPoly& p);

// p / content(p): integer coefficients with gcd 1, sign of p preserved.
RatPoly primitive_part(const RatPoly& p);

// gcd over Q, normalized primitive with positive leading coefficient.
// Requires not both zero.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// p / gcd(p, p'), normalized primitive with positive leading coefficient.
// Same distinct roots as p, all simple. Requires p nonzero.
RatPoly squarefree_part(const RatPoly& p);

// Exact mean of the roots (with multiplicity): -c_{d-1} / (d * c_d).
// Requires degree >= 1.
Rat mean_root(const RatPoly& p);

// Exact sum of the roots (with multiplicity): -c_{d-1} / c_d. Degree >= 1;
// degree 0 gives 0 (empty sum).
Rat root_sum(const RatPoly& p);

}  // namespace freeconv
