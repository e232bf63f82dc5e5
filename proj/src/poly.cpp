#include "freeconv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeconv {

const Rat RatPoly::kZero = Rat(0);

RatPoly::RatPoly(std::vector<Rat> coeffs_ascending, int ambient)
    : coeffs_(std::move(coeffs_ascending)), ambient_(ambient) {
  if (ambient_ < 0) throw std::invalid_argument("negative ambient degree");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (degree() > ambient_)
    raise(Errc::DegreeExceedsAmbient,
          "degree " + std::to_string(degree()) + " exceeds ambient " + std::to_string(ambient_));
}

RatPoly RatPoly::constant(const Rat& c, int ambient) { return RatPoly({c}, ambient); }

RatPoly RatPoly::monomial(int k, int ambient) {
  std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
  c.back() = 1;
  return RatPoly(std::move(c), ambient);
}

const Rat& RatPoly::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  if (i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RatPoly::leading() const {
  if (is_zero()) raise(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

RatPoly RatPoly::with_ambient(int n) const { return RatPoly(coeffs_, n); }

RatPoly from_roots(const std::vector<Rat>& roots) {
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : roots) {
    c.push_back(Rat(0));
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return RatPoly(std::move(c), static_cast<int>(roots.size()));
}

RatPoly add(const RatPoly& p, const RatPoly& q) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.degree(), q.degree()) + 1), Rat(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] += p.coeff(i);
  for (int i = 0; i <= q.degree(); ++i) c[static_cast<std::size_t>(i)] += q.coeff(i);
  return RatPoly(std::move(c), std::max(p.ambient(), q.ambient()));
}

RatPoly sub(const RatPoly& p, const RatPoly& q) { return add(p, negate(q)); }

RatPoly negate(const RatPoly& p) {
  std::vector<Rat> c = p.coeffs();
  for (Rat& x : c) x = -x;
  return RatPoly(std::move(c), p.ambient());
}

RatPoly mul(const RatPoly& p, const RatPoly& q) {
  int amb = p.ambient() + q.ambient();
  if (p.is_zero() || q.is_zero()) return RatPoly::zero(amb);
  std::vector<Rat> c(static_cast<std::size_t>(p.degree() + q.degree() + 1), Rat(0));
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j)
      c[static_cast<std::size_t>(i + j)] += p.coeff(i) * q.coeff(j);
  return RatPoly(std::move(c), amb);
}

RatPoly scale(const RatPoly& p, const Rat& c) {
  if (c == 0) return RatPoly::zero(p.ambient());
  std::vector<Rat> v = p.coeffs();
  for (Rat& x : v) x *= c;
  return RatPoly(std::move(v), p.ambient());
}

Rat eval(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
  return acc;
}

int sign_at(const RatPoly& p, const Rat& x) { return sgn(eval(p, x)); }

RatPoly derivative(const RatPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  int amb = std::max(p.ambient() - k, 0);
  if (p.degree() < k) return RatPoly::zero(amb);
  std::vector<Rat> c;
  c.reserve(static_cast<std::size_t>(p.degree() - k + 1));
  for (int i = k; i <= p.degree(); ++i) {
    Int f = factorial(i) / factorial(i - k);
    c.push_back(p.coeff(i) * Rat(f));
  }
  return RatPoly(std::move(c), amb);
}

RatPoly shift(const RatPoly& p, const Rat& c) {
  if (p.is_zero() || c == 0) return p;
  // p(t - c) via Horner: fold from the top, multiplying by (t - c) each step.
  std::vector<Rat> acc{p.leading()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc.push_back(Rat(0));
    for (std::size_t j = acc.size() - 1; j >= 1; --j) acc[j] = acc[j - 1] - c * acc[j];
    acc[0] = -c * acc[0] + p.coeff(i);
  }
  return RatPoly(std::move(acc), p.ambient());
}

RatPoly scale_arg(const RatPoly& p, const Rat& a) {
  if (a == 0) throw std::invalid_argument("scale_arg by zero");
  std::vector<Rat> c = p.coeffs();
  Rat inv = 1, ia = 1 / a;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= inv;
    inv *= ia;
  }
  return RatPoly(std::move(c), p.ambient());
}

RatPoly boxplus(const RatPoly& p, const RatPoly& q, int n) {
  if (n < 0) throw std::invalid_argument("negative convolution degree");
  if (p.is_zero() || q.is_zero()) raise(Errc::ZeroPolynomial, "boxplus of zero polynomial");
  if (p.degree() > n || q.degree() > n)
    raise(Errc::DegreeExceedsAmbient, "boxplus argument degree exceeds n");
  RatPoly acc = RatPoly::zero(n);
  RatPoly dkp = p.with_ambient(n);
  for (int k = 0; k <= n; ++k) {
    const Rat& qc = q.coeff(n - k);
    if (qc != 0) {
      Rat w = Rat(factorial(n - k)) * qc;
      acc = add(acc, scale(dkp, w));
    }
    if (k < n) dkp = derivative(dkp, 1).with_ambient(n);
  }
  return scale(acc, Rat(1) / Rat(factorial(n)));
}

RatPoly u_alpha(int n, const Rat& alpha) {
  if (n < 1) throw std::invalid_argument("u_alpha needs n >= 1");
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  c[static_cast<std::size_t>(n)] = 1;
  c[static_cast<std::size_t>(n - 1)] = -Rat(n) * alpha;
  return RatPoly(std::move(c), n);
}

RatPoly apply_U_alpha(const RatPoly& p, const Rat& alpha) {
  return sub(p, scale(derivative(p, 1).with_ambient(p.ambient()), alpha));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& d) {
  if (d.is_zero()) raise(Errc::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rat> rem = p.coeffs();
  int dd = d.degree();
  if (p.degree() < dd) return {RatPoly::zero(p.ambient()), p};
  std::vector<Rat> quo(static_cast<std::size_t>(p.degree() - dd + 1), Rat(0));
  const Rat& lead = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    Rat f = rem[static_cast<std::size_t>(i)] / lead;
    if (f != 0) {
      quo[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.coeff(j);
    }
    rem[static_cast<std::size_t>(i)] = 0;
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quo), p.ambient()), RatPoly(std::move(rem), p.ambient())};
}

Rat content(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "content of zero polynomial");
  Int g(0), l(1);
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    Int num = c.get_num(), den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rat r(g, l);
  r.canonicalize();
  return r;
}

RatPoly primitive_part(const RatPoly& p) { return scale(p, 1 / content(p)); }

namespace {
RatPoly primitive_positive(const RatPoly& p) {
  RatPoly q = primitive_part(p);
  return q.leading() < 0 ? negate(q) : q;
}
}  // namespace

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() && b.is_zero()) raise(Errc::ZeroPolynomial, "gcd of zero polynomials");
  int amb = std::min(a.is_zero() ? b.ambient() : a.ambient(),
                     b.is_zero() ? a.ambient() : b.ambient());
  if (a.is_zero()) return primitive_positive(b).with_ambient(amb);
  if (b.is_zero()) return primitive_positive(a).with_ambient(amb);
  RatPoly x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = y;
    y = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_positive(x).with_ambient(amb);
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "squarefree part of zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(Rat(1), p.ambient());
  RatPoly g = poly_gcd(p, derivative(p, 1));
  RatPoly sf = divmod(p, g).first;
  return primitive_positive(sf).with_ambient(p.ambient());
}

Rat mean_root(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "mean root of zero polynomial");
  int d = p.degree();
  if (d < 1) raise(Errc::DegreeZero, "mean root of a constant");
  return -p.coeff(d - 1) / (Rat(d) * p.coeff(d));
}

Rat root_sum(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "root sum of zero polynomial");
  int d = p.degree();
  if (d == 0) return Rat(0);
  return -p.coeff(d - 1) / p.coeff(d);
}

}  // namespace freeconv
