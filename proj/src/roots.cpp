#include "freeconv/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace freeconv {

Trilean cmp_le(const IntervalRat& x, const IntervalRat& y) {
  if (x.hi <= y.lo) return Trilean::yes();
  if (x.lo > y.hi) return Trilean::no();
  return Trilean::indeterminate(x.width() + y.width());
}

Trilean cmp_lt(const IntervalRat& x, const IntervalRat& y) {
  if (x.hi < y.lo) return Trilean::yes();
  if (x.lo >= y.hi) return Trilean::no();
  return Trilean::indeterminate(x.width() + y.width());
}

Trilean cmp_eq_within(const IntervalRat& x, const IntervalRat& y, const Rat& tol) {
  IntervalRat d = x - y;
  if (-tol <= d.lo && d.hi <= tol) return Trilean::yes();
  if (d.lo > tol || d.hi < -tol) return Trilean::no();
  return Trilean::indeterminate(d.width());
}

namespace {

// Sturm chain of p, each remainder normalized by its (positive) content.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{primitive_part(p)};
  RatPoly d = derivative(p, 1);
  if (d.is_zero()) return chain;
  chain.push_back(primitive_part(d));
  while (chain.back().degree() >= 1) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(primitive_part(negate(r)));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const RatPoly& f : chain) {
    int s = sign_at(f, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

struct Isolated {
  Rat lo;
  Rat hi;
  bool exact = false;
  Rat point;

  Rat key() const { return exact ? point : lo; }
};

// Certified root isolation and refinement for one polynomial. Works on the
// primitive squarefree part; rational roots are always pinned exactly (the
// rational root theorem bounds candidate denominators by the leading
// coefficient, so bisection below 1/L^2 makes the simplest-rational test a
// decision procedure).
class RootFinder {
 public:
  explicit RootFinder(const RatPoly& p) : p_(p), g_(squarefree_part(p)) {
    lead_sq_ = g_.leading().get_num() * g_.leading().get_num();
    chain_ = sturm_chain(g_);
  }

  const RatPoly& sf() const { return g_; }

  std::vector<Isolated> isolate() {
    std::vector<Isolated> out;
    if (g_.degree() == 0) return out;
    Rat b = cauchy_bound(g_);
    struct Node {
      Rat lo, hi;
      int vlo, vhi;
    };
    std::vector<Node> stack{{-b, b, sign_variations(chain_, -b), sign_variations(chain_, b)}};
    while (!stack.empty()) {
      Node nd = stack.back();
      stack.pop_back();
      int cnt = nd.vlo - nd.vhi;
      if (cnt <= 0) continue;
      if (cnt == 1) {
        out.push_back({nd.lo, nd.hi, false, Rat(0)});
        continue;
      }
      Rat m = (nd.lo + nd.hi) / 2;
      if (sign_at(g_, m) != 0) {
        int vm = sign_variations(chain_, m);
        stack.push_back({nd.lo, m, nd.vlo, vm});
        stack.push_back({m, nd.hi, vm, nd.vhi});
        continue;
      }
      // Exact root at the midpoint: carve out a punctured neighbourhood.
      Rat delta = (nd.hi - nd.lo) / 4;
      while (true) {
        while (sign_at(g_, m - delta) == 0 || sign_at(g_, m + delta) == 0) delta /= 2;
        int vml = sign_variations(chain_, m - delta);
        int vmr = sign_variations(chain_, m + delta);
        if (vml - vmr == 1) {
          out.push_back({m, m, true, m});
          stack.push_back({nd.lo, m - delta, nd.vlo, vml});
          stack.push_back({m + delta, nd.hi, vmr, nd.vhi});
          break;
        }
        delta /= 2;
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Isolated& a, const Isolated& b) { return a.key() < b.key(); });
    return out;
  }

  // Shrink to width <= eps, then keep bisecting (with simplest-rational
  // candidate tests) until the root is pinned exactly or certified
  // irrational (width * L^2 < 1 and the sole candidate fails).
  void refine(Isolated& r, const Rat& eps) {
    if (r.exact) return;
    int sl = sign_at(g_, r.lo);
    int steps = 0;
    while (true) {
      Rat w = r.hi - r.lo;
      bool at_eps = w <= eps;
      if (at_eps || steps % 4 == 0) {
        Rat cand = simplest_in(r.lo, r.hi);
        if (sign_at(g_, cand) == 0) {
          r = {cand, cand, true, cand};
          return;
        }
        if (at_eps && w * Rat(lead_sq_) < 1) return;
      }
      Rat m = (r.lo + r.hi) / 2;
      int s = sign_at(g_, m);
      if (s == 0) {
        r = {m, m, true, m};
        return;
      }
      if (s == sl)
        r.lo = m;
      else
        r.hi = m;
      ++steps;
    }
  }

  int multiplicity(const Isolated& r) {
    if (g_.degree() == p_.degree()) return 1;
    build_tower();
    int m = 1;
    for (std::size_t i = 1; i < tower_.size(); ++i) {
      const RatPoly& t = tower_[i];
      if (r.exact) {
        if (sign_at(t, r.point) != 0) break;
        ++m;
      } else {
        std::vector<RatPoly> ch = sturm_chain(t);
        int cnt = sign_variations(ch, r.lo) - sign_variations(ch, r.hi);
        if (cnt == 0) break;
        ++m;
      }
    }
    return m;
  }

 private:
  void build_tower() {
    if (!tower_.empty()) return;
    tower_.push_back(p_);
    while (tower_.back().degree() >= 1) {
      RatPoly next = poly_gcd(tower_.back(), derivative(tower_.back(), 1));
      if (next.degree() < 1) break;
      tower_.push_back(next);
    }
  }

  RatPoly p_;
  RatPoly g_;
  Int lead_sq_;
  std::vector<RatPoly> chain_;
  std::vector<RatPoly> tower_;
};

RootEnclosure to_enclosure(const Isolated& r, int mult) {
  if (r.exact) return {r.point, r.point, mult};
  return {r.lo, r.hi, mult};
}

}  // namespace

RootVector::RootVector(std::vector<RootEnclosure> distinct_desc, Rat exact_sum)
    : distinct_(std::move(distinct_desc)), sum_(std::move(exact_sum)), count_(0) {
  for (std::size_t i = 0; i < distinct_.size(); ++i) {
    const RootEnclosure& e = distinct_[i];
    if (e.lo > e.hi || e.mult < 1) raise(Errc::ParseError, "malformed root enclosure");
    if (i > 0 && distinct_[i - 1].lo < e.hi)
      raise(Errc::ParseError, "root enclosures not in non-increasing order");
    count_ += e.mult;
  }
}

bool RootVector::all_exact() const {
  return std::all_of(distinct_.begin(), distinct_.end(),
                     [](const RootEnclosure& e) { return e.exact(); });
}

Rat RootVector::max_width() const {
  Rat w(0);
  for (const RootEnclosure& e : distinct_) w = std::max(w, e.width());
  return w;
}

IntervalRat RootVector::at(int i) const {
  if (i < 1 || i > count_) raise(Errc::IndexOutOfRange, "root index " + std::to_string(i));
  int seen = 0;
  for (const RootEnclosure& e : distinct_) {
    seen += e.mult;
    if (i <= seen) return e.interval();
  }
  raise(Errc::IndexOutOfRange, "root index walk overflow");
}

IntervalRat RootVector::partial_sum(int k) const {
  if (k < 0 || k > count_) raise(Errc::IndexOutOfRange, "partial sum length " + std::to_string(k));
  if (k == count_) return IntervalRat(sum_);
  IntervalRat acc;
  int left = k;
  for (const RootEnclosure& e : distinct_) {
    if (left <= 0) break;
    int take = std::min(left, e.mult);
    acc += IntervalRat(e.lo * take, e.hi * take);
    left -= take;
  }
  return acc;
}

Rat cauchy_bound(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "cauchy bound of zero polynomial");
  int d = p.degree();
  if (d < 1) raise(Errc::DegreeZero, "cauchy bound of a constant");
  Rat m(0);
  for (int i = 0; i < d; ++i) m = std::max(m, rat_abs(p.coeff(i)));
  return 1 + m / rat_abs(p.leading());
}

int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "sturm count on zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count requires lo < hi");
  if (eval(p, lo) == 0) raise(Errc::EndpointIsRoot, "p(lo) = 0 at lo = " + rat_to_string(lo));
  if (eval(p, hi) == 0) raise(Errc::EndpointIsRoot, "p(hi) = 0 at hi = " + rat_to_string(hi));
  std::vector<RatPoly> chain = sturm_chain(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

bool is_real_rooted(const RatPoly& p) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "real-rootedness of zero polynomial");
  RatPoly g = squarefree_part(p);
  if (g.degree() == 0) return true;
  Rat b = cauchy_bound(g);
  std::vector<RatPoly> chain = sturm_chain(g);
  return sign_variations(chain, -b) - sign_variations(chain, b) == g.degree();
}

RootVector root_vector(const RatPoly& p, const Rat& eps) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "roots of zero polynomial");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (p.degree() == 0) return RootVector({}, Rat(0));
  RootFinder finder(p);
  std::vector<Isolated> iso = finder.isolate();
  if (static_cast<int>(iso.size()) != finder.sf().degree())
    raise(Errc::NotRealRooted, "only " + std::to_string(iso.size()) + " real roots of degree-" +
                                   std::to_string(finder.sf().degree()) + " squarefree part");
  std::vector<RootEnclosure> enc;
  int total = 0;
  for (auto it = iso.rbegin(); it != iso.rend(); ++it) {
    finder.refine(*it, eps);
    int m = finder.multiplicity(*it);
    total += m;
    enc.push_back(to_enclosure(*it, m));
  }
  if (total != p.degree())
    throw std::logic_error("multiplicity sum mismatch in root_vector");
  return RootVector(std::move(enc), root_sum(p));
}

RootVector padded_root_vector(const RatPoly& p, int n, const Rat& eps) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "padded roots of zero polynomial");
  int d = p.degree();
  if (d < 1) raise(Errc::DegreeZero, "padded roots of a constant");
  if (d > n) raise(Errc::DegreeExceedsAmbient, "degree exceeds padding length");
  RootVector rv = root_vector(p, eps);
  if (d == n) return rv;
  Rat m = mean_root(p);
  int pad = n - d;
  std::vector<RootEnclosure> enc = rv.enclosures();
  // Make sure no interval strictly contains the mean, so insertion keeps the
  // descending order certified; one extra sign bisection at m suffices.
  RatPoly g = squarefree_part(p);
  for (RootEnclosure& e : enc) {
    if (!e.exact() && e.lo < m && m < e.hi) {
      if (sign_at(g, m) == sign_at(g, e.lo))
        e.lo = m;
      else
        e.hi = m;
    }
  }
  std::vector<RootEnclosure> out;
  bool placed = false;
  for (const RootEnclosure& e : enc) {
    if (!placed && e.exact() && e.lo == m) {
      RootEnclosure merged = e;
      merged.mult += pad;
      out.push_back(merged);
      placed = true;
      continue;
    }
    if (!placed && e.hi < m) {
      out.push_back({m, m, pad});
      placed = true;
    }
    out.push_back(e);
  }
  if (!placed) out.push_back({m, m, pad});
  return RootVector(std::move(out), rv.exact_sum() + Rat(pad) * m);
}

RootEnclosure maxroot(const RatPoly& p, const Rat& eps) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "maxroot of zero polynomial");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (p.degree() < 1) raise(Errc::DegreeZero, "maxroot of a constant");
  RootFinder finder(p);
  std::vector<Isolated> iso = finder.isolate();
  if (static_cast<int>(iso.size()) != finder.sf().degree())
    raise(Errc::NotRealRooted, "maxroot of a non-real-rooted polynomial");
  Isolated top = iso.back();
  finder.refine(top, eps);
  return to_enclosure(top, finder.multiplicity(top));
}

Trilean interlaces(const RatPoly& q, const RatPoly& p, const Rat& eps) {
  if (p.is_zero() || q.is_zero()) raise(Errc::ZeroPolynomial, "interlacing with zero polynomial");
  int dp = p.degree(), dq = q.degree();
  if (dq != dp && dq != dp - 1)
    raise(Errc::DegreeMismatch, "interlacing needs deg q in {deg p, deg p - 1}");
  if (p.leading() <= 0 || q.leading() <= 0)
    throw std::invalid_argument("interlacing requires positive leading coefficients");
  if (dp < 1) return Trilean::yes();
  RootVector rp = root_vector(p, eps);
  RootVector rq = dq >= 1 ? root_vector(q, eps) : RootVector({}, Rat(0));
  Trilean acc = Trilean::yes();
  for (int i = 1; i <= dq; ++i) acc = acc && cmp_le(rq.at(i), rp.at(i));
  for (int i = 1; i <= dp - 1; ++i) acc = acc && cmp_le(rp.at(i + 1), rq.at(i));
  return acc;
}

RootEnclosure cauchy_inverse(const RatPoly& p, const Rat& omega, const Rat& eps) {
  if (omega <= 0) raise(Errc::NonpositiveOmega, "omega = " + rat_to_string(omega));
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "cauchy inverse of zero polynomial");
  if (p.degree() < 1) raise(Errc::DegreeZero, "cauchy inverse of a constant");
  RatPoly q = sub(p, scale(derivative(p, 1).with_ambient(p.ambient()), 1 / omega));
  return maxroot(q, eps);
}

}  // namespace freeconv
