#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeconv/poly.hpp"
#include "freeconv/rat.hpp"

namespace freeconv {

// Three-valued certified verdict. Indeterminate carries the interval width
// that blocked the decision; refining eps can only move Indeterminate to a
// definite value, never flip True and False.
class Trilean {
 public:
  static Trilean yes() { return Trilean(State::True, Rat(0)); }
  static Trilean no() { return Trilean(State::False, Rat(0)); }
  static Trilean indeterminate(Rat width) { return Trilean(State::Indet, std::move(width)); }

  bool is_true() const { return state_ == State::True; }
  bool is_false() const { return state_ == State::False; }
  bool is_indeterminate() const { return state_ == State::Indet; }
  const Rat& width() const { return width_; }

  // Conjunction: False dominates, else Indeterminate (max width), else True.
  Trilean operator&&(const Trilean& o) const {
    if (is_false() || o.is_false()) return no();
    if (is_indeterminate() || o.is_indeterminate())
      return indeterminate(std::max(width_, o.width_));
    return yes();
  }

  std::string str() const {
    if (is_true()) return "true";
    if (is_false()) return "false";
    return "indeterminate(" + rat_to_string(width_) + ")";
  }

 private:
  enum class State { True, False, Indet };
  Trilean(State s, Rat w) : state_(s), width_(std::move(w)) {}
  State state_;
  Rat width_;
};

// x <= y over intervals: True when x.hi <= y.lo, False when x.lo > y.hi.
Trilean cmp_le(const IntervalRat& x, const IntervalRat& y);
// x < y: True when x.hi < y.lo, False when x.lo >= y.hi.
Trilean cmp_lt(const IntervalRat& x, const IntervalRat& y);
// |x - y| <= tol.
Trilean cmp_eq_within(const IntervalRat& x, const IntervalRat& y, const Rat& tol);

// One distinct root: enclosure [lo, hi] (a point when lo == hi, which is the
// certified-rational case) with its multiplicity in the original polynomial.
struct RootEnclosure {
  Rat lo;
  Rat hi;
  int mult = 1;

  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  IntervalRat interval() const { return IntervalRat(lo, hi); }
};

// Certified real root vector: distinct enclosures in non-increasing order
// plus the exact coefficient-level root sum, so full partial sums stay exact.
class RootVector {
 public:
  RootVector(std::vector<RootEnclosure> distinct_desc, Rat exact_sum);

  const std::vector<RootEnclosure>& enclosures() const { return distinct_; }
  int count() const { return count_; }
  const Rat& exact_sum() const { return sum_; }
  bool all_exact() const;
  Rat max_width() const;

  // 1-based i-th largest root (with multiplicity) as an interval.
  IntervalRat at(int i) const;
  // Interval for lambda_1 + ... + lambda_k; exact at k == count().
  IntervalRat partial_sum(int k) const;

 private:
  std::vector<RootEnclosure> distinct_;
  Rat sum_;
  int count_;
};

// Strict upper bound 1 + max |c_i / c_d| on root magnitudes. Degree >= 1.
Rat cauchy_bound(const RatPoly& p);

// Number of distinct real roots of p in (lo, hi]. Requires p nonzero,
// lo < hi, and p(lo) != 0, p(hi) != 0 (EndpointIsRoot otherwise).
int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi);

// True iff every complex root of p is real. Degree 0 counts as real-rooted.
bool is_real_rooted(const RatPoly& p);

// Certified roots of a real-rooted p: every rational root is returned as an
// exact point (any multiplicity), irrational roots as enclosures of width
// <= eps. Throws NotRealRooted / ZeroPolynomial / DegreeZero as appropriate.
RootVector root_vector(const RatPoly& p, const Rat& eps);

// lambda^n(p): the degree-d root vector padded to length n with the exact
// root mean. Requires 1 <= d <= n.
RootVector padded_root_vector(const RatPoly& p, int n, const Rat& eps);

// Largest root of p as a single enclosure.
RootEnclosure maxroot(const RatPoly& p, const Rat& eps);

// q interlaces p (q << p): deg q in {deg p, deg p - 1}, positive leading
// coefficients, and lambda_{i+1}(p) <= lambda_i(q) <= lambda_i(p) throughout.
Trilean interlaces(const RatPoly& q, const RatPoly& p, const Rat& eps);

// Inverse Cauchy transform: the unique x > lambda_1(p) with p'(x)/p(x) =
// omega, i.e. the largest root of p - (1/omega) p'. Requires omega > 0,
// deg p >= 1, p real-rooted.
RootEnclosure cauchy_inverse(const RatPoly& p, const Rat& omega, const Rat& eps);

}  // namespace freeconv
