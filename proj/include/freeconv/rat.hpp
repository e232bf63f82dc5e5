#pragma once

#include <gmpxx.h>

#include <string>

#include "freeconv/error.hpp"

namespace freeconv {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "a/b" or "a"; canonicalizes. Throws ParseError on malformed input.
Rat rat_from_string(const std::string& s);

// Canonical form: "a/b" with gcd(a,b)=1, b>0; integers render as "a".
std::string rat_to_string(const Rat& x);

Rat rat_pow(const Rat& base, int e);

// 2^-k for k >= 0.
Rat rat_pow2_neg(int k);

Rat rat_abs(const Rat& x);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// The unique rational in [lo, hi] with minimal denominator (ties broken by
// minimal |numerator|). Requires lo <= hi.
Rat simplest_in(const Rat& lo, const Rat& hi);

Int factorial(int n);
Int binomial(int n, int k);

// Closed interval [lo, hi]; exact() means lo == hi.
struct IntervalRat {
  Rat lo;
  Rat hi;

  IntervalRat() : lo(0), hi(0) {}
  IntervalRat(Rat point) : lo(point), hi(std::move(point)) {}
  IntervalRat(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) raise(Errc::ParseError, "interval with lo > hi");
  }

  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  IntervalRat operator+(const IntervalRat& o) const { return {lo + o.lo, hi + o.hi}; }
  IntervalRat operator-(const IntervalRat& o) const { return {lo - o.hi, hi - o.lo}; }
  IntervalRat& operator+=(const IntervalRat& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  bool operator==(const IntervalRat& o) const { return lo == o.lo && hi == o.hi; }
};

}  // namespace freeconv
