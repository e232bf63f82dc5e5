#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freeconv/roots.hpp"

namespace freeconv {

// Real vector with certified interval entries. exact_total, when present,
// pins the full sum so the length-n majorization equality is decided exactly.
struct Vec {
  std::vector<IntervalRat> entries;
  std::optional<Rat> exact_total;

  static Vec from_rats(const std::vector<Rat>& xs);
  static Vec from_root_vector(const RootVector& rv);
  int size() const { return static_cast<int>(entries.size()); }
};

// Entrywise sum (of the two sorted spectra in the verifier flows).
Vec vec_add(const Vec& x, const Vec& y);

// Does x majorize y (y majorized by x): every top-k partial sum of y is at
// most that of x, with equality of the full sums. Sound without assuming the
// entries are pre-sorted (partial sums are bounded by the k largest
// endpoints on each side).
Trilean majorizes(const Vec& x, const Vec& y, const Rat& eps);

// One pinch step at positions j != k (1-based) with x_j >= x_k:
// x_j -> x_j - alpha, x_k -> x_k + alpha for 0 <= alpha <= (x_j - x_k)/2.
std::vector<Rat> pinch(const std::vector<Rat>& x, int j, int k, const Rat& alpha);

// Index tuple over [n], 1-based strictly increasing parts. Horn triples
// leave L empty; 4-tuples use all four parts.
struct IndexTuple {
  int n = 0;
  std::vector<int> I, L, J, K;

  bool operator==(const IndexTuple& o) const {
    return n == o.n && I == o.I && L == o.L && J == o.J && K == o.K;
  }
  bool operator<(const IndexTuple& o) const;
};

// Throws IndexOutOfRange unless every part is nonempty (L may be empty when
// require_l is false), strictly increasing, and within [1, n].
void validate_tuple(const IndexTuple& t, bool require_l);

// All Horn triples (I, J, K) of size r over [n], n <= 6: the triples for
// which sum_{i in I} lambda_i(A+B) <= sum_{j in J} lambda_j(A) +
// sum_{k in K} lambda_k(B) holds for all Hermitian A, B. Computed as the
// weakening closure of the Horn recursion; sorted lexicographically.
std::vector<IndexTuple> horn_triples(int n, int r);

// Exact characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
// recurrence. A square, size <= 6.
RatPoly char_poly(const std::vector<std::vector<Rat>>& a);

struct FalsifyOutcome {
  bool violated = false;
  std::uint64_t trial = 0;
  int trials_run = 0;
  std::vector<std::vector<Rat>> a, b;
  Rat lhs_lo{0};
  Rat rhs_hi{0};
};

// Randomized falsification oracle for a candidate triple: samples symmetric
// rational matrix pairs (floating screen, exact certification of any
// apparent violation). Returns the first certified violating pair, if any.
FalsifyOutcome hermitian_falsify(const IndexTuple& t, int trials, std::uint64_t seed);

// Shared-sample survival scan: `trials` sampled pairs per call, every tuple
// checked against every sample. Returns the index of the first certified
// violated tuple, or nullopt when all survive.
std::optional<std::size_t> horn_survival_scan(int n, const std::vector<IndexTuple>& tuples,
                                              int trials, std::uint64_t seed);

}  // namespace freeconv
