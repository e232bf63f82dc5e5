#include "freeconv/majorization.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "freeconv/rng.hpp"

namespace freeconv {

Vec Vec::from_rats(const std::vector<Rat>& xs) {
  Vec v;
  Rat total(0);
  for (const Rat& x : xs) {
    v.entries.emplace_back(x);
    total += x;
  }
  v.exact_total = total;
  return v;
}

Vec Vec::from_root_vector(const RootVector& rv) {
  Vec v;
  for (const RootEnclosure& e : rv.enclosures())
    for (int m = 0; m < e.mult; ++m) v.entries.push_back(e.interval());
  v.exact_total = rv.exact_sum();
  return v;
}

Vec vec_add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) raise(Errc::LengthMismatch, "vector sum of unequal lengths");
  Vec v;
  for (int i = 0; i < x.size(); ++i)
    v.entries.push_back(x.entries[static_cast<std::size_t>(i)] +
                        y.entries[static_cast<std::size_t>(i)]);
  if (x.exact_total && y.exact_total) v.exact_total = *x.exact_total + *y.exact_total;
  return v;
}

namespace {

// Prefix sums of the k largest lower/upper endpoints: a sound sandwich for
// the top-k partial sums of the underlying real vector.
struct PartialBounds {
  std::vector<Rat> lo_prefix, hi_prefix;

  explicit PartialBounds(const Vec& v) {
    std::vector<Rat> lo, hi;
    for (const IntervalRat& e : v.entries) {
      lo.push_back(e.lo);
      hi.push_back(e.hi);
    }
    std::sort(lo.rbegin(), lo.rend());
    std::sort(hi.rbegin(), hi.rend());
    Rat a(0), b(0);
    lo_prefix.push_back(a);
    hi_prefix.push_back(b);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      a += lo[i];
      b += hi[i];
      lo_prefix.push_back(a);
      hi_prefix.push_back(b);
    }
  }

  IntervalRat sum(int k) const {
    return {lo_prefix[static_cast<std::size_t>(k)], hi_prefix[static_cast<std::size_t>(k)]};
  }
};

}  // namespace

Trilean majorizes(const Vec& x, const Vec& y, const Rat& eps) {
  (void)eps;
  if (x.size() != y.size()) raise(Errc::LengthMismatch, "majorization of unequal lengths");
  int n = x.size();
  if (n == 0) return Trilean::yes();
  PartialBounds bx(x), by(y);
  Trilean acc = Trilean::yes();
  for (int k = 1; k < n; ++k) acc = acc && cmp_le(by.sum(k), bx.sum(k));
  if (x.exact_total && y.exact_total)
    return acc && (*x.exact_total == *y.exact_total ? Trilean::yes() : Trilean::no());
  IntervalRat tx = x.exact_total ? IntervalRat(*x.exact_total) : bx.sum(n);
  IntervalRat ty = y.exact_total ? IntervalRat(*y.exact_total) : by.sum(n);
  if (tx.exact() && ty.exact()) return acc && (tx.lo == ty.lo ? Trilean::yes() : Trilean::no());
  if (tx.hi < ty.lo || ty.hi < tx.lo) return Trilean::no();
  return acc && Trilean::indeterminate(std::max(tx.width(), ty.width()));
}

std::vector<Rat> pinch(const std::vector<Rat>& x, int j, int k, const Rat& alpha) {
  int n = static_cast<int>(x.size());
  if (j < 1 || j > n || k < 1 || k > n || j == k)
    raise(Errc::IndexOutOfRange, "pinch positions " + std::to_string(j) + ", " + std::to_string(k));
  const Rat& xj = x[static_cast<std::size_t>(j - 1)];
  const Rat& xk = x[static_cast<std::size_t>(k - 1)];
  if (alpha < 0 || 2 * alpha > xj - xk)
    raise(Errc::CrossingPinch, "alpha = " + rat_to_string(alpha) + " outside [0, (x_j - x_k)/2]");
  std::vector<Rat> out = x;
  out[static_cast<std::size_t>(j - 1)] -= alpha;
  out[static_cast<std::size_t>(k - 1)] += alpha;
  return out;
}

bool IndexTuple::operator<(const IndexTuple& o) const {
  if (n != o.n) return n < o.n;
  if (I != o.I) return I < o.I;
  if (J != o.J) return J < o.J;
  if (K != o.K) return K < o.K;
  return L < o.L;
}

void validate_tuple(const IndexTuple& t, bool require_l) {
  auto check = [&](const std::vector<int>& part, const char* name, bool may_be_empty) {
    if (part.empty()) {
      if (!may_be_empty)
        raise(Errc::LengthMismatch, std::string("empty index part ") + name);
      return;
    }
    int prev = 0;
    for (int v : part) {
      if (v < 1 || v > t.n)
        raise(Errc::IndexOutOfRange,
              std::string(name) + " index " + std::to_string(v) + " outside [1, n]");
      if (v <= prev) raise(Errc::IndexOutOfRange, std::string(name) + " not strictly increasing");
      prev = v;
    }
  };
  if (t.n < 1) raise(Errc::IndexOutOfRange, "tuple with n < 1");
  check(t.I, "I", false);
  check(t.L, "L", !require_l);
  check(t.J, "J", false);
  check(t.K, "K", false);
}

namespace {

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int sum_at(const std::vector<int>& v, const std::vector<int>& positions) {
  int s = 0;
  for (int p : positions) s += v[static_cast<std::size_t>(p - 1)];
  return s;
}

struct FultonTriple {
  std::vector<int> f, g, h;
};

// Horn's recursion: T(n, 1) is the equality slice of Weyl tuples, and
// T(n, r) keeps the triples of U(n, r) whose position lists satisfy every
// T(r, p) inequality for p < r.
const std::vector<FultonTriple>& fulton_core(int n, int r) {
  static std::map<std::pair<int, int>, std::vector<FultonTriple>> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto rec = [&](auto&& self, int nn, int rr) -> const std::vector<FultonTriple>& {
    auto key = std::make_pair(nn, rr);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<FultonTriple> out;
    std::vector<std::vector<int>> subs = subsets(nn, rr);
    int need = rr * (rr + 1) / 2;
    for (const auto& f : subs)
      for (const auto& g : subs)
        for (const auto& h : subs) {
          if (sum_of(f) + sum_of(g) != sum_of(h) + need) continue;
          bool ok = true;
          for (int p = 1; p < rr && ok; ++p)
            for (const FultonTriple& c : self(self, rr, p)) {
              if (sum_at(f, c.f) + sum_at(g, c.g) > sum_at(h, c.h) + p * (p + 1) / 2) {
                ok = false;
                break;
              }
            }
          if (ok) out.push_back({f, g, h});
        }
    return cache.emplace(key, std::move(out)).first->second;
  };
  return rec(rec, n, r);
}

bool elementwise_ge(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

std::vector<IndexTuple> horn_triples(int n, int r) {
  if (n < 1 || n > 6) raise(Errc::UnsupportedSize, "n = " + std::to_string(n) + " outside [1, 6]");
  if (r < 1 || r > n) raise(Errc::IndexOutOfRange, "r = " + std::to_string(r) + " outside [1, n]");
  static std::map<std::pair<int, int>, std::vector<IndexTuple>> cache;
  static std::mutex mu;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }
  // Core triples in the spectra orientation: sum_I lambda(A+B) <= sum_J
  // lambda(A) + sum_K lambda(B) maps to Fulton's (F, G, H) as (J, K, I).
  const std::vector<FultonTriple>& core = fulton_core(n, r);
  std::vector<std::vector<int>> subs = subsets(n, r);
  std::vector<IndexTuple> out;
  for (const auto& i : subs)
    for (const auto& j : subs)
      for (const auto& k : subs) {
        bool valid = false;
        for (const FultonTriple& c : core) {
          // Weakening: raising I indices shrinks the left side; lowering J, K
          // indices grows the right side.
          if (elementwise_ge(i, c.h) && elementwise_ge(c.f, j) && elementwise_ge(c.g, k)) {
            valid = true;
            break;
          }
        }
        if (valid) out.push_back({n, i, {}, j, k});
      }
  std::sort(out.begin(), out.end());
  std::scoped_lock lock(mu);
  return cache.emplace(std::make_pair(n, r), std::move(out)).first->second;
}

RatPoly char_poly(const std::vector<std::vector<Rat>>& a) {
  int n = static_cast<int>(a.size());
  if (n < 1 || n > 6) raise(Errc::UnsupportedSize, "matrix size outside [1, 6]");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) raise(Errc::LengthMismatch, "matrix not square");
  using Mat = std::vector<std::vector<Rat>>;
  auto matmul = [n](const Mat& x, const Mat& y) {
    Mat z(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Rat& xv = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (xv == 0) continue;
        for (int j = 0; j < n; ++j)
          z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              xv * y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    return z;
  };
  auto trace = [n](const Mat& x) {
    Rat t(0);
    for (int i = 0; i < n; ++i) t += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return t;
  };
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  c[static_cast<std::size_t>(n)] = 1;
  Mat m = a;
  Rat ck = -trace(m);
  c[static_cast<std::size_t>(n - 1)] = ck;
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ck;
    m = matmul(a, m);
    ck = -trace(m) / k;
    c[static_cast<std::size_t>(n - k)] = ck;
  }
  return RatPoly(std::move(c), n);
}

namespace {

using Mat = std::vector<std::vector<Rat>>;

// Entries k/4 with k uniform on [-32, 32]; upper triangle row-major, A then
// B, so the stream is a pure function of (seed, trial).
Mat sample_sym(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-32, 32);
  Mat a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat v(dist(rng), 4);
      v.canonicalize();
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  return a;
}

Eigen::MatrixXd to_eigen(const Mat& a) {
  int n = static_cast<int>(a.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
  return m;
}

std::vector<double> eigs_desc(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  Eigen::VectorXd ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

Mat mat_sum(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) c[i][j] += b[i][j];
  return c;
}

double select_sum(const std::vector<double>& lam, const std::vector<int>& idx) {
  double s = 0;
  for (int i : idx) s += lam[static_cast<std::size_t>(i - 1)];
  return s;
}

bool certified_violation(const Mat& a, const Mat& b, const IndexTuple& t, Rat& lhs_lo,
                         Rat& rhs_hi) {
  Rat eps = rat_pow2_neg(50);
  RootVector rc = root_vector(char_poly(mat_sum(a, b)), eps);
  RootVector ra = root_vector(char_poly(a), eps);
  RootVector rb = root_vector(char_poly(b), eps);
  IntervalRat lhs, rhs;
  for (int i : t.I) lhs += rc.at(i);
  for (int j : t.J) rhs += ra.at(j);
  for (int k : t.K) rhs += rb.at(k);
  lhs_lo = lhs.lo;
  rhs_hi = rhs.hi;
  return lhs.lo > rhs.hi;
}

}  // namespace

FalsifyOutcome hermitian_falsify(const IndexTuple& t, int trials, std::uint64_t seed) {
  if (t.n < 1 || t.n > 6) raise(Errc::UnsupportedSize, "n outside [1, 6]");
  validate_tuple(t, false);
  FalsifyOutcome out;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    Mat a = sample_sym(rng, t.n);
    Mat b = sample_sym(rng, t.n);
    std::vector<double> lc = eigs_desc(to_eigen(mat_sum(a, b)));
    std::vector<double> la = eigs_desc(to_eigen(a));
    std::vector<double> lb = eigs_desc(to_eigen(b));
    double lhs = select_sum(lc, t.I);
    double rhs = select_sum(la, t.J) + select_sum(lb, t.K);
    if (lhs > rhs + 1e-8 && certified_violation(a, b, t, out.lhs_lo, out.rhs_hi)) {
      out.violated = true;
      out.trial = static_cast<std::uint64_t>(trial);
      out.trials_run = trial + 1;
      out.a = a;
      out.b = b;
      return out;
    }
  }
  out.trials_run = trials;
  return out;
}

std::optional<std::size_t> horn_survival_scan(int n, const std::vector<IndexTuple>& tuples,
                                              int trials, std::uint64_t seed) {
  if (n < 1 || n > 6) raise(Errc::UnsupportedSize, "n outside [1, 6]");
  for (const IndexTuple& t : tuples) {
    if (t.n != n) raise(Errc::LengthMismatch, "tuple n differs from scan n");
    validate_tuple(t, false);
  }
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    Mat a = sample_sym(rng, n);
    Mat b = sample_sym(rng, n);
    std::vector<double> lc = eigs_desc(to_eigen(mat_sum(a, b)));
    std::vector<double> la = eigs_desc(to_eigen(a));
    std::vector<double> lb = eigs_desc(to_eigen(b));
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
      const IndexTuple& t = tuples[idx];
      double lhs = select_sum(lc, t.I);
      double rhs = select_sum(la, t.J) + select_sum(lb, t.K);
      if (lhs > rhs + 1e-8) {
        Rat lhs_lo, rhs_hi;
        if (certified_violation(a, b, t, lhs_lo, rhs_hi)) return idx;
      }
    }
  }
  return std::nullopt;
}

}  // namespace freeconv
