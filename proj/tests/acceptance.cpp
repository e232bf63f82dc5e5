// Acceptance harness: one criterion per invocation, one [PASS]/[FAIL] line.
// Usage: acceptance <criterion 1..10> [--cli <path-to-freeconv-binary>]

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/json_io.hpp"
#include "freeconv/majorization.hpp"
#include "freeconv/multiaffine.hpp"
#include "freeconv/poly.hpp"
#include "freeconv/rng.hpp"
#include "freeconv/roots.hpp"
#include "freeconv/verify.hpp"

using namespace freeconv;
using nlohmann::json;

namespace {

const Rat kEps = rat_pow2_neg(40);

struct Harness {
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rat small_rat(std::mt19937_64& g, int range, int den_max) {
  std::uniform_int_distribution<int> dd(1, den_max);
  int den = dd(g);
  std::uniform_int_distribution<long> nd(-static_cast<long>(range) * den,
                                         static_cast<long>(range) * den);
  Rat x(nd(g), den);
  x.canonicalize();
  return x;
}

std::vector<Rat> int_roots(std::mt19937_64& g, int deg, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rat> r(static_cast<std::size_t>(deg));
  for (Rat& x : r) x = Rat(d(g));
  return r;
}

MultiPoly product3(const Rat& a1, const Rat& a2, const Rat& a3) {
  MultiPoly p(std::vector<int>{1, 1, 1});
  const Rat as[3] = {a1, a2, a3};
  for (int mask = 0; mask < 8; ++mask) {
    Rat c(1);
    for (int v = 0; v < 3; ++v)
      if (!(mask & (1 << v))) c *= as[v];
    p.set_coeff({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, c);
  }
  return p;
}

MultiPoly encode_univariate(const RatPoly& p) {
  MultiPoly out(std::vector<int>{p.ambient()});
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) out.set_coeff({i}, p.coeff(i));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cmd(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// ---------------------------------------------------------------------------

void criterion_1(Harness& h) {
  auto t0 = std::chrono::steady_clock::now();
  ReproduceReport rep = reproduce_counterexample();
  double dt = seconds_since(t0);

  struct Want {
    int mu[3];
    const char* c;
  };
  const Want coeffs[8] = {{{1, 1, 1}, "64/441"}, {{1, 1, 0}, "1280/441"}, {{1, 0, 1}, "144/49"},
                          {{0, 1, 1}, "16/21"},  {{1, 0, 0}, "4768/147"}, {{0, 1, 0}, "32/3"},
                          {{0, 0, 1}, "226/21"}, {{0, 0, 0}, "1520/21"}};
  for (const Want& w : coeffs)
    h.check(rep.conv.coeff({w.mu[0], w.mu[1], w.mu[2]}) == rat_from_string(w.c),
            std::string("convolution coefficient ") + w.c);
  h.check(rep.value_at_point == rat_from_string("-1450/441"),
          "value at -1-e1 equals -1450/441 (computed " + rat_to_string(rep.value_at_point) + ")");
  h.check(dt < 1.0, "runtime under 1 s");
}

void criterion_2(Harness& h) {
  ReproduceReport rep = reproduce_counterexample();
  for (const char* name :
       {"delta_12_closed_form", "delta_13_closed_form", "delta_23_closed_form"}) {
    bool found = false;
    for (const CheckItem& c : rep.checks)
      if (c.name == name) {
        found = true;
        h.check(c.pass, std::string(name) + " exact identity");
      }
    h.check(found, std::string(name) + " present");
  }
}

void criterion_3(Harness& h) {
  auto t0 = std::chrono::steady_clock::now();
  const Rat alphas[3] = {Rat(1, 4), Rat(1), Rat(3)};
  for (int trial = 0; trial < 200; ++trial) {
    std::mt19937_64 g = trial_rng(0xA3, static_cast<std::uint64_t>(trial));
    int n = 1 + static_cast<int>(g() % 6);
    RatPoly p = from_roots(int_roots(g, n, 8));
    RatPoly q = from_roots(int_roots(g, n, 8));
    for (const Rat& alpha : alphas) {
      VerdictReport rep = verify_mss_ualpha(p, q, n, alpha, kEps);
      h.check(!rep.verdict.is_false(),
              "trial " + std::to_string(trial) + " alpha " + rat_to_string(alpha) +
                  " not certified-false");
      if (rep.verdict.is_indeterminate())
        h.check(rep.verdict.width() > kEps,
                "trial " + std::to_string(trial) + " indeterminate only above eps");
    }
  }
  h.check(seconds_since(t0) < 120.0, "runtime under 2 min");
}

void criterion_4(Harness& h) {
  auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    std::mt19937_64 g = trial_rng(0xA4, static_cast<std::uint64_t>(trial));
    int n = 2 + static_cast<int>(g() % 5);
    int a = static_cast<int>(g() % static_cast<std::uint64_t>(n));
    int b = static_cast<int>(g() % static_cast<std::uint64_t>(n - a));
    int c = static_cast<int>(g() % static_cast<std::uint64_t>(n - a - b));
    RatPoly p = from_roots(int_roots(g, n - a, 8));
    RatPoly q = from_roots(int_roots(g, n - b, 8));
    RatPoly r = from_roots(int_roots(g, n - c, 8));
    VerdictReport rep = verify_submodularity(p, q, r, n, kEps);
    h.check(!rep.verdict.is_false(), "trial " + std::to_string(trial) + " never violated");
  }
  h.check(seconds_since(t0) < 300.0, "runtime under 5 min");
}

void criterion_5(Harness& h) {
  for (int trial = 0; trial < 250; ++trial) {
    std::mt19937_64 g = trial_rng(0xA5, static_cast<std::uint64_t>(trial));
    int n = 2 + static_cast<int>(g() % 5);
    RatPoly p = from_roots(int_roots(g, n, 8));
    RatPoly q = from_roots(int_roots(g, n, 8));
    VerdictReport rep = verify_majorization_conv(p, q, n, kEps);
    h.check(!rep.verdict.is_false(), "conv trial " + std::to_string(trial) + " never violated");
  }
  for (int trial = 0; trial < 250; ++trial) {
    std::mt19937_64 g = trial_rng(0xA55, static_cast<std::uint64_t>(trial));
    int n = 2 + static_cast<int>(g() % 5);
    std::vector<Rat> x = int_roots(g, n, 8);
    // pinch premise: y is x after a few pinches, so lambda(q)=x majorizes y
    std::vector<Rat> y = x;
    int pinches = 1 + static_cast<int>(g() % 3);
    std::uniform_int_distribution<int> pick(1, n);
    for (int s = 0; s < pinches; ++s) {
      int u = pick(g), v = pick(g);
      if (u == v) continue;
      if (y[static_cast<std::size_t>(u - 1)] < y[static_cast<std::size_t>(v - 1)]) std::swap(u, v);
      Rat gap = y[static_cast<std::size_t>(u - 1)] - y[static_cast<std::size_t>(v - 1)];
      std::uniform_int_distribution<int> frac(0, 4);
      Rat a(frac(g), 8);
      a.canonicalize();
      y = pinch(y, u, v, gap * a);
    }
    RatPoly p = from_roots(y), q = from_roots(x), r = from_roots(int_roots(g, n, 8));
    VerdictReport rep = verify_maj_preservation(p, q, r, n, kEps);
    h.check(!rep.verdict.is_false(), "preserve trial " + std::to_string(trial) + " never violated");
  }
}

void criterion_6(Harness& h) {
  using Row = std::vector<Rat>;
  std::vector<Row> A = {Row{Rat(2), Rat(0)}, Row{Rat(0), Rat(0)}};
  std::vector<Row> B = A;
  std::vector<Row> C = {Row{Rat(0), Rat(0)}, Row{Rat(0), Rat(2)}};
  auto madd = [](std::vector<Row> x, const std::vector<Row>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[i][j] += y[i][j];
    return x;
  };
  auto top = [](const std::vector<Row>& m) {
    RootEnclosure e = maxroot(char_poly(m), kEps);
    return e;
  };
  RootEnclosure abc = top(madd(madd(A, B), C)), c = top(C), ac = top(madd(A, C)),
                bc = top(madd(B, C));
  h.check(abc.exact() && c.exact() && ac.exact() && bc.exact(), "all four spectra exact");
  Rat lhs = abc.lo + c.lo, rhs = ac.lo + bc.lo;
  h.check(lhs == Rat(6), "lambda1(A+B+C) + lambda1(C) equals 6, got " + rat_to_string(lhs));
  h.check(rhs == Rat(4), "lambda1(A+C) + lambda1(B+C) equals 4, got " + rat_to_string(rhs));
  h.check(lhs > rhs, "matrix submodularity violated exactly");
}

void criterion_7(Harness& h) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<IndexTuple> expect;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (i >= j + k - 1) {
            IndexTuple t;
            t.n = n;
            t.I = {i};
            t.J = {j};
            t.K = {k};
            expect.push_back(t);
          }
    std::sort(expect.begin(), expect.end());
    h.check(horn_triples(n, 1) == expect, "n=" + std::to_string(n) + " r=1 equals the Weyl set");

    std::vector<IndexTuple> all;
    for (int r = 1; r <= n; ++r)
      for (const IndexTuple& t : horn_triples(n, r)) all.push_back(t);
    auto hit = horn_survival_scan(n, all, 10000, 0xA7 + static_cast<std::uint64_t>(n));
    h.check(!hit.has_value(),
            "n=" + std::to_string(n) + ": all " + std::to_string(all.size()) +
                " tuples survive 10^4 sampling trials");
  }
}

void criterion_8(Harness& h) {
  auto t0 = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    std::mt19937_64 g = trial_rng(0xA8, static_cast<std::uint64_t>(trial));
    int n = 2 + static_cast<int>(g() % 4);
    switch (trial % 7) {
      case 0: {
        RatPoly p = from_roots(int_roots(g, n, 8)), q = from_roots(int_roots(g, n, 8));
        h.check(boxplus(p, q, n) == boxplus(q, p, n), "symmetry");
        h.check(boxplus(p, RatPoly::monomial(n, n), n) == p, "x^n identity");
        break;
      }
      case 1: {
        RatPoly p = from_roots(int_roots(g, n, 8)), q = from_roots(int_roots(g, n, 8));
        Rat c = small_rat(g, 6, 4);
        h.check(boxplus(shift(p, c), q, n) == shift(boxplus(p, q, n), c), "shift invariance");
        break;
      }
      case 2: {
        std::vector<Rat> rp = int_roots(g, n, 8), rq = int_roots(g, n, 8);
        RatPoly conv = boxplus(from_roots(rp), from_roots(rq), n);
        Rat a = small_rat(g, 4, 3);
        if (a == 0) a = Rat(2);
        std::vector<Rat> sp = rp, sq = rq;
        for (Rat& x : sp) x *= a;
        for (Rat& x : sq) x *= a;
        h.check(boxplus(from_roots(sp), from_roots(sq), n) ==
                    scale(scale_arg(conv, a), rat_pow(a, n)),
                "scale invariance");
        break;
      }
      case 3: {
        RatPoly p = from_roots(int_roots(g, n, 8)), q = from_roots(int_roots(g, n, 8));
        RatPoly lhs = scale(derivative(boxplus(p, q, n)), Rat(1, n));
        RatPoly rhs = boxplus(scale(derivative(p), Rat(1, n)), scale(derivative(q), Rat(1, n)),
                              n - 1);
        h.check(lhs == rhs, "derivative intertwining");
        break;
      }
      case 4: {
        RatPoly p = from_roots(int_roots(g, n, 8));
        Rat alpha = rat_abs(small_rat(g, 3, 4)) + Rat(1, 5);
        h.check(apply_U_alpha(p, alpha) == boxplus(p, u_alpha(n, alpha), n),
                "U_alpha representer");
        break;
      }
      case 5: {
        std::vector<Rat> roots = int_roots(g, n, 6);
        bool distinct = false;
        for (const Rat& x : roots) distinct = distinct || x != roots[0];
        if (!distinct) roots[0] += 1;
        RatPoly p = from_roots(roots);
        Rat lam1 = roots[0];
        for (const Rat& x : roots) lam1 = std::max(lam1, x);
        Rat lamk = lam1;
        bool seen = false;
        for (const Rat& x : roots)
          if (x != lam1 && (!seen || x > lamk)) {
            lamk = x;
            seen = true;
          }
        Rat mu0 = (lam1 + lamk) / 2, mu1 = lam1;
        std::uniform_int_distribution<int> num(0, 4);
        Rat frac(num(g), 4);
        frac.canonicalize();
        Rat mu = mu0 + (mu1 - mu0) * frac;
        PinchDecomposition dd = pinch_decomposition(p, mu, Rat(1));
        h.check(add(dd.p_tilde, dd.p_hat) == p, "pinch recomposition");
        h.check(dd.certified.is_true(), "pinch certificates");
        break;
      }
      default: {
        Rat w = small_rat(g, 6, 4), y = small_rat(g, 6, 4);
        h.check(boxplus_gamma(product3(w, w, w), product3(y, y, y)) ==
                    product3(w + y, w + y, w + y),
                "symbol identity");
        RatPoly p = from_roots(int_roots(g, n, 6)), q = from_roots(int_roots(g, n, 6));
        MultiPoly bridge = boxplus_gamma(encode_univariate(p), encode_univariate(q));
        RatPoly uni = scale(boxplus(p, q, n), Rat(factorial(n)));
        bool same = true;
        for (int i = 0; i <= n; ++i) same = same && bridge.coeff({i}) == uni.coeff(i);
        h.check(same, "univariate bridge");
        break;
      }
    }
  }
  h.check(seconds_since(t0) < 60.0, "runtime under 1 min");
}

void criterion_9(Harness& h) {
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 g = trial_rng(0xA9, static_cast<std::uint64_t>(trial));
    int n = 2 + trial % 3;
    std::vector<Rat> roots = int_roots(g, n, 6);
    bool distinct = false;
    for (const Rat& x : roots) distinct = distinct || x != roots[0];
    if (!distinct) roots[0] += 2;
    RatPoly p = from_roots(roots);
    RatPoly r = from_roots(int_roots(g, n, 6));
    MuStarResult m = find_mu_star(p, r, n, kEps);
    std::string tag = "trial " + std::to_string(trial);
    h.check(m.gt_mu0.is_true(), tag + ": mu* > mu0 certified");
    h.check(m.monotone.is_true(), tag + ": monotonicity certified at every step");
    h.check(m.proposition.is_true(), tag + ": maxroots agree within eps at mu*");
  }
}

void criterion_10(Harness& h, const std::string& cli) {
  if (cli.empty()) {
    h.check(false, "--cli not supplied");
    return;
  }
  std::string base = "/tmp/freeconv_acceptance_10";
  std::string out1 = base + "_a.json", out2 = base + "_b.json", out3 = base + "_c.json";
  std::string search =
      " search --statement 2.4 --n 2 --trials 25 --seed 9 --out ";
  h.check(run_cmd(cli + search + out1) == 0, "first search run exits 0");
  h.check(run_cmd(cli + search + out2) == 0, "second search run exits 0");
  h.check(run_cmd("FREECONV_THREADS=4 " + cli + search + out3) == 0,
          "threaded search run exits 0");
  std::string a = slurp(out1), b = slurp(out2), c = slurp(out3);
  h.check(!a.empty() && a == b, "reruns are byte-identical");
  h.check(a == c, "thread count does not change bytes");

  json summary = parse_json(a);
  json witness_inputs;
  if (summary.at("violations").empty()) {
    h.check(false, "expected at least one certified violation from the 2.4 sweep");
    return;
  }
  const json& rep = summary.at("violations")[0];
  witness_inputs = rep.contains("report") ? rep.at("report").at("inputs")
                                          : rep.at("reports")[0].at("inputs");
  std::string in_path = base + "_in.json", vout = base + "_v.json";
  std::ofstream(in_path) << canonical_dump(witness_inputs);
  int code = run_cmd(cli + " verify --statement 4tuple --in " + in_path + " --out " + vout);
  h.check(code == 3, "fresh-process re-verification exits 3 (got " + std::to_string(code) + ")");
  json vr = parse_json(slurp(vout));
  h.check(vr.at("verdict") == json("false"), "fresh-process verdict is certified false");
}

const char* kLabels[11] = {"",
                           "exact counterexample reproduction",
                           "strongly-Rayleigh closed forms",
                           "U_alpha triangle specialization sweep",
                           "submodularity sweep",
                           "majorization sweep",
                           "matrix submodularity counterexample",
                           "Horn oracle consistency",
                           "algebraic identity suite",
                           "mu-star machinery",
                           "search determinism and witness replay"};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <criterion 1..10> [--cli <path>]\n";
    return 2;
  }
  int k = std::atoi(argv[1]);
  if (k < 1 || k > 10) {
    std::cerr << "criterion out of range\n";
    return 2;
  }
  std::string cli;
  for (int i = 2; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  Harness h;
  try {
    switch (k) {
      case 1: criterion_1(h); break;
      case 2: criterion_2(h); break;
      case 3: criterion_3(h); break;
      case 4: criterion_4(h); break;
      case 5: criterion_5(h); break;
      case 6: criterion_6(h); break;
      case 7: criterion_7(h); break;
      case 8: criterion_8(h); break;
      case 9: criterion_9(h); break;
      case 10: criterion_10(h, cli); break;
    }
  } catch (const std::exception& e) {
    h.check(false, std::string("unexpected exception: ") + e.what());
  }

  if (h.failures == 0) {
    std::cout << "[PASS] criterion " << k << ": " << kLabels[k] << " (" << h.checks
              << " checks)\n";
    return 0;
  }
  std::cout << "[FAIL] criterion " << k << ": " << kLabels[k] << " (" << h.failures << "/"
            << h.checks << " checks failed; first: " << h.first_failure << ")\n";
  return 1;
}
