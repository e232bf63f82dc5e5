#include "freeconv/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "freeconv/json_io.hpp"

namespace freeconv {

using nlohmann::json;

namespace {

void require_degree(const RatPoly& p, int n, const char* name, Errc code) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, std::string(name) + " is zero");
  if (p.degree() != n)
    raise(code, std::string(name) + " has degree " + std::to_string(p.degree()) +
                    ", expected " + std::to_string(n));
}

IntervalRat select_sum(const RootVector& rv, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) == rv.count()) return IntervalRat(rv.exact_sum());
  IntervalRat acc;
  for (int i : idx) acc += rv.at(i);
  return acc;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const IntervalRat& e : v.entries) out.push_back(interval_to_json(e));
  return out;
}

json enclosure_to_json(const RootEnclosure& e) {
  return json{{"lo", rat_to_string(e.lo)}, {"hi", rat_to_string(e.hi)}, {"mult", e.mult}};
}

}  // namespace

VerdictReport verify_triangle(const RatPoly& p, const RatPoly& q, int n, const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  Rat fine = eps / 4;
  RatPoly conv = boxplus(p, q, n);
  RootEnclosure mc = maxroot(conv, fine), mp = maxroot(p, fine), mq = maxroot(q, fine);
  IntervalRat lhs = mc.interval(), rhs = mp.interval() + mq.interval();
  VerdictReport rep;
  rep.statement = "triangle";
  rep.inputs = json{{"p", poly_to_json(p)}, {"q", poly_to_json(q)}, {"n", n}};
  rep.verdict = cmp_le(lhs, rhs);
  rep.details = json{{"lhs", interval_to_json(lhs)},
                     {"rhs", interval_to_json(rhs)},
                     {"conv", poly_to_json(conv)},
                     {"maxroot_p", enclosure_to_json(mp)},
                     {"maxroot_q", enclosure_to_json(mq)}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_weyl(const RatPoly& p, const RatPoly& q, int n, int i, int j,
                          const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  if (i < 1 || j < 1 || i + j - 1 > n)
    raise(Errc::IndexOutOfRange,
          "need 1 <= i, j with i + j - 1 <= n; got i = " + std::to_string(i) +
              ", j = " + std::to_string(j));
  Rat fine = eps / 4;
  RatPoly conv = boxplus(p, q, n);
  RootVector rc = root_vector(conv, fine), rp = root_vector(p, fine), rq = root_vector(q, fine);
  IntervalRat lhs = rc.at(i + j - 1), rhs = rp.at(i) + rq.at(j);
  VerdictReport rep;
  rep.statement = "weyl";
  rep.inputs =
      json{{"p", poly_to_json(p)}, {"q", poly_to_json(q)}, {"n", n}, {"i", i}, {"j", j}};
  rep.verdict = cmp_le(lhs, rhs);
  rep.details = json{{"lhs", interval_to_json(lhs)},
                     {"rhs", interval_to_json(rhs)},
                     {"conv_roots", rootvec_to_json(rc)}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_majorization_conv(const RatPoly& p, const RatPoly& q, int n,
                                       const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeDeficient);
  require_degree(q, n, "q", Errc::DegreeDeficient);
  Rat fine = eps / 4;
  RatPoly conv = boxplus(p, q, n);
  Vec x = vec_add(Vec::from_root_vector(root_vector(p, fine)),
                  Vec::from_root_vector(root_vector(q, fine)));
  Vec y = Vec::from_root_vector(root_vector(conv, fine));
  VerdictReport rep;
  rep.statement = "maj-conv";
  rep.inputs = json{{"p", poly_to_json(p)}, {"q", poly_to_json(q)}, {"n", n}};
  rep.verdict = majorizes(x, y, eps);
  rep.details = json{{"sum_spectrum", vec_to_json(x)},
                     {"conv_spectrum", vec_to_json(y)},
                     {"conv", poly_to_json(conv)}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_maj_preservation(const RatPoly& p, const RatPoly& q, const RatPoly& r, int n,
                                      const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  require_degree(r, n, "r", Errc::DegreeMismatch);
  Rat fine = eps / 4;
  Vec lp = Vec::from_root_vector(root_vector(p, fine));
  Vec lq = Vec::from_root_vector(root_vector(q, fine));
  Trilean hyp = majorizes(lq, lp, eps);
  if (!hyp.is_true())
    raise(Errc::PreconditionNotCertified, "lambda(p) majorized by lambda(q) is " + hyp.str());
  Vec cp = Vec::from_root_vector(root_vector(boxplus(p, r, n), fine));
  Vec cq = Vec::from_root_vector(root_vector(boxplus(q, r, n), fine));
  VerdictReport rep;
  rep.statement = "maj-preserve";
  rep.inputs = json{{"p", poly_to_json(p)},
                    {"q", poly_to_json(q)},
                    {"r", poly_to_json(r)},
                    {"n", n}};
  rep.verdict = majorizes(cq, cp, eps);
  rep.details = json{{"hypothesis", trilean_to_json(hyp)},
                     {"conv_p_spectrum", vec_to_json(cp)},
                     {"conv_q_spectrum", vec_to_json(cq)}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_submodularity(const RatPoly& p, const RatPoly& q, const RatPoly& r, int n,
                                   const Rat& eps) {
  if (p.is_zero() || q.is_zero() || r.is_zero())
    raise(Errc::ZeroPolynomial, "submodularity with zero polynomial");
  int slack = (n - p.degree()) + (n - q.degree()) + (n - r.degree());
  if (p.degree() > n || q.degree() > n || r.degree() > n)
    raise(Errc::DegreeExceedsAmbient, "input degree exceeds n");
  if (slack >= n)
    raise(Errc::DegreeConditionViolated,
          "degree deficiency " + std::to_string(slack) + " not below n = " + std::to_string(n));
  Rat fine = eps / 4;
  RatPoly pqr = boxplus(boxplus(p, q, n), r, n);
  RatPoly pr = boxplus(p, r, n), qr = boxplus(q, r, n);
  IntervalRat lhs = maxroot(pqr, fine).interval() + maxroot(r, fine).interval();
  IntervalRat rhs = maxroot(pr, fine).interval() + maxroot(qr, fine).interval();
  VerdictReport rep;
  rep.statement = "submodularity";
  rep.inputs = json{{"p", poly_to_json(p)},
                    {"q", poly_to_json(q)},
                    {"r", poly_to_json(r)},
                    {"n", n}};
  rep.verdict = cmp_le(lhs, rhs);
  rep.details = json{{"lhs", interval_to_json(lhs)},
                     {"rhs", interval_to_json(rhs)},
                     {"conv_pqr", poly_to_json(pqr)},
                     {"degree_slack", slack}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_mss_ualpha(const RatPoly& p, const RatPoly& q, int n, const Rat& alpha,
                                const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  // Enclosures stop at width eps: an undecided verdict then carries width
  // 2*eps from the two-term right side, so ties are reported above eps.
  Rat fine = eps;
  RatPoly conv = boxplus(p, q, n);
  IntervalRat lhs =
      maxroot(apply_U_alpha(conv, alpha), fine).interval() + IntervalRat(Rat(n) * alpha);
  IntervalRat rhs = maxroot(apply_U_alpha(p, alpha), fine).interval() +
                    maxroot(apply_U_alpha(q, alpha), fine).interval();
  VerdictReport rep;
  rep.statement = "mss-ualpha";
  rep.inputs = json{{"p", poly_to_json(p)},
                    {"q", poly_to_json(q)},
                    {"n", n},
                    {"alpha", rat_to_string(alpha)}};
  rep.verdict = cmp_le(lhs, rhs);
  rep.details = json{{"lhs", interval_to_json(lhs)}, {"rhs", interval_to_json(rhs)}};
  rep.eps = eps;
  return rep;
}

VerdictReport verify_4tuple(const IndexTuple& t, const RatPoly& p, const RatPoly& q,
                            const RatPoly& r, int n, const Rat& eps) {
  validate_tuple(t, true);
  if (t.n != n) raise(Errc::DegreeMismatch, "tuple n differs from convolution degree");
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  require_degree(r, n, "r", Errc::DegreeMismatch);
  int terms = std::max(t.I.size() + t.L.size(), t.J.size() + t.K.size());
  Rat fine = eps / Rat(4 * terms);
  RatPoly pqr = boxplus(boxplus(p, q, n), r, n);
  RatPoly pr = boxplus(p, r, n), qr = boxplus(q, r, n);
  RootVector rv_pqr = root_vector(pqr, fine), rv_r = root_vector(r, fine),
             rv_pr = root_vector(pr, fine), rv_qr = root_vector(qr, fine);
  IntervalRat lhs = select_sum(rv_pqr, t.I) + select_sum(rv_r, t.L);
  IntervalRat rhs = select_sum(rv_pr, t.J) + select_sum(rv_qr, t.K);
  VerdictReport rep;
  rep.statement = "4tuple";
  rep.inputs = json{{"tuple", tuple_to_json(t)},
                    {"p", poly_to_json(p)},
                    {"q", poly_to_json(q)},
                    {"r", poly_to_json(r)}};
  rep.verdict = cmp_le(lhs, rhs);
  rep.details = json{{"lhs", interval_to_json(lhs)},
                     {"rhs", interval_to_json(rhs)},
                     {"roots_pqr", rootvec_to_json(rv_pqr)},
                     {"roots_r", rootvec_to_json(rv_r)},
                     {"roots_pr", rootvec_to_json(rv_pr)},
                     {"roots_qr", rootvec_to_json(rv_qr)}};
  rep.eps = eps;
  if (rep.verdict.is_false())
    rep.witness = json{{"tuple", tuple_to_json(t)},
                       {"p", poly_to_json(p)},
                       {"q", poly_to_json(q)},
                       {"r", poly_to_json(r)},
                       {"lhs_lo", rat_to_string(lhs.lo)},
                       {"rhs_hi", rat_to_string(rhs.hi)}};
  return rep;
}

VerdictReport verify_basecase_majorization(const RatPoly& p, const RatPoly& q, const RatPoly& r,
                                           int n, const Rat& eps) {
  require_degree(p, 1, "p", Errc::DegreeMismatch);
  require_degree(q, n, "q", Errc::DegreeMismatch);
  require_degree(r, n, "r", Errc::DegreeMismatch);
  Rat fine = eps / 4;
  RatPoly pqr = boxplus(boxplus(p, q, n), r, n);
  RatPoly pr = boxplus(p, r, n), qr = boxplus(q, r, n);
  Vec y = vec_add(Vec::from_root_vector(padded_root_vector(pqr, n, fine)),
                  Vec::from_root_vector(root_vector(r, fine)));
  Vec x = vec_add(Vec::from_root_vector(padded_root_vector(pr, n, fine)),
                  Vec::from_root_vector(root_vector(qr, fine)));
  VerdictReport rep;
  rep.statement = "basecase";
  rep.inputs = json{{"p", poly_to_json(p)},
                    {"q", poly_to_json(q)},
                    {"r", poly_to_json(r)},
                    {"n", n}};
  rep.verdict = majorizes(x, y, eps);
  rep.details = json{{"lhs_spectrum", vec_to_json(y)}, {"rhs_spectrum", vec_to_json(x)}};
  rep.eps = eps;
  return rep;
}

namespace {

struct PinchContext {
  std::vector<Rat> lambdas;  // descending, with multiplicity
  int k1 = 0;                // 1-based index of first root below lambda_1
  Rat mu0{0}, mu1{0};
  std::vector<Rat> rest;
};

PinchContext pinch_context(const RatPoly& p, const Rat& eps) {
  if (p.is_zero()) raise(Errc::ZeroPolynomial, "pinch of zero polynomial");
  if (!p.is_monic()) throw std::invalid_argument("pinch decomposition needs a monic polynomial");
  RootVector rv = root_vector(p, eps);
  if (!rv.all_exact())
    raise(Errc::IrrationalRoot, "pinch machinery needs exactly pinned rational roots");
  PinchContext ctx;
  for (const RootEnclosure& e : rv.enclosures())
    for (int m = 0; m < e.mult; ++m) ctx.lambdas.push_back(e.lo);
  int d = static_cast<int>(ctx.lambdas.size());
  for (int i = 1; i < d; ++i)
    if (ctx.lambdas[static_cast<std::size_t>(i)] != ctx.lambdas[0]) {
      ctx.k1 = i + 1;
      break;
    }
  if (ctx.k1 == 0) raise(Errc::SingleDistinctRoot, "pinch needs two distinct roots");
  ctx.mu0 = (ctx.lambdas[0] + ctx.lambdas[static_cast<std::size_t>(ctx.k1 - 1)]) / 2;
  ctx.mu1 = ctx.lambdas[0];
  for (int i = 0; i < d; ++i)
    if (i != 0 && i != ctx.k1 - 1) ctx.rest.push_back(ctx.lambdas[static_cast<std::size_t>(i)]);
  return ctx;
}

std::vector<Rat> with_double_root(const Rat& mu, const std::vector<Rat>& rest) {
  std::vector<Rat> roots{mu, mu};
  roots.insert(roots.end(), rest.begin(), rest.end());
  return roots;
}

}  // namespace

PinchDecomposition pinch_decomposition(const RatPoly& p, const Rat& mu, const Rat& eps) {
  PinchContext ctx = pinch_context(p, eps);
  if (mu < ctx.mu0 || mu > ctx.mu1)
    raise(Errc::MuOutOfRange, "mu = " + rat_to_string(mu) + " outside [" +
                                  rat_to_string(ctx.mu0) + ", " + rat_to_string(ctx.mu1) + "]");
  const Rat& l1 = ctx.lambdas[0];
  const Rat& lk = ctx.lambdas[static_cast<std::size_t>(ctx.k1 - 1)];
  PinchDecomposition out;
  out.mu = mu;
  out.mu0 = ctx.mu0;
  out.mu1 = ctx.mu1;
  out.lambda1 = l1;
  out.lambdak = lk;
  out.k = ctx.k1;
  out.p_tilde = from_roots(with_double_root(mu, ctx.rest)).with_ambient(p.ambient());
  out.p_hat = sub(p, out.p_tilde);
  std::vector<Rat> froots{mu};
  froots.insert(froots.end(), ctx.rest.begin(), ctx.rest.end());
  out.f = from_roots(froots).with_ambient(p.ambient());

  if (!(add(out.p_tilde, out.p_hat) == p))
    throw std::logic_error("pinch split does not recompose");
  Trilean cert = Trilean::yes();
  RatPoly rest_poly = from_roots(ctx.rest);
  if (mu > ctx.mu0) {
    Rat lead = 2 * mu - (l1 + lk);
    Rat rho = (mu * mu - l1 * lk) / lead;
    out.rho = rho;
    RatPoly expected =
        mul(RatPoly({-(mu * mu - l1 * lk), lead}, 1), rest_poly).with_ambient(p.ambient());
    cert = cert && (out.p_hat == expected ? Trilean::yes() : Trilean::no());
    cert = cert && (out.p_hat.degree() == p.degree() - 1 && out.p_hat.leading() > 0
                        ? Trilean::yes()
                        : Trilean::no());
    cert = cert && (rho >= l1 ? Trilean::yes() : Trilean::no());
    cert = cert && interlaces(out.f, out.p_hat, eps);
  } else {
    Rat half = (l1 - lk) / 2;
    RatPoly expected = scale(rest_poly, -half * half).with_ambient(p.ambient());
    cert = cert && (out.p_hat == expected ? Trilean::yes() : Trilean::no());
    cert = cert && (out.p_hat.degree() == p.degree() - 2 && out.p_hat.leading() < 0
                        ? Trilean::yes()
                        : Trilean::no());
  }
  cert = cert && interlaces(out.f, out.p_tilde, eps);
  cert = cert && interlaces(out.f, p, eps);
  out.certified = cert;
  return out;
}

MuStarResult find_mu_star(const RatPoly& p, const RatPoly& r, int n, const Rat& eps) {
  require_degree(p, n, "p", Errc::DegreeMismatch);
  require_degree(r, n, "r", Errc::DegreeMismatch);
  if (!is_real_rooted(r)) raise(Errc::NotRealRooted, "r is not real-rooted");
  PinchContext ctx = pinch_context(p, eps);
  Rat fine = eps / 8;
  RatPoly conv_pr = boxplus(p, r, n);

  IntervalRat target_cache = maxroot(conv_pr, fine).interval();
  auto target_at = [&](const Rat& f) -> IntervalRat {
    if (target_cache.width() > f) target_cache = maxroot(conv_pr, f).interval();
    return target_cache;
  };
  IntervalRat target = target_at(fine);

  std::map<Rat, IntervalRat> evals;
  auto lam_at = [&](const Rat& m, const Rat& f) -> IntervalRat {
    auto it = evals.find(m);
    if (it != evals.end() && it->second.width() <= f) return it->second;
    RatPoly pt = from_roots(with_double_root(m, ctx.rest));
    IntervalRat v = maxroot(boxplus(pt, r, n), f).interval();
    evals[m] = v;
    return v;
  };
  auto lam = [&](const Rat& m) { return lam_at(m, fine); };

  // Decide a comparison of mu-evaluations, refining both enclosures a few
  // rounds before conceding Indeterminate (exact ties stay undecidable).
  auto decide = [&](auto&& cmp) {
    Trilean c = Trilean::indeterminate(Rat(0));
    Rat f = fine;
    for (int round = 0; round < 4; ++round) {
      c = cmp(f);
      if (!c.is_indeterminate()) break;
      f /= 16;
    }
    return c;
  };

  MuStarResult out;
  out.mu0 = ctx.mu0;
  out.mu1 = ctx.mu1;
  IntervalRat lam0 = lam(ctx.mu0), lam1 = lam(ctx.mu1);
  Trilean lemma_low =
      decide([&](const Rat& f) { return cmp_le(lam_at(ctx.mu0, f), target_at(f)); });
  Trilean lemma_high =
      decide([&](const Rat& f) { return cmp_le(target_at(f), lam_at(ctx.mu1, f)); });
  out.gt_mu0 =
      decide([&](const Rat& f) { return cmp_lt(lam_at(ctx.mu0, f), target_at(f)); });

  auto pred = [&](const Rat& m) {
    return decide([&](const Rat& f) { return cmp_lt(target_at(f), lam_at(m, f)); });
  };

  json steps = json::array();
  Rat lo = ctx.mu0, hi = ctx.mu1;
  if (!pred(ctx.mu1).is_true()) {
    out.mu_star = IntervalRat(ctx.mu1);
    lo = hi = ctx.mu1;
  } else {
    Rat stop = eps / 4;
    while (hi - lo > stop) {
      Rat mid = (lo + hi) / 2;
      Trilean pm = pred(mid);
      IntervalRat lm = lam(mid);
      steps.push_back(json{{"mu", rat_to_string(mid)},
                           {"lam", interval_to_json(lm)},
                           {"above_target", trilean_to_json(pm)}});
      if (pm.is_true()) {
        hi = mid;
      } else if (pm.is_false()) {
        lo = mid;
      } else {
        ++out.steps;
        break;  // crossing pinned to enclosure resolution; bracket stays valid
      }
      ++out.steps;
    }
    out.mu_star = IntervalRat(lo, hi);
  }

  // The proposition is certified at a rational point strictly above mu0;
  // tighten the bisection while the within-eps claims stay undecided. Near
  // mu0 the hat root is steep in mu, so the probe point may need to sit far
  // closer to mu* than the reported bracket width.
  auto prop_at = [&](const Rat& mu_hat) {
    RatPoly ptilde = from_roots(with_double_root(mu_hat, ctx.rest)).with_ambient(p.ambient());
    RatPoly phat = sub(p, ptilde);
    IntervalRat lam_t = lam(mu_hat);
    IntervalRat lam_h = maxroot(boxplus(phat, r, n), fine).interval();
    return cmp_eq_within(lam_t, target, eps) && cmp_eq_within(lam_h, target, eps);
  };
  Trilean prop = Trilean::indeterminate(eps);
  for (int extra = 0; extra < 60; ++extra) {
    Rat mu_hat = (lo == ctx.mu0) ? hi : lo;
    if (mu_hat == ctx.mu0) break;
    prop = prop_at(mu_hat);
    if (prop.is_true()) break;
    if (lo == hi) break;
    Rat mid = (lo + hi) / 2;
    Trilean pm = pred(mid);
    if (pm.is_true()) {
      hi = mid;
    } else if (pm.is_false()) {
      lo = mid;
    } else {
      // mid is within enclosure resolution of the crossing itself
      prop = prop_at(mid);
      break;
    }
    ++out.steps;
  }
  out.proposition = prop;
  if (!out.mu_star.exact()) out.mu_star = IntervalRat(lo, hi);

  Trilean mono = lemma_low && lemma_high;
  std::vector<Rat> mus;
  for (const auto& [m, v] : evals) mus.push_back(m);
  for (std::size_t i = 0; i + 1 < mus.size(); ++i)
    mono = mono && decide([&](const Rat& f) {
             return cmp_le(lam_at(mus[i], f), lam_at(mus[i + 1], f));
           });
  out.monotone = mono;

  out.trace = json{{"target", interval_to_json(target)},
                   {"lam_mu0", interval_to_json(lam0)},
                   {"lam_mu1", interval_to_json(lam1)},
                   {"lemma_low", trilean_to_json(lemma_low)},
                   {"lemma_high", trilean_to_json(lemma_high)},
                   {"steps", steps}};
  return out;
}

std::vector<Rat> gen_roots(std::mt19937_64& rng, int deg, const std::string& distribution,
                           int root_range, int den_max) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  if (root_range < 1 || den_max < 1) throw std::invalid_argument("bad generator bounds");
  auto rand_rat = [&rng, den_max](int range) {
    std::uniform_int_distribution<int> dd(1, den_max);
    int den = dd(rng);
    std::uniform_int_distribution<long> nd(-static_cast<long>(range) * den,
                                           static_cast<long>(range) * den);
    Rat x(nd(rng), den);
    x.canonicalize();
    return x;
  };
  std::vector<Rat> roots;
  if (distribution == "uniform") {
    for (int i = 0; i < deg; ++i) roots.push_back(rand_rat(root_range));
  } else if (distribution == "clustered") {
    int clusters = std::max(1, deg / 2);
    std::vector<Rat> bases;
    for (int i = 0; i < clusters; ++i) bases.push_back(rand_rat(root_range));
    std::uniform_int_distribution<int> pick(0, clusters - 1);
    std::uniform_int_distribution<int> off(0, den_max);
    for (int i = 0; i < deg; ++i) {
      Rat offset(off(rng), den_max * den_max);
      offset.canonicalize();
      roots.push_back(bases[static_cast<std::size_t>(pick(rng))] + offset);
    }
  } else if (distribution == "arithmetic") {
    Rat a0 = rand_rat(root_range);
    Rat step = rat_abs(rand_rat(root_range)) / std::max(1, deg);
    for (int i = 0; i < deg; ++i) roots.push_back(a0 + Rat(i) * step);
  } else if (distribution == "dominant") {
    for (int i = 0; i < deg; ++i)
      roots.push_back(i == 0 ? rand_rat(root_range) + Rat(3 * root_range)
                             : rand_rat(std::max(1, root_range / 2)));
  } else {
    raise(Errc::ParseError, "unknown distribution '" + distribution + "'");
  }
  return roots;
}

namespace {

const char* kMixedCycle[4] = {"uniform", "clustered", "arithmetic", "dominant"};

std::string pick_dist(const std::string& configured, std::uint64_t trial) {
  if (configured == "mixed") return kMixedCycle[trial % 4];
  return configured;
}

struct TrialResult {
  Trilean verdict = Trilean::yes();
  std::optional<json> violation;
};

std::vector<int> random_subset(std::mt19937_64& rng, int n, int r) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(r));
  std::sort(all.begin(), all.end());
  return all;
}

MultiPoly product_sr(std::mt19937_64& rng, int range, int den_max, bool shifted_past_one) {
  std::uniform_int_distribution<int> dd(1, den_max);
  std::uniform_int_distribution<int> nn(1, range);
  MultiPoly acc(std::vector<int>{0, 0, 0});
  acc.set_coeff({0, 0, 0}, Rat(1));
  for (int v = 0; v < 3; ++v) {
    Rat a(nn(rng), dd(rng));
    a.canonicalize();
    if (shifted_past_one && a < 1) a += 1;
    MultiPoly lin(std::vector<int>{v == 0, v == 1, v == 2});
    std::vector<int> e(3, 0);
    e[static_cast<std::size_t>(v)] = 1;
    lin.set_coeff(e, Rat(1));
    lin.set_coeff({0, 0, 0}, a);
    acc = mp_mul(acc, lin);
  }
  return MultiPoly(std::vector<int>{1, 1, 1}, acc.terms());
}

MultiPoly random_sr(std::mt19937_64& rng, int range, int den_max, bool need_unit_membership) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    bool product = (rng() & 1) != 0;
    if (product) return product_sr(rng, range, den_max, need_unit_membership);
    MultiPoly cand(std::vector<int>{1, 1, 1});
    std::uniform_int_distribution<int> dd(1, den_max);
    std::uniform_int_distribution<int> nn(1, range);
    for (int mask = 0; mask < 8; ++mask) {
      Rat c(nn(rng), dd(rng));
      c.canonicalize();
      cand.set_coeff({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}, c);
    }
    if (!strongly_rayleigh(cand).is_true()) continue;
    if (need_unit_membership) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        std::vector<Rat> a(3, Rat(0));
        a[static_cast<std::size_t>(i)] = Rat(-1);
        ok = above_roots(cand, a).verdict.is_true();
      }
      if (!ok) continue;
    }
    return cand;
  }
  return product_sr(rng, range, den_max, need_unit_membership);
}

// Smallest diagonal threshold c (within eps) with above_roots(p, c*1)
// certified True; returns the certified-in point.
std::optional<Rat> diag_threshold(const MultiPoly& p, const Rat& eps) {
  auto member = [&p](const Rat& c) {
    return above_roots(p, std::vector<Rat>(3, c)).verdict.is_true();
  };
  Rat hi(1);
  int guard = 0;
  while (!member(hi)) {
    hi *= 2;
    if (++guard > 64) return std::nullopt;
  }
  Rat lo = -rat_abs(hi) - 1;
  guard = 0;
  while (member(lo)) {
    lo *= 2;
    if (++guard > 64) return std::nullopt;
  }
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    if (member(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

TrialResult run_trial(const SearchConfig& cfg, std::uint64_t trial) {
  std::mt19937_64 rng = trial_rng(cfg.seed, trial);
  std::string dist = pick_dist(cfg.distribution, trial);
  TrialResult res;
  auto record = [&res, trial](const VerdictReport& rep) {
    res.verdict = rep.verdict;
    if (rep.verdict.is_false())
      res.violation = json{{"trial", trial}, {"report", report_to_json(rep)}};
  };

  if (cfg.conjecture == "2.3") {
    int r_size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
    std::vector<IndexTuple> triples = horn_triples(cfg.n, r_size);
    IndexTuple t = triples[static_cast<std::size_t>(rng() % triples.size())];
    t.L = t.I;
    RatPoly p = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly q = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly r = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    record(verify_4tuple(t, p, q, r, cfg.n, cfg.eps));
    return res;
  }
  if (cfg.conjecture == "2.4") {
    int r_size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n));
    std::vector<IndexTuple> horn = horn_triples(cfg.n, r_size);
    IndexTuple t;
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      t.n = cfg.n;
      t.I = random_subset(rng, cfg.n, r_size);
      t.J = random_subset(rng, cfg.n, r_size);
      t.K = random_subset(rng, cfg.n, r_size);
      t.L.clear();
      found = !std::binary_search(horn.begin(), horn.end(), t);
    }
    if (!found) {
      res.verdict = Trilean::indeterminate(Rat(0));
      return res;
    }
    t.L = t.I;
    RatPoly p = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly q = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly r = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    record(verify_4tuple(t, p, q, r, cfg.n, cfg.eps));
    return res;
  }
  if (cfg.conjecture == "2.5") {
    std::uniform_int_distribution<int> dj(1, cfg.n);
    int j = dj(rng);
    std::uniform_int_distribution<int> dk(1, cfg.n + 1 - j);
    int k = dk(rng);
    std::uniform_int_distribution<int> di(j + k - 1, cfg.n);
    int i = di(rng);
    int m = std::max(j, k);
    RatPoly p = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly q = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    RatPoly r = from_roots(gen_roots(rng, cfg.n, dist, cfg.root_range, cfg.den_max));
    IndexTuple t1{cfg.n, {i}, {m}, {j}, {k}};
    IndexTuple t2{cfg.n, {i}, {cfg.n + 1 - m}, {j}, {k}};
    VerdictReport r1 = verify_4tuple(t1, p, q, r, cfg.n, cfg.eps);
    VerdictReport r2 = verify_4tuple(t2, p, q, r, cfg.n, cfg.eps);
    res.verdict = r1.verdict && r2.verdict;
    if (r1.verdict.is_false() || r2.verdict.is_false()) {
      json both = json::array();
      if (r1.verdict.is_false()) both.push_back(report_to_json(r1));
      if (r2.verdict.is_false()) both.push_back(report_to_json(r2));
      res.violation = json{{"trial", trial}, {"reports", both}};
    }
    return res;
  }
  if (cfg.conjecture == "mv-submodularity") {
    MultiPoly p = random_sr(rng, cfg.root_range, cfg.den_max, false);
    MultiPoly q = random_sr(rng, cfg.root_range, cfg.den_max, false);
    MultiPoly r = random_sr(rng, cfg.root_range, cfg.den_max, false);
    MultiPoly pr = boxplus_gamma(p, r), qr = boxplus_gamma(q, r);
    MultiPoly pqr = boxplus_gamma(boxplus_gamma(p, q), r);
    std::optional<Rat> cy = diag_threshold(pr, cfg.eps);
    std::optional<Rat> cz = diag_threshold(qr, cfg.eps);
    std::optional<Rat> cv = diag_threshold(r, cfg.eps);
    if (!cy || !cz || !cv) {
      res.verdict = Trilean::indeterminate(Rat(0));
      return res;
    }
    Rat u = *cy + *cz - *cv;
    AbVerdict ab = above_roots(pqr, std::vector<Rat>(3, u));
    // A failed candidate decomposition leaves the containment undecided; it
    // is not a certificate against the existential statement.
    res.verdict = ab.verdict.is_true() ? Trilean::yes() : Trilean::indeterminate(cfg.eps);
    return res;
  }
  if (cfg.conjecture == "strong-mv") {
    MultiPoly p = random_sr(rng, cfg.root_range, cfg.den_max, true);
    MultiPoly q = random_sr(rng, cfg.root_range, cfg.den_max, true);
    MultiPoly conv = boxplus_gamma(p, q);
    Trilean acc = Trilean::yes();
    json fails = json::array();
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> a(3, Rat(-1));
      a[static_cast<std::size_t>(i)] -= 1;
      AbVerdict ab = above_roots(conv, a);
      acc = acc && ab.verdict;
      if (ab.verdict.is_false())
        fails.push_back(json{{"direction", i + 1},
                             {"p", mp_to_json(p)},
                             {"q", mp_to_json(q)},
                             {"conv", mp_to_json(conv)}});
    }
    res.verdict = acc;
    if (acc.is_false()) res.violation = json{{"trial", trial}, {"witnesses", fails}};
    return res;
  }
  raise(Errc::UnknownStatement, "unknown conjecture '" + cfg.conjecture + "'");
}

}  // namespace

SearchSummary search_conjectures(const SearchConfig& config) {
  const bool mv = config.conjecture == "mv-submodularity" || config.conjecture == "strong-mv";
  if (config.conjecture != "2.3" && config.conjecture != "2.4" && config.conjecture != "2.5" &&
      !mv)
    raise(Errc::UnknownStatement, "unknown conjecture '" + config.conjecture + "'");
  if (mv && config.n != 3) throw std::invalid_argument("multivariate searches run at n = 3");
  if (!mv && (config.n < 1 || config.n > 6))
    raise(Errc::UnsupportedSize, "n outside [1, 6]");
  if (config.conjecture == "2.4" && config.n < 2)
    throw std::invalid_argument("2.4 needs n >= 2 (no non-Horn triples at n = 1)");
  if (config.trials < 0) throw std::invalid_argument("negative trial count");

  // Horn tables are shared state; fill the cache before fanning out.
  if (!mv)
    for (int r = 1; r <= config.n; ++r) horn_triples(config.n, r);

  std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
  int threads = std::max(1, std::min(config.threads, config.trials));
  auto worker = [&](int offset) {
    for (int t = offset; t < config.trials; t += threads)
      results[static_cast<std::size_t>(t)] = run_trial(config, static_cast<std::uint64_t>(t));
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (std::thread& th : pool) th.join();
  }

  SearchSummary summary;
  summary.config = config;
  for (int t = 0; t < config.trials; ++t) {
    const TrialResult& r = results[static_cast<std::size_t>(t)];
    if (r.verdict.is_true())
      ++summary.verified;
    else if (r.verdict.is_false())
      ++summary.violated;
    else
      ++summary.indeterminate;
    if (r.violation) {
      summary.violating_trials.push_back(static_cast<std::uint64_t>(t));
      summary.violations.push_back(*r.violation);
    }
  }
  return summary;
}

VerdictReport run_statement(const std::string& statement, const json& inputs, const Rat& eps) {
  auto field = [&inputs](const char* key) -> const json& {
    if (!inputs.is_object() || !inputs.contains(key))
      raise(Errc::ParseError, std::string("missing field '") + key + "'");
    return inputs.at(key);
  };
  auto geti = [&field](const char* key) {
    const json& j = field(key);
    if (!j.is_number_integer()) raise(Errc::ParseError, std::string("expected integer ") + key);
    return j.get<int>();
  };
  auto getr = [&field](const char* key) {
    const json& j = field(key);
    if (!j.is_string()) raise(Errc::ParseError, std::string("expected rational string ") + key);
    return rat_from_string(j.get<std::string>());
  };

  if (statement == "triangle")
    return verify_triangle(poly_from_json(field("p")), poly_from_json(field("q")), geti("n"), eps);
  if (statement == "weyl")
    return verify_weyl(poly_from_json(field("p")), poly_from_json(field("q")), geti("n"),
                       geti("i"), geti("j"), eps);
  if (statement == "maj-conv")
    return verify_majorization_conv(poly_from_json(field("p")), poly_from_json(field("q")),
                                    geti("n"), eps);
  if (statement == "maj-preserve")
    return verify_maj_preservation(poly_from_json(field("p")), poly_from_json(field("q")),
                                   poly_from_json(field("r")), geti("n"), eps);
  if (statement == "submodularity")
    return verify_submodularity(poly_from_json(field("p")), poly_from_json(field("q")),
                                poly_from_json(field("r")), geti("n"), eps);
  if (statement == "mss-ualpha")
    return verify_mss_ualpha(poly_from_json(field("p")), poly_from_json(field("q")), geti("n"),
                             getr("alpha"), eps);
  if (statement == "4tuple") {
    IndexTuple t = tuple_from_json(field("tuple"));
    return verify_4tuple(t, poly_from_json(field("p")), poly_from_json(field("q")),
                         poly_from_json(field("r")), t.n, eps);
  }
  if (statement == "basecase")
    return verify_basecase_majorization(poly_from_json(field("p")), poly_from_json(field("q")),
                                        poly_from_json(field("r")), geti("n"), eps);
  if (statement == "sr-check") {
    MultiPoly p = mp_from_json(field("p"));
    VerdictReport rep;
    rep.statement = "sr-check";
    rep.inputs = json{{"p", mp_to_json(p)}};
    rep.verdict = strongly_rayleigh(p);
    rep.details = json::object();
    rep.eps = eps;
    return rep;
  }
  if (statement == "above-roots") {
    MultiPoly p = mp_from_json(field("p"));
    std::vector<Rat> a = rats_from_json(field("a"));
    AbVerdict ab = above_roots(p, a);
    VerdictReport rep;
    rep.statement = "above-roots";
    rep.inputs = json{{"p", mp_to_json(p)}, {"a", rats_to_json(a)}};
    rep.verdict = ab.verdict;
    rep.details = json{{"positive", ab.positive}, {"negative", ab.negative}};
    rep.eps = eps;
    return rep;
  }
  raise(Errc::UnknownStatement, "unknown statement '" + statement + "'");
}

}  // namespace freeconv
