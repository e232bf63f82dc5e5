#include "freeconv/multiaffine.hpp"

#include <algorithm>
#include <stdexcept>

#include "freeconv/rng.hpp"

namespace freeconv {

MultiPoly::MultiPoly(std::vector<int> gamma) : gamma_(std::move(gamma)) {
  for (int g : gamma_)
    if (g < 0) throw std::invalid_argument("negative gamma entry");
}

MultiPoly::MultiPoly(std::vector<int> gamma, std::map<std::vector<int>, Rat> terms)
    : MultiPoly(std::move(gamma)) {
  for (auto& [mu, c] : terms) {
    if (static_cast<int>(mu.size()) != nvars())
      raise(Errc::LengthMismatch, "exponent arity differs from variable count");
    for (int i = 0; i < nvars(); ++i) {
      int e = mu[static_cast<std::size_t>(i)];
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e > gamma_[static_cast<std::size_t>(i)])
        raise(Errc::DegreeExceedsAmbient, "exponent exceeds gamma");
    }
    if (c != 0) terms_.emplace(mu, c);
  }
}

bool MultiPoly::is_multiaffine() const {
  for (const auto& [mu, c] : terms_)
    for (int e : mu)
      if (e > 1) return false;
  return true;
}

Rat MultiPoly::coeff(const std::vector<int>& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::set_coeff(const std::vector<int>& mu, const Rat& c) {
  if (static_cast<int>(mu.size()) != nvars())
    raise(Errc::LengthMismatch, "exponent arity differs from variable count");
  for (int i = 0; i < nvars(); ++i)
    if (mu[static_cast<std::size_t>(i)] < 0 ||
        mu[static_cast<std::size_t>(i)] > gamma_[static_cast<std::size_t>(i)])
      raise(Errc::DegreeExceedsAmbient, "exponent exceeds gamma");
  if (c == 0)
    terms_.erase(mu);
  else
    terms_[mu] = c;
}

bool MultiPoly::same_poly(const MultiPoly& o) const {
  return nvars() == o.nvars() && terms_ == o.terms_;
}

MultiPoly mp_add(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) raise(Errc::LengthMismatch, "adding different variable counts");
  std::vector<int> gamma(p.gamma());
  for (int i = 0; i < p.nvars(); ++i)
    gamma[static_cast<std::size_t>(i)] =
        std::max(gamma[static_cast<std::size_t>(i)], q.gamma()[static_cast<std::size_t>(i)]);
  std::map<std::vector<int>, Rat> terms = p.terms();
  for (const auto& [mu, c] : q.terms()) {
    auto [it, inserted] = terms.emplace(mu, c);
    if (!inserted) it->second += c;
  }
  return MultiPoly(std::move(gamma), std::move(terms));
}

MultiPoly mp_sub(const MultiPoly& p, const MultiPoly& q) { return mp_add(p, mp_scale(q, Rat(-1))); }

MultiPoly mp_scale(const MultiPoly& p, const Rat& c) {
  std::map<std::vector<int>, Rat> terms;
  if (c != 0)
    for (const auto& [mu, v] : p.terms()) terms.emplace(mu, v * c);
  return MultiPoly(p.gamma(), std::move(terms));
}

MultiPoly mp_mul(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) raise(Errc::LengthMismatch, "multiplying different variable counts");
  std::vector<int> gamma(p.gamma());
  for (int i = 0; i < p.nvars(); ++i)
    gamma[static_cast<std::size_t>(i)] += q.gamma()[static_cast<std::size_t>(i)];
  std::map<std::vector<int>, Rat> terms;
  for (const auto& [mu, a] : p.terms())
    for (const auto& [nu, b] : q.terms()) {
      std::vector<int> e(mu);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += nu[i];
      auto [it, inserted] = terms.emplace(std::move(e), a * b);
      if (!inserted) it->second += a * b;
    }
  std::map<std::vector<int>, Rat> trimmed;
  for (auto& [mu, c] : terms)
    if (c != 0) trimmed.emplace(mu, std::move(c));
  return MultiPoly(std::move(gamma), std::move(trimmed));
}

MultiPoly partial(const MultiPoly& p, const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != p.nvars())
    raise(Errc::LengthMismatch, "derivative order arity differs from variable count");
  for (int e : mu)
    if (e < 0) throw std::invalid_argument("negative derivative order");
  std::vector<int> gamma(p.gamma());
  for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = std::max(gamma[i] - mu[i], 0);
  std::map<std::vector<int>, Rat> terms;
  for (const auto& [nu, c] : p.terms()) {
    bool ok = true;
    Rat f(1);
    std::vector<int> e(nu);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (nu[i] < mu[i]) {
        ok = false;
        break;
      }
      f *= Rat(factorial(nu[i]) / factorial(nu[i] - mu[i]));
      e[i] = nu[i] - mu[i];
    }
    if (!ok) continue;
    auto [it, inserted] = terms.emplace(std::move(e), c * f);
    if (!inserted) it->second += c * f;
  }
  return MultiPoly(std::move(gamma), std::move(terms));
}

MultiPoly mshift(const MultiPoly& p, const std::vector<Rat>& a) {
  if (static_cast<int>(a.size()) != p.nvars())
    raise(Errc::LengthMismatch, "shift arity differs from variable count");
  std::map<std::vector<int>, Rat> terms = p.terms();
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) continue;
    std::map<std::vector<int>, Rat> next;
    for (const auto& [mu, c] : terms) {
      int e = mu[v];
      for (int j = 0; j <= e; ++j) {
        Rat w = c * Rat(binomial(e, j)) * rat_pow(a[v], e - j);
        if (w == 0) continue;
        std::vector<int> nu(mu);
        nu[v] = j;
        auto [it, inserted] = next.emplace(std::move(nu), w);
        if (!inserted) it->second += w;
      }
    }
    terms.clear();
    for (auto& [mu, c] : next)
      if (c != 0) terms.emplace(mu, std::move(c));
  }
  return MultiPoly(p.gamma(), std::move(terms));
}

Rat meval(const MultiPoly& p, const std::vector<Rat>& a) {
  if (static_cast<int>(a.size()) != p.nvars())
    raise(Errc::LengthMismatch, "evaluation arity differs from variable count");
  Rat acc(0);
  for (const auto& [mu, c] : p.terms()) {
    Rat t = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mu[i] != 0) t *= rat_pow(a[i], mu[i]);
    acc += t;
  }
  return acc;
}

MultiPoly boxplus_gamma(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars() || p.gamma() != q.gamma())
    raise(Errc::GammaMismatch, "convolution requires matching gamma");
  const std::vector<int>& gamma = p.gamma();
  MultiPoly acc(gamma);
  for (const auto& [nu, c] : q.terms()) {
    // d^(gamma-mu) q at 0 with gamma - mu = nu picks out this term: nu! * c.
    Rat w = c;
    for (int e : nu) w *= Rat(factorial(e));
    std::vector<int> order(gamma);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] -= nu[i];
    acc = mp_add(acc, mp_scale(partial(p, order), w));
  }
  return MultiPoly(gamma, acc.terms());
}

namespace {

MultiPoly delta_pair(const MultiPoly& p, int i, int j) {
  std::vector<int> ei(static_cast<std::size_t>(p.nvars()), 0);
  std::vector<int> ej(ei), eij(ei);
  ei[static_cast<std::size_t>(i)] = 1;
  ej[static_cast<std::size_t>(j)] = 1;
  eij[static_cast<std::size_t>(i)] = 1;
  eij[static_cast<std::size_t>(j)] = 1;
  return mp_sub(mp_mul(partial(p, ei), partial(p, ej)), mp_mul(p, partial(p, eij)));
}

std::vector<std::size_t> active_vars(const MultiPoly& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.nvars()), false);
  for (const auto& [mu, c] : p.terms())
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mu[i] > 0) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

// Nonnegativity of a polynomial of degree <= 2 in each variable. Exact for
// zero or one active variable; certified-negative or Indeterminate beyond.
Trilean nonnegative_everywhere(const MultiPoly& d) {
  std::vector<std::size_t> vars = active_vars(d);
  if (vars.empty()) {
    std::vector<int> origin(static_cast<std::size_t>(d.nvars()), 0);
    return d.coeff(origin) >= 0 ? Trilean::yes() : Trilean::no();
  }
  if (vars.size() == 1) {
    std::size_t v = vars[0];
    Rat a(0), b(0), c(0);
    for (const auto& [mu, coeff] : d.terms()) {
      if (mu[v] == 2)
        a = coeff;
      else if (mu[v] == 1)
        b = coeff;
      else
        c = coeff;
    }
    if (a == 0) return b != 0 ? Trilean::no() : (c >= 0 ? Trilean::yes() : Trilean::no());
    if (a < 0) return Trilean::no();
    return b * b - 4 * a * c <= 0 ? Trilean::yes() : Trilean::no();
  }
  // Exact sampling: a certified negative value refutes; otherwise undecided.
  const Rat grid[5] = {Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)};
  std::vector<Rat> point(static_cast<std::size_t>(d.nvars()), Rat(0));
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = grid[idx[i]];
    if (meval(d, point) < 0) return Trilean::no();
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < 5) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  std::mt19937_64 rng = trial_rng(0x53525f53414d504cULL, 0);
  std::uniform_int_distribution<int> num(-64, 64), den(1, 8);
  for (int s = 0; s < 256; ++s) {
    for (std::size_t v : vars) {
      Rat x(num(rng), den(rng));
      x.canonicalize();
      point[v] = x;
    }
    if (meval(d, point) < 0) return Trilean::no();
  }
  return Trilean::indeterminate(Rat(0));
}

}  // namespace

Trilean strongly_rayleigh(const MultiPoly& p) {
  if (!p.is_multiaffine()) raise(Errc::NotMultiaffine, "strong Rayleigh check needs gamma <= 1");
  Trilean acc = Trilean::yes();
  for (int i = 0; i < p.nvars(); ++i)
    for (int j = i + 1; j < p.nvars(); ++j) {
      MultiPoly d = delta_pair(p, i, j);
      std::vector<int> ei(static_cast<std::size_t>(p.nvars()), 0), ej(ei);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      if (!partial(d, ei).is_zero() || !partial(d, ej).is_zero())
        throw std::logic_error("Delta depends on its own pair");
      acc = acc && nonnegative_everywhere(d);
      if (acc.is_false()) return acc;
    }
  return acc;
}

AbVerdict above_roots(const MultiPoly& p, const std::vector<Rat>& a) {
  Trilean sr = strongly_rayleigh(p);
  if (!sr.is_true())
    raise(Errc::StabilityNotCertified, "strong Rayleigh certificate is " + sr.str());
  AbVerdict out;
  MultiPoly shifted = mshift(p, a);
  for (const auto& [mu, c] : shifted.terms()) {
    if (c > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  out.verdict =
      (out.positive == 0 || out.negative == 0) ? Trilean::yes() : Trilean::no();
  return out;
}

Rat potential(const MultiPoly& p, int i, const std::vector<Rat>& a) {
  if (i < 1 || i > p.nvars()) raise(Errc::IndexOutOfRange, "variable index " + std::to_string(i));
  Rat denom = meval(p, a);
  if (denom == 0) raise(Errc::PoleAtPoint, "p vanishes at the evaluation point");
  std::vector<int> ei(static_cast<std::size_t>(p.nvars()), 0);
  ei[static_cast<std::size_t>(i - 1)] = 1;
  return meval(partial(p, ei), a) / denom;
}

namespace {

MultiPoly counterexample_input() {
  MultiPoly p(std::vector<int>{1, 1, 1});
  auto set = [&p](int a, int b, int c, const char* v) {
    p.set_coeff({a, b, c}, rat_from_string(v));
  };
  set(1, 1, 1, "8/21");
  set(1, 1, 0, "80/21");
  set(1, 0, 1, "27/7");
  set(0, 1, 1, "1");
  set(1, 0, 0, "4");
  set(0, 1, 0, "4");
  set(0, 0, 1, "4");
  set(0, 0, 0, "4");
  return p;
}

MultiPoly scaled_square_of_linear(int var, const Rat& slope, const Rat& offset, const Rat& s) {
  MultiPoly l(std::vector<int>{1, 1, 1});
  std::vector<int> e(3, 0);
  e[static_cast<std::size_t>(var)] = 1;
  l.set_coeff(e, slope);
  l.set_coeff({0, 0, 0}, offset);
  return mp_scale(mp_mul(l, l), s);
}

std::string mp_brief(const MultiPoly& p) {
  std::string s;
  for (const auto& [mu, c] : p.terms()) {
    if (!s.empty()) s += ", ";
    s += "(";
    for (std::size_t i = 0; i < mu.size(); ++i)
      s += (i ? "," : "") + std::to_string(mu[i]);
    s += "): " + rat_to_string(c);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ReproduceReport reproduce_counterexample() {
  ReproduceReport rep;
  MultiPoly p = counterexample_input();
  auto push = [&rep](const std::string& name, bool pass, std::string expected,
                     std::string computed) {
    rep.checks.push_back({name, pass, std::move(expected), std::move(computed)});
  };

  Trilean sr = strongly_rayleigh(p);
  push("input_strongly_rayleigh", sr.is_true(), "true", sr.str());

  struct DeltaCase {
    int i, j, var;
    const char *slope, *offset, *scale;
  };
  const DeltaCase cases[3] = {
      {0, 1, 2, "7", "4", "1/21"},
      {0, 2, 1, "2", "1", "4/7"},
      {1, 2, 0, "22", "21", "4/147"},
  };
  for (const DeltaCase& dc : cases) {
    MultiPoly got = delta_pair(p, dc.i, dc.j);
    MultiPoly want = scaled_square_of_linear(dc.var, rat_from_string(dc.slope),
                                             rat_from_string(dc.offset), rat_from_string(dc.scale));
    std::string name =
        "delta_" + std::to_string(dc.i + 1) + std::to_string(dc.j + 1) + "_closed_form";
    push(name, got.same_poly(want), mp_brief(want), mp_brief(got));
  }

  for (int i = 0; i < 3; ++i) {
    std::vector<Rat> a(3, Rat(0));
    a[static_cast<std::size_t>(i)] = Rat(-1);
    AbVerdict ab = above_roots(p, a);
    push("above_roots_minus_e" + std::to_string(i + 1), ab.verdict.is_true(), "true",
         ab.verdict.str());
  }

  rep.conv = boxplus_gamma(p, p);
  MultiPoly want_conv(std::vector<int>{1, 1, 1});
  auto setw = [&want_conv](int a, int b, int c, const char* v) {
    want_conv.set_coeff({a, b, c}, rat_from_string(v));
  };
  setw(1, 1, 1, "64/441");
  setw(1, 1, 0, "1280/441");
  setw(1, 0, 1, "144/49");
  setw(0, 1, 1, "16/21");
  setw(1, 0, 0, "4768/147");
  setw(0, 1, 0, "32/3");
  setw(0, 0, 1, "226/21");
  setw(0, 0, 0, "1520/21");
  push("conv_coefficients", rep.conv.same_poly(want_conv), mp_brief(want_conv),
       mp_brief(rep.conv));

  Trilean sr_conv = strongly_rayleigh(rep.conv);
  push("conv_strongly_rayleigh", sr_conv.is_true(), "true", sr_conv.str());

  std::vector<Rat> pt{Rat(-2), Rat(-1), Rat(-1)};
  rep.value_at_point = meval(rep.conv, pt);
  push("conv_value_at_minus_1_minus_e1", rep.value_at_point == rat_from_string("-1450/441"),
       "-1450/441", rat_to_string(rep.value_at_point));
  push("conv_value_negative", rep.value_at_point < 0, "< 0", rat_to_string(rep.value_at_point));

  AbVerdict ab_conv = above_roots(rep.conv, pt);
  push("conv_membership_refuted", ab_conv.verdict.is_false(), "false", ab_conv.verdict.str());

  rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const CheckItem& c) { return c.pass; });
  return rep;
}

}  // namespace freeconv
