#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/multiaffine.hpp"
#include "freeconv/poly.hpp"

using namespace freeconv;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

MultiPoly MP(std::vector<int> gamma,
             std::vector<std::pair<std::vector<int>, std::string>> terms) {
  MultiPoly p(std::move(gamma));
  for (auto& [mu, c] : terms) p.set_coeff(mu, rat_from_string(c));
  return p;
}

// prod_i (x_i + a_i) over three variables
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

}  // namespace

TEST_CASE("MultiPoly construction and validation") {
  MultiPoly p = MP({1, 1}, {{{1, 1}, "2"}, {{0, 0}, "-3"}});
  CHECK(p.nvars() == 2);
  CHECK(p.coeff({1, 1}) == Rat(2));
  CHECK(p.coeff({1, 0}) == Rat(0));
  CHECK(p.is_multiaffine());

  p.set_coeff({1, 1}, Rat(0));
  CHECK(p.terms().size() == 1);

  CHECK(code_of([] { MP({1, 1}, {{{1}, "1"}}); }) == Errc::LengthMismatch);
  CHECK(code_of([] { MP({1, 1}, {{{2, 0}, "1"}}); }) == Errc::DegreeExceedsAmbient);
  CHECK_FALSE(MP({2, 1}, {{{2, 0}, "1"}}).is_multiaffine());
}

TEST_CASE("partial derivative drops gamma and applies falling factorials") {
  MultiPoly p = MP({1, 1}, {{{1, 1}, "1"}, {{1, 0}, "2"}});
  MultiPoly d1 = partial(p, {1, 0});
  CHECK(d1.gamma() == std::vector<int>{0, 1});
  CHECK(d1.coeff({0, 1}) == Rat(1));
  CHECK(d1.coeff({0, 0}) == Rat(2));

  MultiPoly q = MP({2, 0}, {{{2, 0}, "1"}});
  CHECK(partial(q, {1, 0}).coeff({1, 0}) == Rat(2));
  CHECK(partial(q, {2, 0}).coeff({0, 0}) == Rat(2));
  CHECK(partial(q, {3, 0}).is_zero());
}

TEST_CASE("mshift and meval") {
  MultiPoly p = MP({1, 1}, {{{1, 1}, "1"}});  // x1 x2
  MultiPoly s = mshift(p, {Rat(1), Rat(1)});
  CHECK(s.coeff({1, 1}) == Rat(1));
  CHECK(s.coeff({1, 0}) == Rat(1));
  CHECK(s.coeff({0, 1}) == Rat(1));
  CHECK(s.coeff({0, 0}) == Rat(1));
  CHECK(meval(p, {Rat(3), Rat(5)}) == Rat(15));
  CHECK(meval(s, {Rat(2), Rat(4)}) == Rat(15));
}

TEST_CASE("boxplus_gamma identities") {
  MultiPoly p = product3(Rat(1), Rat(2), Rat(3));

  // x^gamma is the identity at gamma = (1,1,1).
  MultiPoly xg = MP({1, 1, 1}, {{{1, 1, 1}, "1"}});
  CHECK(boxplus_gamma(p, xg) == p);
  CHECK(boxplus_gamma(xg, p) == p);

  // symmetry
  MultiPoly q = product3(Rat(-1), Rat(1, 2), Rat(5));
  CHECK(boxplus_gamma(p, q) == boxplus_gamma(q, p));

  // symbol identity: prod(x_i + w) boxplus prod(x_i + y) = prod(x_i + w + y)
  for (auto [w, y] : {std::pair<Rat, Rat>{Rat(2), Rat(5)}, {Rat(-1, 3), Rat(7, 2)},
                      {Rat(0), Rat(4)}}) {
    MultiPoly pw = product3(w, w, w), py = product3(y, y, y);
    CHECK(boxplus_gamma(pw, py) == product3(w + y, w + y, w + y));
  }

  CHECK(code_of([&] { boxplus_gamma(p, MP({1, 1}, {{{1, 1}, "1"}})); }) == Errc::GammaMismatch);
}

TEST_CASE("boxplus_gamma at gamma=(n) matches n! times the univariate convolution") {
  // x^2 - 1 against itself: univariate gives x^2 - 2, gamma form gives 2!(x^2 - 2).
  MultiPoly u = MP({2}, {{{2}, "1"}, {{0}, "-1"}});
  MultiPoly conv = boxplus_gamma(u, u);
  CHECK(conv.coeff({2}) == Rat(2));
  CHECK(conv.coeff({1}) == Rat(0));
  CHECK(conv.coeff({0}) == Rat(-4));

  RatPoly uni = boxplus(RatPoly({Rat(-1), Rat(0), Rat(1)}, 2), RatPoly({Rat(-1), Rat(0), Rat(1)}, 2), 2);
  CHECK(conv.coeff({0}) == Rat(2) * uni.coeff(0));
  CHECK(conv.coeff({2}) == Rat(2) * uni.coeff(2));
}

TEST_CASE("strongly_rayleigh certificates") {
  CHECK(strongly_rayleigh(product3(Rat(1), Rat(2), Rat(3))).is_true());
  CHECK(strongly_rayleigh(MP({1, 1}, {{{1, 1}, "1"}, {{0, 0}, "1"}})).is_false());

  // Four variables fall back to sampling: a negative witness is still
  // certified, a true square stays unresolved.
  MultiPoly p4 = MP({1, 1, 1, 1}, {{{1, 1, 0, 0}, "1"}, {{0, 0, 1, 1}, "1"}});
  CHECK(strongly_rayleigh(p4).is_false());

  // (x1+x2+1)(x3+x4+1): Delta_12 = (x3+x4+1)^2 has two active variables.
  MultiPoly two_blocks = MP({1, 1, 1, 1}, {{{1, 0, 1, 0}, "1"}, {{1, 0, 0, 1}, "1"},
                                           {{0, 1, 1, 0}, "1"}, {{0, 1, 0, 1}, "1"},
                                           {{1, 0, 0, 0}, "1"}, {{0, 1, 0, 0}, "1"},
                                           {{0, 0, 1, 0}, "1"}, {{0, 0, 0, 1}, "1"},
                                           {{0, 0, 0, 0}, "1"}});
  CHECK(strongly_rayleigh(two_blocks).is_indeterminate());

  // A pure product resolves exactly: every Delta collapses to zero.
  MultiPoly prod4(std::vector<int>{1, 1, 1, 1});
  for (int mask = 0; mask < 16; ++mask)
    prod4.set_coeff({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1}, Rat(1));
  CHECK(strongly_rayleigh(prod4).is_true());

  CHECK(code_of([] { strongly_rayleigh(MP({2}, {{{2}, "1"}})); }) == Errc::NotMultiaffine);
}

TEST_CASE("above_roots on products is the orthant test") {
  MultiPoly p = product3(Rat(1), Rat(1), Rat(1));
  CHECK(above_roots(p, {Rat(0), Rat(0), Rat(0)}).verdict.is_true());
  CHECK(above_roots(p, {Rat(-2), Rat(0), Rat(0)}).verdict.is_false());
  AbVerdict deep = above_roots(p, {Rat(-2), Rat(-2), Rat(-2)});
  CHECK(deep.verdict.is_false());
  CHECK(deep.positive > 0);
  CHECK(deep.negative > 0);

  CHECK(code_of([] {
          above_roots(MP({1, 1}, {{{1, 1}, "1"}, {{0, 0}, "1"}}), {Rat(0), Rat(0)});
        }) == Errc::StabilityNotCertified);
}

TEST_CASE("potential is the log-derivative ratio at the point") {
  // p = (x1+1)(x2+1): Phi_1 at (1,1) is d1 p / p = 1/2.
  MultiPoly p = product3(Rat(1), Rat(1), Rat(1));
  CHECK(potential(p, 1, {Rat(1), Rat(1), Rat(1)}) == Rat(1, 2));
  CHECK(code_of([&] { potential(p, 1, {Rat(-1), Rat(0), Rat(0)}); }) == Errc::PoleAtPoint);
  CHECK(code_of([&] { potential(p, 4, {Rat(0), Rat(0), Rat(0)}); }) == Errc::IndexOutOfRange);
}

TEST_CASE("reproduce_counterexample: every exact check except the quoted value") {
  ReproduceReport rep = reproduce_counterexample();
  REQUIRE(rep.checks.size() == 12);
  CHECK_FALSE(rep.all_pass);

  for (const CheckItem& c : rep.checks) {
    if (c.name == "conv_value_at_minus_1_minus_e1") {
      CHECK_FALSE(c.pass);
      CHECK(c.expected == "-1450/441");
      CHECK(c.computed == "-778/441");
    } else {
      INFO(c.name, ": expected ", c.expected, ", computed ", c.computed);
      CHECK(c.pass);
    }
  }
  CHECK(rep.value_at_point == Rat(-778, 441));
  CHECK(rep.conv.coeff({1, 1, 1}) == Rat(64, 441));
  CHECK(rep.conv.coeff({0, 0, 0}) == Rat(1520, 21));
}
