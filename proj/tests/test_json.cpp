#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

std::vector<Rat> R(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  for (const std::string& s : v) out.push_back(rat_from_string(s));
  return out;
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  RatPoly p = RatPoly(R({"-1/2", "0", "3"}), 4);
  json j = poly_to_json(p);
  CHECK(j.at("n") == 4);
  CHECK(j.at("coeffs").size() == 5);  // padded to ambient
  CHECK(j.at("coeffs")[0] == "-1/2");
  CHECK(j.at("coeffs")[4] == "0");
  CHECK(poly_from_json(j) == p);

  CHECK(poly_from_json(json{{"n", 2}, {"coeffs", json::array({"0", "0", "0"})}}).is_zero());

  CHECK(code_of([] { poly_from_json(json{{"coeffs", json::array({"1"})}}); }) == Errc::ParseError);
  CHECK(code_of([] { poly_from_json(json{{"n", 1}, {"coeffs", json::array({"1", "2", "3"})}}); }) ==
        Errc::DegreeExceedsAmbient);
  CHECK(code_of([] { poly_from_json(json{{"n", 1}, {"coeffs", json::array({"x"})}}); }) ==
        Errc::ParseError);
}

TEST_CASE("interval and trilean JSON forms") {
  json j = interval_to_json(IntervalRat(Rat(1, 3), Rat(1, 2)));
  CHECK(j.at("lo") == "1/3");
  CHECK(j.at("hi") == "1/2");

  CHECK(trilean_to_json(Trilean::yes()) == json("true"));
  CHECK(trilean_to_json(Trilean::no()) == json("false"));
  json ind = trilean_to_json(Trilean::indeterminate(Rat(1, 8)));
  CHECK(ind.at("indeterminate") == "1/8");
}

TEST_CASE("root vector JSON round trip") {
  RootVector rv = root_vector(from_roots(R({"2", "2", "-1/3"})), rat_pow2_neg(20));
  json j = rootvec_to_json(rv);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0].at("mult") == 2);
  RootVector back = rootvec_from_json(j);
  CHECK(back.count() == 3);
  CHECK(back.exact_sum() == rv.exact_sum());
  CHECK(back.at(1).lo == Rat(2));
}

TEST_CASE("index tuple JSON round trip, with and without L") {
  IndexTuple t;
  t.n = 3;
  t.I = {1, 3};
  t.J = {1, 2};
  t.K = {2, 3};
  json j = tuple_to_json(t);
  CHECK_FALSE(j.contains("L"));
  CHECK(tuple_from_json(j) == t);

  t.L = {1, 2};
  json j2 = tuple_to_json(t);
  CHECK(j2.at("L") == json::array({1, 2}));
  CHECK(tuple_from_json(j2) == t);

  CHECK(code_of([] { tuple_from_json(json{{"n", 2}}); }) == Errc::ParseError);
}

TEST_CASE("multiaffine JSON round trip") {
  MultiPoly p(std::vector<int>{1, 1, 1});
  p.set_coeff({1, 1, 0}, rat_from_string("80/21"));
  p.set_coeff({0, 0, 0}, Rat(4));
  json j = mp_to_json(p);
  CHECK(j.at("gamma") == json::array({1, 1, 1}));
  CHECK(mp_from_json(j) == p);
  CHECK(code_of([] { mp_from_json(json{{"gamma", json::array({1})}}); }) == Errc::ParseError);
}

TEST_CASE("report JSON carries verdict, inputs, eps, witness") {
  VerdictReport rep;
  rep.statement = "triangle";
  rep.inputs = json{{"n", 2}};
  rep.verdict = Trilean::indeterminate(Rat(1, 16));
  rep.details = json{{"note", 1}};
  rep.eps = rat_pow2_neg(40);
  json j = report_to_json(rep);
  CHECK(j.at("statement") == "triangle");
  CHECK(j.at("verdict").at("indeterminate") == "1/16");
  CHECK(j.at("eps") == "1/1099511627776");
  CHECK_FALSE(j.contains("witness"));
  rep.witness = json{{"w", 1}};
  CHECK(report_to_json(rep).contains("witness"));
}

TEST_CASE("canonical_dump is stable and parse_json rejects junk") {
  json j = json{{"b", 1}, {"a", 2}};
  std::string s = canonical_dump(j);
  CHECK(s.back() == '\n');
  CHECK(s == canonical_dump(parse_json(s)));
  CHECK(code_of([] { parse_json("{nope"); }) == Errc::ParseError);
}

TEST_CASE("search summary JSON names the RNG and echoes the config") {
  SearchConfig cfg;
  cfg.conjecture = "2.3";
  cfg.n = 2;
  cfg.trials = 3;
  cfg.seed = 42;
  SearchSummary s = search_conjectures(cfg);
  json j = summary_to_json(s);
  CHECK(j.at("rng") == "splitmix64+mt19937_64");
  CHECK(j.at("statement") == "2.3");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("trials") == 3);
  CHECK(j.at("verified").get<int>() + j.at("violated").get<int>() +
            j.at("indeterminate").get<int>() ==
        3);
}
