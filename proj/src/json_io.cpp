#include "freeconv/json_io.hpp"

namespace freeconv {

using nlohmann::json;

namespace {

std::string need_string(const json& j, const char* what) {
  if (!j.is_string()) raise(Errc::ParseError, std::string("expected string for ") + what);
  return j.get<std::string>();
}

int need_int(const json& j, const char* what) {
  if (!j.is_number_integer()) raise(Errc::ParseError, std::string("expected integer for ") + what);
  return j.get<int>();
}

const json& need_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    raise(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> ints_from_json(const json& j, const char* what) {
  if (!j.is_array()) raise(Errc::ParseError, std::string("expected array for ") + what);
  std::vector<int> out;
  for (const json& v : j) out.push_back(need_int(v, what));
  return out;
}

}  // namespace

json poly_to_json(const RatPoly& p) {
  json coeffs = json::array();
  for (int i = 0; i <= p.ambient(); ++i) coeffs.push_back(rat_to_string(p.coeff(i)));
  return json{{"n", p.ambient()}, {"coeffs", coeffs}};
}

RatPoly poly_from_json(const json& j) {
  int n = need_int(need_field(j, "n"), "polynomial ambient degree");
  const json& arr = need_field(j, "coeffs");
  if (!arr.is_array()) raise(Errc::ParseError, "expected coefficient array");
  std::vector<Rat> coeffs;
  for (const json& c : arr) coeffs.push_back(rat_from_string(need_string(c, "coefficient")));
  if (n < 0) raise(Errc::ParseError, "negative ambient degree");
  return RatPoly(std::move(coeffs), n);
}

json interval_to_json(const IntervalRat& x) {
  return json{{"lo", rat_to_string(x.lo)}, {"hi", rat_to_string(x.hi)}};
}

json rootvec_to_json(const RootVector& rv) {
  json out = json::array();
  for (const RootEnclosure& e : rv.enclosures())
    out.push_back(json{{"lo", rat_to_string(e.lo)}, {"hi", rat_to_string(e.hi)}, {"mult", e.mult}});
  return out;
}

RootVector rootvec_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::ParseError, "expected root enclosure array");
  std::vector<RootEnclosure> enc;
  Rat sum(0);
  for (const json& e : j) {
    RootEnclosure r;
    r.lo = rat_from_string(need_string(need_field(e, "lo"), "lo"));
    r.hi = rat_from_string(need_string(need_field(e, "hi"), "hi"));
    r.mult = need_int(need_field(e, "mult"), "mult");
    // Reconstructed sums fall back to the enclosure midpoints; exactness is
    // only preserved when every enclosure is a point.
    sum += Rat(r.mult) * (r.lo + r.hi) / 2;
    enc.push_back(r);
  }
  return RootVector(std::move(enc), sum);
}

json trilean_to_json(const Trilean& t) {
  if (t.is_true()) return json("true");
  if (t.is_false()) return json("false");
  return json{{"indeterminate", rat_to_string(t.width())}};
}

json tuple_to_json(const IndexTuple& t) {
  json out{{"n", t.n}, {"I", t.I}, {"J", t.J}, {"K", t.K}};
  if (!t.L.empty()) out["L"] = t.L;
  return out;
}

IndexTuple tuple_from_json(const json& j) {
  IndexTuple t;
  t.n = need_int(need_field(j, "n"), "tuple n");
  t.I = ints_from_json(need_field(j, "I"), "I");
  t.J = ints_from_json(need_field(j, "J"), "J");
  t.K = ints_from_json(need_field(j, "K"), "K");
  if (j.contains("L")) t.L = ints_from_json(j.at("L"), "L");
  return t;
}

json mp_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [mu, c] : p.terms())
    terms.push_back(json{{"mu", mu}, {"c", rat_to_string(c)}});
  return json{{"gamma", p.gamma()}, {"terms", terms}};
}

MultiPoly mp_from_json(const json& j) {
  std::vector<int> gamma = ints_from_json(need_field(j, "gamma"), "gamma");
  const json& arr = need_field(j, "terms");
  if (!arr.is_array()) raise(Errc::ParseError, "expected term array");
  std::map<std::vector<int>, Rat> terms;
  for (const json& t : arr) {
    std::vector<int> mu = ints_from_json(need_field(t, "mu"), "mu");
    Rat c = rat_from_string(need_string(need_field(t, "c"), "term coefficient"));
    auto [it, inserted] = terms.emplace(std::move(mu), c);
    if (!inserted) it->second += c;
  }
  return MultiPoly(std::move(gamma), std::move(terms));
}

json rats_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

std::vector<Rat> rats_from_json(const json& j) {
  if (!j.is_array()) raise(Errc::ParseError, "expected rational array");
  std::vector<Rat> out;
  for (const json& x : j) out.push_back(rat_from_string(need_string(x, "rational entry")));
  return out;
}

json matrix_to_json(const std::vector<std::vector<Rat>>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(rats_to_json(row));
  return out;
}

json report_to_json(const VerdictReport& r) {
  json out{{"statement", r.statement},
           {"inputs", r.inputs},
           {"verdict", trilean_to_json(r.verdict)},
           {"details", r.details},
           {"eps", rat_to_string(r.eps)}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json falsify_to_json(const IndexTuple& t, const FalsifyOutcome& o) {
  json out{{"tuple", tuple_to_json(t)},
           {"violated", o.violated},
           {"trials_run", o.trials_run}};
  if (o.violated) {
    out["trial"] = o.trial;
    out["A"] = matrix_to_json(o.a);
    out["B"] = matrix_to_json(o.b);
    out["lhs_lo"] = rat_to_string(o.lhs_lo);
    out["rhs_hi"] = rat_to_string(o.rhs_hi);
  }
  return out;
}

json reproduce_to_json(const ReproduceReport& r) {
  json checks = json::array();
  for (const CheckItem& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"expected", c.expected},
                          {"computed", c.computed}});
  return json{{"checks", checks},
              {"all_pass", r.all_pass},
              {"conv", mp_to_json(r.conv)},
              {"value_at_point", rat_to_string(r.value_at_point)}};
}

json summary_to_json(const SearchSummary& s) {
  return json{{"statement", s.config.conjecture},
              {"n", s.config.n},
              {"trials", s.config.trials},
              {"seed", s.config.seed},
              {"eps", rat_to_string(s.config.eps)},
              {"distribution", s.config.distribution},
              {"rng", kRngId},
              {"verified", s.verified},
              {"violated", s.violated},
              {"indeterminate", s.indeterminate},
              {"seeds", s.violating_trials},
              {"violations", s.violations}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::ParseError, "malformed JSON input");
  return j;
}

}  // namespace freeconv
