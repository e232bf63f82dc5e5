#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "freeconv/json_io.hpp"
#include "freeconv/majorization.hpp"
#include "freeconv/multiaffine.hpp"
#include "freeconv/poly.hpp"
#include "freeconv/roots.hpp"
#include "freeconv/verify.hpp"

namespace {

using freeconv::Errc;
using freeconv::Rat;
using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) freeconv::raise(Errc::ParseError, "cannot open input '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) freeconv::raise(Errc::ParseError, "cannot open output '" + path + "'");
  f << text;
}

Rat parse_eps(const std::string& s) {
  Rat eps = freeconv::rat_from_string(s);
  if (eps <= 0) freeconv::raise(Errc::ParseError, "eps must be positive");
  return eps;
}

int env_threads() {
  const char* raw = std::getenv("FREECONV_THREADS");
  if (!raw) return 1;
  int t = std::atoi(raw);
  return t < 1 ? 1 : t;
}

int exit_code_for(const freeconv::Trilean& v) {
  if (v.is_true()) return 0;
  if (v.is_false()) return 3;
  return 2;
}

int required_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    freeconv::raise(Errc::ParseError, std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite free additive convolution toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  std::string format = "json";
  std::string eps_str = "1/1099511627776";
  std::string statement;
  int rc = 0;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "input JSON file (default stdin)");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json"}));
  };

  auto* conv = app.add_subcommand("convolve", "additive convolution of two polynomials");
  add_io(conv);
  int conv_n = 0;
  conv->add_option("--n", conv_n, "ambient degree (overrides the input field)");
  conv->callback([&] {
    json in = freeconv::parse_json(slurp(in_path));
    if (in.at("p").contains("terms")) {
      freeconv::MultiPoly p = freeconv::mp_from_json(in.at("p"));
      freeconv::MultiPoly q = freeconv::mp_from_json(in.at("q"));
      emit(out_path,
           freeconv::canonical_dump(freeconv::mp_to_json(freeconv::boxplus_gamma(p, q))));
      return;
    }
    freeconv::RatPoly p = freeconv::poly_from_json(in.at("p"));
    freeconv::RatPoly q = freeconv::poly_from_json(in.at("q"));
    int n = conv_n > 0             ? conv_n
            : in.contains("n")     ? required_int(in, "n")
                                   : std::max(p.ambient(), q.ambient());
    emit(out_path, freeconv::canonical_dump(freeconv::poly_to_json(freeconv::boxplus(p, q, n))));
  });

  auto* roots = app.add_subcommand("roots", "certified real roots of a polynomial");
  add_io(roots);
  roots->add_option("--eps", eps_str, "enclosure width bound (rational)");
  roots->callback([&] {
    json in = freeconv::parse_json(slurp(in_path));
    const json& jp = in.contains("coeffs") ? in : in.at("p");
    freeconv::RootVector rv =
        freeconv::root_vector(freeconv::poly_from_json(jp), parse_eps(eps_str));
    emit(out_path, freeconv::canonical_dump(freeconv::rootvec_to_json(rv)));
  });

  auto* verify = app.add_subcommand("verify", "verify an inequality statement");
  add_io(verify);
  verify->add_option("--statement", statement, "statement id")->required();
  verify->add_option("--eps", eps_str, "refinement parameter (rational)");
  verify->callback([&] {
    json in = freeconv::parse_json(slurp(in_path));
    freeconv::VerdictReport rep = freeconv::run_statement(statement, in, parse_eps(eps_str));
    emit(out_path, freeconv::canonical_dump(freeconv::report_to_json(rep)));
    rc = exit_code_for(rep.verdict);
  });

  auto* search = app.add_subcommand("search", "randomized conjecture sweep");
  add_io(search);
  freeconv::SearchConfig cfg;
  std::uint64_t seed = 0;
  search->add_option("--statement", cfg.conjecture, "conjecture id")->required();
  search->add_option("--trials", cfg.trials, "number of trials");
  search->add_option("--seed", seed, "base RNG seed");
  search->add_option("--n", cfg.n, "polynomial degree");
  search->add_option("--eps", eps_str, "refinement parameter (rational)");
  search->callback([&] {
    cfg.seed = seed;
    cfg.eps = parse_eps(eps_str);
    cfg.threads = env_threads();
    freeconv::SearchSummary s = freeconv::search_conjectures(cfg);
    emit(out_path, freeconv::canonical_dump(freeconv::summary_to_json(s)));
  });

  auto* horn = app.add_subcommand("horn", "Horn inequality triples for (n, r)");
  add_io(horn);
  int horn_n = 0, horn_r = 0;
  horn->add_option("--n", horn_n, "matrix size")->required();
  horn->add_option("--r", horn_r, "subset size")->required();
  horn->callback([&] {
    json arr = json::array();
    for (const freeconv::IndexTuple& t : freeconv::horn_triples(horn_n, horn_r))
      arr.push_back(freeconv::tuple_to_json(t));
    emit(out_path, freeconv::canonical_dump(arr));
  });

  auto* repro = app.add_subcommand("reproduce-counterexample",
                                   "re-derive the convolution membership counterexample");
  add_io(repro);
  repro->callback([&] {
    freeconv::ReproduceReport rep = freeconv::reproduce_counterexample();
    emit(out_path, freeconv::canonical_dump(freeconv::reproduce_to_json(rep)));
    rc = rep.all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const freeconv::Error& e) {
    std::cerr << freeconv::canonical_dump(
        json{{"error", freeconv::errc_name(e.code())}, {"message", e.what()}});
    return 1;
  } catch (const std::exception& e) {
    std::cerr << freeconv::canonical_dump(json{{"error", "Unexpected"}, {"message", e.what()}});
    return 1;
  }
  return rc;
}
