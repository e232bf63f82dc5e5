#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeconv/majorization.hpp"
#include "freeconv/multiaffine.hpp"
#include "freeconv/poly.hpp"
#include "freeconv/rng.hpp"
#include "freeconv/roots.hpp"

namespace freeconv {

// A certified verdict with its full evidence trail. verdict True means
// Verified, False means ViolatedCertified, otherwise Indeterminate.
struct VerdictReport {
  std::string statement;
  nlohmann::json inputs;
  Trilean verdict = Trilean::yes();
  nlohmann::json details;
  std::optional<nlohmann::json> witness;
  Rat eps{0};
};

// lambda_1(p boxplus q) <= lambda_1(p) + lambda_1(q); p, q degree n.
VerdictReport verify_triangle(const RatPoly& p, const RatPoly& q, int n, const Rat& eps);

// lambda_{i+j-1}(p boxplus q) <= lambda_i(p) + lambda_j(q); i + j - 1 <= n.
VerdictReport verify_weyl(const RatPoly& p, const RatPoly& q, int n, int i, int j, const Rat& eps);

// lambda(p boxplus q) majorized by lambda(p) + lambda(q); degrees exactly n
// (DegreeDeficient otherwise).
VerdictReport verify_majorization_conv(const RatPoly& p, const RatPoly& q, int n, const Rat& eps);

// Majorization is preserved by convolution: requires the certified
// hypothesis lambda(p) majorized by lambda(q) (PreconditionNotCertified).
VerdictReport verify_maj_preservation(const RatPoly& p, const RatPoly& q, const RatPoly& r, int n,
                                      const Rat& eps);

// lambda_1(p+q+r) + lambda_1(r) <= lambda_1(p+r) + lambda_1(q+r) (all sums
// boxplus at degree n); degree-deficient inputs allowed while
// (n - dp) + (n - dq) + (n - dr) < n (DegreeConditionViolated otherwise).
VerdictReport verify_submodularity(const RatPoly& p, const RatPoly& q, const RatPoly& r, int n,
                                   const Rat& eps);

// lambda_1(U_alpha(p boxplus q)) + n*alpha <= lambda_1(U_alpha p) +
// lambda_1(U_alpha q); alpha > 0, degrees exactly n.
VerdictReport verify_mss_ualpha(const RatPoly& p, const RatPoly& q, int n, const Rat& alpha,
                                const Rat& eps);

// sum_I lambda(p+q+r) + sum_L lambda(r) <= sum_J lambda(p+r) + sum_K
// lambda(q+r) for an index 4-tuple over [n]; degrees exactly n.
VerdictReport verify_4tuple(const IndexTuple& t, const RatPoly& p, const RatPoly& q,
                            const RatPoly& r, int n, const Rat& eps);

// Base-case majorization: deg p = 1, deg q = deg r = n, and
// lambda^n(p+q+r) + lambda^n(r) majorized by lambda^n(p+r) + lambda^n(q+r).
VerdictReport verify_basecase_majorization(const RatPoly& p, const RatPoly& q, const RatPoly& r,
                                           int n, const Rat& eps);

struct PinchDecomposition {
  RatPoly p_tilde, p_hat, f;
  Rat mu{0}, mu0{0}, mu1{0};
  Rat lambda1{0}, lambdak{0};
  int k = 0;
  std::optional<Rat> rho;
  Trilean certified = Trilean::yes();
};

// Splits a monic rational-rooted p (>= 2 distinct roots) at pinch parameter
// mu in [mu0, mu1]: p = p_tilde + p_hat with p_tilde = (x - mu)^2 * rest and
// the common interlacer f = (x - mu) * rest. Exact throughout
// (IrrationalRoot when the roots cannot be pinned as rationals).
PinchDecomposition pinch_decomposition(const RatPoly& p, const Rat& mu, const Rat& eps);

struct MuStarResult {
  IntervalRat mu_star;
  Rat mu0{0}, mu1{0};
  Trilean gt_mu0 = Trilean::yes();
  Trilean monotone = Trilean::yes();
  Trilean proposition = Trilean::yes();
  int steps = 0;
  nlohmann::json trace;
};

// Locates the maximal mu in [mu0, mu1] with lambda_1(p_tilde_mu boxplus r) =
// lambda_1(p boxplus r) by certified bisection (the map is 1-Lipschitz in
// mu, so the returned enclosure transfers to the root location). Also
// certifies mu* > mu0 strictly and the equal-maxroot proposition within eps.
MuStarResult find_mu_star(const RatPoly& p, const RatPoly& r, int n, const Rat& eps);

struct SearchConfig {
  std::string conjecture = "2.3";
  int n = 3;
  int trials = 100;
  std::uint64_t seed = 0;
  Rat eps = rat_pow2_neg(40);
  int threads = 1;
  std::string distribution = "mixed";
  int root_range = 8;
  int den_max = 8;
};

struct SearchSummary {
  SearchConfig config;
  int verified = 0;
  int violated = 0;
  int indeterminate = 0;
  std::vector<std::uint64_t> violating_trials;
  std::vector<nlohmann::json> violations;
};

// Seeded conjecture sweep; deterministic for a fixed (conjecture, n, trials,
// seed, eps, distribution, bounds) regardless of the thread count.
SearchSummary search_conjectures(const SearchConfig& config);

// Root sampler behind the search distributions ("uniform", "clustered",
// "arithmetic", "dominant"; "mixed" cycles by trial index).
std::vector<Rat> gen_roots(std::mt19937_64& rng, int deg, const std::string& distribution,
                           int root_range, int den_max);

// Dispatch by statement id: triangle, weyl, maj-conv, maj-preserve,
// submodularity, 4tuple, basecase, mss-ualpha, sr-check, above-roots.
// UnknownStatement for anything else.
VerdictReport run_statement(const std::string& statement, const nlohmann::json& inputs,
                            const Rat& eps);

}  // namespace freeconv
