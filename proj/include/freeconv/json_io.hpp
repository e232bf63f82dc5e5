#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "freeconv/verify.hpp"

namespace freeconv {

// Canonical wire formats: rationals are canonical "a/b" (or "a") strings,
// object keys serialize alphabetically, arrays keep semantic order.

nlohmann::json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const nlohmann::json& j);

nlohmann::json interval_to_json(const IntervalRat& x);

nlohmann::json rootvec_to_json(const RootVector& rv);
RootVector rootvec_from_json(const nlohmann::json& j);

nlohmann::json trilean_to_json(const Trilean& t);

nlohmann::json tuple_to_json(const IndexTuple& t);
IndexTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json mp_to_json(const MultiPoly& p);
MultiPoly mp_from_json(const nlohmann::json& j);

nlohmann::json rats_to_json(const std::vector<Rat>& v);
std::vector<Rat> rats_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const std::vector<std::vector<Rat>>& m);

nlohmann::json report_to_json(const VerdictReport& r);
nlohmann::json falsify_to_json(const IndexTuple& t, const FalsifyOutcome& o);
nlohmann::json reproduce_to_json(const ReproduceReport& r);
nlohmann::json summary_to_json(const SearchSummary& s);

std::string canonical_dump(const nlohmann::json& j);
nlohmann::json parse_json(const std::string& text);

}  // namespace freeconv
