#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lscoinv/graded_matrix.hpp"
#include "lscoinv/lsalgo.hpp"
#include "lscoinv/springer.hpp"
#include "lscoinv/verify.hpp"
#include "lscoinv/weyl.hpp"

namespace lscoinv {

using json = nlohmann::json;

// Ring values:
//   LaurentPoly  {"coeffs": {"<exp>": <int>, ...}}
//   RatFunc      {"num": <poly>, "den": <poly>}
// Coefficients outside the 64-bit range are written as decimal strings; both
// forms are accepted on input.
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);
void to_json(json& j, const RatFunc& f);
void from_json(const json& j, RatFunc& f);

// Label: {"partition": [...]} or {"alpha": [...], "beta": [...]}
void to_json(json& j, const Label& l);
void from_json(const json& j, Label& l);

// {"family", "rank", "labels", "classes": [{"cycles", "size"}], "values"}
json char_table_to_json(const CharTable& t);
CharTable char_table_from_json(const json& j);

// {"family", "rank", "labels", "d", "leq", "total_order"}
json poset_to_json(const OrbitPoset& p);
/// Throws on malformed input; does not re-run validate_poset.
OrbitPoset poset_from_json(const json& j);

json matrix_to_json(const GradedMatrix& m);
json matrix_to_json(const PolyMatrix& m);

// {"labels", "K", "D", "kostka"}
json ls_result_to_json(const LSResult& r);
LSResult ls_result_from_json(const json& j);

// {"family", "rank", "checks": [{"name", "subject", "status", "detail"}]}
json report_to_json(const Report& r);

/// CSV table: header row of labels, then one row per label.
std::string matrix_to_csv(const PolyMatrix& m);
std::string matrix_to_csv(const GradedMatrix& m);
std::string matrix_to_markdown(const PolyMatrix& m);
std::string matrix_to_markdown(const GradedMatrix& m);

}  // namespace lscoinv
