#ifndef DALG_JSON_IO_HPP
#define DALG_JSON_IO_HPP

// JSON forms. Rationals are strings "p/q" (or "p"); polynomials are strings
// in the text grammar.

#include <json.hpp>

#include <dalg/diff_laws.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/rota_baxter.hpp>
#include <dalg/series.hpp>

namespace dalg
{

inline constexpr int json_schema_version = 1;

nlohmann::json to_json(const law_report &r);

// {"flavor": "hurwitz"|"power", "coeffs": [...]}
nlohmann::json to_json(const series<Rational> &s);
series<Rational> series_from_json(const nlohmann::json &j);

// {"terms": [{"word": [poly, ...], "tail": poly, "coeff": "p/q"}]}
nlohmann::json to_json(const rb_elem &e);
rb_elem rb_elem_from_json(const nlohmann::json &j);

// {"terms": [{"word": [...], "coeff": "p/q"}]}
nlohmann::json to_json(const word_combination &w);
// A word is a JSON array of polynomial strings.
std::vector<poly> word_from_json(const nlohmann::json &j);

// {"terms": [{"word": [...], "tail": poly, "var": name, "coeff": "p/q"}]}
nlohmann::json to_json(const rb_tensor &t);

// Element of B(B(A)):
// {"terms": [{"coeff": "p/q", "factors": [{"inner": diffpoly, "order": n, "exp": e}]}]}
diff_poly nested_from_json(const nlohmann::json &j);

// Coefficient: JSON string "p/q" or an integer.
Rational rational_from_json(const nlohmann::json &j);

} // namespace dalg

#endif
