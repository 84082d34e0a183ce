#pragma once

// JSON forms of the library's values. Polynomials use
//   {"ring": "<presentation>", "terms": [{"coeff": c, "exps": {"name": e}}]}
// with terms in the canonical order.

#include <nlohmann/json.hpp>

#include "coinc/certify.hpp"
#include "coinc/charclass.hpp"
#include "coinc/gpoly.hpp"
#include "coinc/oracle.hpp"
#include "coinc/spaces.hpp"

namespace coinc {

nlohmann::ordered_json to_json(const GradedPoly& f);
nlohmann::ordered_json to_json(const charclass::SqdResult& r);
nlohmann::ordered_json to_json(const charclass::AlphaResult& r);
nlohmann::ordered_json to_json(const spaces::ClassSeries& s);
nlohmann::ordered_json to_json(const certify::Certificate& c);

nlohmann::ordered_json to_json(const oracle::Rational& r);
nlohmann::ordered_json to_json(double x);

/// Exact rationals render as "p/q" strings, doubles as numbers.
nlohmann::ordered_json to_json(const oracle::CoincidentTuple<oracle::Rational>& t);
nlohmann::ordered_json to_json(const oracle::CoincidentTuple<double>& t);

/// Inverse of to_json(GradedPoly) into a given ring.
GradedPoly poly_from_json(const Ring& ring, const nlohmann::ordered_json& j);

}  // namespace coinc
