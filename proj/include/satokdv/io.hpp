#pragma once

// JSON and CSV formats for series, points, affine tables, graded polynomials,
// V tables and correlators. Rationals are always the strings "p/q" or "p".

#include "satokdv/grassmann.hpp"
#include "satokdv/schur.hpp"
#include "satokdv/series.hpp"
#include "satokdv/spin3.hpp"
#include "satokdv/tau.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace satokdv {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const Json& j);

/// {"head": [[e, "p/q"], ...], "tail_order": O, "tail": [c_0, ..., c_O]} where head holds
/// the positive powers. Exact series carry "exact": true and list the tail through
/// their lowest nonzero power.
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j);

/// {"a": series, "b": series}
Json point_to_json(const GrassmannPoint& p);
GrassmannPoint point_from_json(const Json& j);
/// Reads a point file. Throws ParseError on malformed input.
GrassmannPoint load_point(const std::string& path);

/// Header row "m\n,0,1,...", then one row per m.
std::string affine_to_csv(const AffineTable& t);
/// {"max_m", "max_n", "entries": [[m, n, "p/q"], ...]} with nonzero entries only;
/// "source" is added when given.
Json affine_to_json(const AffineTable& t, const std::optional<std::string>& source = std::nullopt);
AffineTable affine_from_json(const Json& j);

/// {"degree": D, "vars": "theta" | "t", "terms": [[[[index, e], ...], "p/q"], ...]}
Json graded_poly_to_json(const GradedPoly& p);
GradedPoly graded_poly_from_json(const Json& j);

/// {"entries": [[k, l, [["p/q", "p/q"], ["p/q", "p/q"]]], ...]}
Json vtable_to_json(const VTable& v);

/// {"spec": [k_1, ...], "genus": g, "value": "p/q"}; "dimension_mismatch": true when flagged.
Json correlator_to_json(const Correlator& c);

/// Dumps with two-space indentation and a trailing newline.
std::string dump(const Json& j);

} // namespace satokdv
