#pragma once

// Canonical JSON forms shared by every module and the CLI:
//   rational        "p/q"
//   GaussRational   {"re": "p/q", "im": "p/q"}
//   point           "inf" or a GaussRational
//   Poly            [c_0, c_1, ...]
//   PrincipalPart   {"pole": point, "coeffs": {"1": c, ...}}
//   Divisor         {"<point text>": n, ...}

#include "mlcech/exact/divisor.hpp"
#include "mlcech/exact/laurent_window.hpp"
#include "mlcech/exact/principal_part.hpp"
#include "mlcech/exact/rational_function.hpp"

#include <json.hpp>

namespace mlcech {

using json = nlohmann::json;

json rational_to_json(const Rational& q);
/// Accepts "p/q", "p", decimal strings and JSON integers.
Rational rational_from_json(const json& j);

void to_json(json& j, const GaussRational& z);
/// Accepts {"re","im"}, a complex literal string ("1/2-i") or an integer.
void from_json(const json& j, GaussRational& z);

void to_json(json& j, const Point& p);
void from_json(const json& j, Point& p);

void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);

void to_json(json& j, const RationalFunction& f);
void from_json(const json& j, RationalFunction& f);

void to_json(json& j, const LaurentWindow& w);

void to_json(json& j, const PrincipalPart& part);
PrincipalPart principal_part_from_json(const json& j);

void to_json(json& j, const Divisor& d);
void from_json(const json& j, Divisor& d);

} // namespace mlcech
