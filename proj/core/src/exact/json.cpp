#include "mlcech/exact/json.hpp"

#include "mlcech/error.hpp"

namespace mlcech {

json rational_to_json(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(mpz_class(std::to_string(j.get<long long>())));
    }
    throw SchemaError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

void to_json(json& j, const GaussRational& z) {
    j = json{{"re", rational_to_json(z.re())}, {"im", rational_to_json(z.im())}};
}

void from_json(const json& j, GaussRational& z) {
    if (j.is_object()) {
        if (!j.contains("re")) {
            throw SchemaError("complex object needs \"re\": " + j.dump());
        }
        Rational re = rational_from_json(j.at("re"));
        Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        z = GaussRational(re, im);
        return;
    }
    if (j.is_string()) {
        z = parse_gauss_rational(j.get<std::string>());
        return;
    }
    z = GaussRational(rational_from_json(j));
}

void to_json(json& j, const Point& p) {
    if (p.is_infinity()) {
        j = "inf";
    } else {
        j = p.value();
    }
}

void from_json(const json& j, Point& p) {
    if (j.is_string()) {
        p = parse_point(j.get<std::string>());
        return;
    }
    p = Point(j.get<GaussRational>());
}

void to_json(json& j, const Poly& p) {
    j = json::array();
    for (const auto& c : p.coeffs()) {
        j.push_back(c);
    }
}

void from_json(const json& j, Poly& p) {
    if (!j.is_array()) {
        throw SchemaError("polynomial must be a coefficient array");
    }
    std::vector<GaussRational> c;
    for (const auto& e : j) {
        c.push_back(e.get<GaussRational>());
    }
    p = Poly(std::move(c));
}

void to_json(json& j, const RationalFunction& f) {
    j = json{{"num", f.num()}, {"den", f.den()}};
}

void from_json(const json& j, RationalFunction& f) {
    if (!j.is_object() || !j.contains("num")) {
        throw SchemaError("rational function needs \"num\"");
    }
    Poly num = j.at("num").get<Poly>();
    Poly den = j.contains("den") ? j.at("den").get<Poly>() : Poly(GaussRational(1));
    if (den.is_zero()) {
        throw SchemaError("rational function with zero denominator");
    }
    f = RationalFunction(std::move(num), std::move(den));
}

void to_json(json& j, const LaurentWindow& w) {
    json coeffs = json::array();
    for (const auto& c : w.coeffs()) {
        coeffs.push_back(c);
    }
    j = json{{"lo", w.lo()}, {"hi", w.hi()}, {"coeffs", coeffs}};
}

void to_json(json& j, const PrincipalPart& part) {
    json coeffs = json::object();
    for (const auto& [k, c] : part.coeffs()) {
        coeffs[std::to_string(k)] = c;
    }
    j = json{{"pole", part.pole()}, {"coeffs", coeffs}};
}

PrincipalPart principal_part_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) {
        throw SchemaError("principal part needs \"pole\" and \"coeffs\": " + j.dump());
    }
    const json& pole = j.contains("pole") ? j.at("pole") : j.contains("a") ? j.at("a") : json();
    if (pole.is_null()) {
        throw SchemaError("principal part needs \"pole\": " + j.dump());
    }
    std::map<long, GaussRational> coeffs;
    const json& c = j.at("coeffs");
    if (c.is_object()) {
        for (const auto& [key, value] : c.items()) {
            long idx = 0;
            try {
                idx = std::stol(key);
            } catch (const std::exception&) {
                throw SchemaError("principal part index '" + key + "' is not an integer");
            }
            coeffs.emplace(idx, value.get<GaussRational>());
        }
    } else if (c.is_array()) {
        long idx = 1;
        for (const auto& value : c) {
            coeffs.emplace(idx++, value.get<GaussRational>());
        }
    } else {
        throw SchemaError("principal part coeffs must be an object or array");
    }
    try {
        return PrincipalPart(pole.get<Point>(), std::move(coeffs));
    } catch (const MathError& e) {
        throw SchemaError(e.what());
    }
}

void to_json(json& j, const Divisor& d) {
    j = json::object();
    for (const auto& [p, n] : d.entries()) {
        j[to_string(p)] = n;
    }
}

void from_json(const json& j, Divisor& d) {
    if (!j.is_object()) {
        throw SchemaError("divisor must be an object {point: order}");
    }
    d = Divisor();
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer()) {
            throw SchemaError("divisor order for '" + key + "' must be an integer");
        }
        d.add(parse_point(key), value.get<long>());
    }
}

} // namespace mlcech
