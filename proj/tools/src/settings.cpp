#include "settings.hpp"

#include "mlcech/error.hpp"

#include <variant>
#include <map>

namespace mlcech::cli {

namespace {

using Field = std::variant<double Settings::*, long Settings::*>;

const std::map<std::string, Field>& fields() {
    static const std::map<std::string, Field> f = {
        {"theta", &Settings::theta},
        {"max_ratio", &Settings::max_ratio},
        {"safety", &Settings::safety},
        {"taylor_ratio", &Settings::taylor_ratio},
        {"max_terms", &Settings::max_terms},
        {"max_steps", &Settings::max_steps},
        {"max_stage", &Settings::max_stage},
        {"contour_samples", &Settings::contour_samples},
        {"verify_radius_factor", &Settings::verify_radius_factor},
        {"verify_tol", &Settings::verify_tol},
        {"r_cut", &Settings::r_cut},
        {"residue_tol", &Settings::residue_tol},
        {"periodicity_tol", &Settings::periodicity_tol},
        {"coefficient_tol", &Settings::coefficient_tol},
        {"periodicity_samples", &Settings::periodicity_samples},
        {"window", &Settings::window},
        {"stabilization_step", &Settings::stabilization_step},
    };
    return f;
}

void assign(Settings& s, const std::string& key, const json& value) {
    const auto it = fields().find(key);
    if (it == fields().end()) {
        throw SchemaError("unknown setting '" + key + "'");
    }
    if (!value.is_number()) {
        throw SchemaError("setting '" + key + "' must be a number");
    }
    if (const auto* d = std::get_if<double Settings::*>(&it->second)) {
        s.**d = value.get<double>();
    } else {
        if (!value.is_number_integer()) {
            throw SchemaError("setting '" + key + "' must be an integer");
        }
        s.*std::get<long Settings::*>(it->second) = value.get<long>();
    }
}

} // namespace

json Settings::to_json() const {
    json j = json::object();
    for (const auto& [key, field] : fields()) {
        if (const auto* d = std::get_if<double Settings::*>(&field)) {
            j[key] = this->**d;
        } else {
            j[key] = this->*std::get<long Settings::*>(field);
        }
    }
    return j;
}

void Settings::merge(const json& j) {
    if (!j.is_object()) {
        throw SchemaError("config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "schema_version") {
            continue;
        }
        assign(*this, key, value);
    }
}

void Settings::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw SchemaError("--set expects key=value, got '" + assignment + "'");
    }
    json value;
    try {
        value = json::parse(assignment.substr(eq + 1));
    } catch (const json::exception&) {
        throw SchemaError("--set value is not a number: '" + assignment + "'");
    }
    assign(*this, assignment.substr(0, eq), value);
}

} // namespace mlcech::cli
