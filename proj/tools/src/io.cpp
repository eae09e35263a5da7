#include "io.hpp"

#include "mlcech/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mlcech::cli {

json load_json_arg(const std::string& arg) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg, std::ios::binary);
        if (!in) {
            throw IoError("cannot read '" + arg + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("schema_version") && j["schema_version"] != 1) {
        throw SchemaError("unsupported schema_version " + j["schema_version"].dump());
    }
    return j;
}

void write_report(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write '" + path + "'");
        }
        out << text;
        if (!out.flush()) {
            std::remove(tmp.c_str());
            throw IoError("cannot write '" + path + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot write '" + path + "'");
    }
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_string()) {
        return parse_gauss_rational(j.get<std::string>()).to_complex();
    }
    if (j.is_array() && j.size() == 2) {
        return {complex_from_json(j[0]).real(), complex_from_json(j[1]).real()};
    }
    if (j.is_object() && j.contains("re")) {
        const double re = complex_from_json(j.at("re")).real();
        const double im = j.contains("im") ? complex_from_json(j.at("im")).real() : 0.0;
        return {re, im};
    }
    throw SchemaError("expected a complex number, got " + j.dump());
}

std::optional<GaussRational> exact_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string() || (j.is_object() && j.contains("re"))) {
        if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (!v.is_number_integer() && !v.is_string()) {
                    return std::nullopt;
                }
            }
        }
        GaussRational z;
        from_json(j, z);
        return z;
    }
    return std::nullopt;
}

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

} // namespace mlcech::cli
