#pragma once

#include "mlcech/exact/json.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace mlcech::cli {

using Complex = std::complex<double>;

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument starts with '{' or '[', else a file path.
/// SchemaError on malformed JSON or an unsupported schema_version.
json load_json_arg(const std::string& arg);

/// Writes the whole report, via a temporary file and rename for paths.
void write_report(const std::string& path, const std::string& text);

/// number, "1/2-3i"-style literal, [re, im] or {"re", "im"}.
Complex complex_from_json(const json& j);
/// Exact value when the JSON is an integer, a string or {"re","im"} of those.
std::optional<GaussRational> exact_from_json(const json& j);
json complex_to_json(Complex z);

/// Shortest round-trip text of a double.
std::string format_double(double x);

} // namespace mlcech::cli
