#pragma once

#include "mlcech/exact/json.hpp"

#include <string>
#include <vector>

namespace mlcech::cli {

/// Numerical defaults shared by the subcommands. Loaded from --config and
/// overridden by --set key=value.
struct Settings {
    // plane-ml
    double theta = 0.5;
    double max_ratio = 0.5;
    double safety = 10;
    double taylor_ratio = 2;
    long max_terms = 20000;
    long max_steps = 2000;
    long max_stage = 64;
    long contour_samples = 256;
    double verify_radius_factor = 0.2;
    double verify_tol = 1e-6;
    // torus-ml
    double r_cut = 0;  ///< 0: 8 |w1|
    double residue_tol = 1e-12;
    double periodicity_tol = 1e-6;
    double coefficient_tol = 1e-5;
    long periodicity_samples = 50;
    // p1
    long window = 0;  ///< 0: minimal admissible window
    long stabilization_step = 1;

    json to_json() const;
    /// SchemaError on unknown keys or wrong types.
    void merge(const json& j);
    /// "key=value" with a numeric value.
    void set(const std::string& assignment);
};

} // namespace mlcech::cli
