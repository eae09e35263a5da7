#pragma once

// Cover schema:
//   {"n_opens": 2,
//    "faces": [[0], [1], [0, 1]],
//    "dims": [1, 1, 2],                       // aligned with "faces"
//    "restrictions": [{"from": [0], "to": [0, 1], "matrix": [["1/1"], ["1/1"]]}, ...]}
// Matrices are row-major; entries use the GaussRational JSON forms.

#include "mlcech/cech/complex.hpp"
#include "mlcech/exact/json.hpp"

#include <utility>

namespace mlcech::cech {

json matrix_to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json cover_to_json(const Nerve& nerve, const SheafDatum& datum);
/// Throws SchemaError on any structural problem.
std::pair<Nerve, SheafDatum> cover_from_json(const json& j);

json report_to_json(const CohomologyReport& report);

} // namespace mlcech::cech
