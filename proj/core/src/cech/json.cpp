#include "mlcech/cech/json.hpp"

#include "mlcech/error.hpp"

namespace mlcech::cech {

json matrix_to_json(const linalg::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& x = m(r, c);
            if (x.is_real()) {
                row.push_back(rational_to_json(x.re()));
            } else {
                row.push_back(x);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

linalg::Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) {
        throw SchemaError("matrix must have " + std::to_string(rows) + " rows");
    }
    linalg::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw SchemaError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = row[c].get<GaussRational>();
        }
    }
    return m;
}

json cover_to_json(const Nerve& nerve, const SheafDatum& datum) {
    json faces = json::array();
    json dims = json::array();
    for (const auto& f : nerve.all_faces()) {
        faces.push_back(f);
        dims.push_back(datum.dim(f));
    }
    json restrictions = json::array();
    for (const auto& [key, m] : datum.restrictions()) {
        restrictions.push_back(json{{"from", key.first}, {"to", key.second}, {"matrix", matrix_to_json(m)}});
    }
    return json{{"n_opens", nerve.n_opens()}, {"faces", faces}, {"dims", dims}, {"restrictions", restrictions}};
}

std::pair<Nerve, SheafDatum> cover_from_json(const json& j) {
    if (!j.is_object()) {
        throw SchemaError("cover must be a JSON object");
    }
    for (const char* key : {"n_opens", "faces", "dims"}) {
        if (!j.contains(key)) {
            throw SchemaError(std::string("cover is missing \"") + key + "\"");
        }
    }
    if (!j.at("n_opens").is_number_unsigned()) {
        throw SchemaError("n_opens must be a nonnegative integer");
    }
    const json& jf = j.at("faces");
    const json& jd = j.at("dims");
    if (!jf.is_array() || !jd.is_array() || jf.size() != jd.size()) {
        throw SchemaError("faces and dims must be arrays of equal length");
    }
    std::vector<Face> faces;
    SheafDatum datum;
    for (std::size_t k = 0; k < jf.size(); ++k) {
        if (!jf[k].is_array()) {
            throw SchemaError("each face must be an index array");
        }
        Face f;
        for (const auto& x : jf[k]) {
            if (!x.is_number_unsigned()) {
                throw SchemaError("face indices must be nonnegative integers");
            }
            f.push_back(x.get<std::size_t>());
        }
        if (!jd[k].is_number_unsigned()) {
            throw SchemaError("dims must be nonnegative integers");
        }
        datum.set_dim(f, jd[k].get<std::size_t>());
        faces.push_back(std::move(f));
    }
    Nerve nerve(j.at("n_opens").get<std::size_t>(), faces);
    if (j.contains("restrictions")) {
        for (const auto& r : j.at("restrictions")) {
            if (!r.is_object() || !r.contains("from") || !r.contains("to") || !r.contains("matrix")) {
                throw SchemaError("restriction entries need from/to/matrix");
            }
            Face from = r.at("from").get<Face>();
            Face to = r.at("to").get<Face>();
            if (!nerve.contains(from) || !nerve.contains(to)) {
                throw SchemaError("restriction references a face outside the nerve");
            }
            datum.set_restriction(from, to, matrix_from_json(r.at("matrix"), datum.dim(to), datum.dim(from)));
        }
    }
    return {std::move(nerve), std::move(datum)};
}

json report_to_json(const CohomologyReport& report) {
    json j{{"ranks", report.ranks}};
    if (report.representatives) {
        json reps = json::array();
        for (const auto& degree : *report.representatives) {
            json d = json::array();
            for (const auto& v : degree) {
                json vec = json::array();
                for (const auto& x : v) {
                    vec.push_back(x);
                }
                d.push_back(std::move(vec));
            }
            reps.push_back(std::move(d));
        }
        j["representatives"] = std::move(reps);
    }
    return j;
}

} // namespace mlcech::cech
