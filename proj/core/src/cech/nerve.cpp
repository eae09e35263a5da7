#include "mlcech/cech/nerve.hpp"

#include "mlcech/error.hpp"

#include <algorithm>
#include <string>

namespace mlcech::cech {

namespace {

std::string face_text(const Face& f) {
    std::string s = "[";
    for (std::size_t k = 0; k < f.size(); ++k) {
        s += (k ? "," : "") + std::to_string(f[k]);
    }
    return s + "]";
}

} // namespace

Face drop(const Face& f, std::size_t j) {
    Face g;
    g.reserve(f.size() - 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k != j) {
            g.push_back(f[k]);
        }
    }
    return g;
}

Nerve::Nerve(std::size_t n_opens, std::vector<Face> faces) : n_opens_(n_opens) {
    if (n_opens == 0) {
        throw SchemaError("nerve needs at least one open");
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& f : faces) {
        if (f.empty()) {
            throw SchemaError("empty face in nerve");
        }
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] >= n_opens) {
                throw SchemaError("face " + face_text(f) + " references a missing open");
            }
            if (k > 0 && f[k] <= f[k - 1]) {
                throw SchemaError("face " + face_text(f) + " is not strictly increasing");
            }
        }
        if (index_.count(f)) {
            throw SchemaError("duplicate face " + face_text(f));
        }
        const std::size_t dim = f.size() - 1;
        if (by_dim_.size() <= dim) {
            by_dim_.resize(dim + 1);
        }
        index_.emplace(f, by_dim_[dim].size());
        by_dim_[dim].push_back(f);
    }
    for (std::size_t a = 0; a < n_opens; ++a) {
        if (!index_.count(Face{a})) {
            throw SchemaError("open " + std::to_string(a) + " missing from the vertex list");
        }
    }
    for (const auto& f : faces) {
        if (f.size() < 2) {
            continue;
        }
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!index_.count(drop(f, j))) {
                throw SchemaError("nerve not downward closed: " + face_text(f) + " lacks " + face_text(drop(f, j)));
            }
        }
    }
}

const std::vector<Face>& Nerve::faces(std::size_t dim) const {
    static const std::vector<Face> kNone;
    return dim < by_dim_.size() ? by_dim_[dim] : kNone;
}

std::vector<Face> Nerve::all_faces() const {
    std::vector<Face> out;
    for (const auto& layer : by_dim_) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::optional<std::size_t> Nerve::position(const Face& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Nerve Nerve::single_open() { return Nerve(1, {Face{0}}); }

} // namespace mlcech::cech
