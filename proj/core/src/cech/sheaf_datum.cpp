#include "mlcech/cech/sheaf_datum.hpp"

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

bool is_subface(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face with_index(const Face& f, std::size_t x) {
    Face g = f;
    g.insert(std::upper_bound(g.begin(), g.end(), x), x);
    return g;
}

} // namespace

void SheafDatum::set_restriction(const Face& from, const Face& to, linalg::Matrix m) {
    maps_.insert_or_assign({from, to}, std::move(m));
}

std::size_t SheafDatum::dim(const Face& f) const {
    auto it = dims_.find(f);
    if (it == dims_.end()) {
        throw SchemaError("no section space given for face " + face_text(f));
    }
    return it->second;
}

bool SheafDatum::has_restriction(const Face& from, const Face& to) const {
    return maps_.count({from, to}) != 0;
}

linalg::Matrix SheafDatum::restriction(const Face& from, const Face& to) const {
    if (auto it = maps_.find({from, to}); it != maps_.end()) {
        return it->second;
    }
    if (from == to) {
        return linalg::Matrix::identity(dim(from));
    }
    if (!is_subface(from, to)) {
        throw SchemaError("no restriction from " + face_text(from) + " to non-coface " + face_text(to));
    }
    const std::size_t d_from = dim(from);
    const std::size_t d_to = dim(to);
    if (to.size() == from.size() + 1) {
        if (d_from == 0 || d_to == 0) {
            return linalg::Matrix(d_to, d_from);
        }
        throw SchemaError("missing restriction " + face_text(from) + " -> " + face_text(to));
    }
    // Compose along the chain adding missing indices in increasing order.
    Face cur = from;
    linalg::Matrix acc = linalg::Matrix::identity(d_from);
    for (std::size_t x : to) {
        if (std::binary_search(from.begin(), from.end(), x)) {
            continue;
        }
        Face next = with_index(cur, x);
        acc = restriction(cur, next) * acc;
        cur = std::move(next);
    }
    return acc;
}

void SheafDatum::validate(const Nerve& nerve) const {
    for (const auto& [f, d] : dims_) {
        if (!nerve.contains(f)) {
            throw SchemaError("datum face " + face_text(f) + " is not a face of the nerve");
        }
    }
    const auto faces = nerve.all_faces();
    for (const auto& f : faces) {
        (void)dim(f);
    }
    for (const auto& [key, m] : maps_) {
        const auto& [from, to] = key;
        if (!nerve.contains(from) || !nerve.contains(to) || !is_subface(from, to)) {
            throw SchemaError("restriction " + face_text(from) + " -> " + face_text(to) + " is not an incidence of the nerve");
        }
        if (m.rows() != dim(to) || m.cols() != dim(from)) {
            throw SchemaError("restriction " + face_text(from) + " -> " + face_text(to) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                              std::to_string(dim(to)) + "x" + std::to_string(dim(from)));
        }
        if (from == to && !(m == linalg::Matrix::identity(dim(from)))) {
            throw MathError("restriction on face " + face_text(from) + " is not the identity");
        }
    }
    // Every codimension-one map must be present (or trivially zero).
    for (const auto& f : faces) {
        for (std::size_t j = 0; j < f.size() && f.size() > 1; ++j) {
            (void)restriction(drop(f, j), f);
        }
    }
    // Two-step chains sigma -> tau_k -> upsilon must agree.
    for (const auto& up : faces) {
        if (up.size() < 3) {
            continue;
        }
        for (std::size_t a = 0; a < up.size(); ++a) {
            for (std::size_t b = a + 1; b < up.size(); ++b) {
                Face sigma = drop(drop(up, b), a);
                Face t1 = drop(up, a);  // contains up[b]
                Face t2 = drop(up, b);  // contains up[a]
                linalg::Matrix via1 = restriction(t1, up) * restriction(sigma, t1);
                linalg::Matrix via2 = restriction(t2, up) * restriction(sigma, t2);
                if (!(via1 == via2)) {
                    throw MathError("inconsistent restriction composition " + face_text(sigma) + " -> " +
                                    face_text(up));
                }
                if (auto it = maps_.find({sigma, up}); it != maps_.end() && !(it->second == via1)) {
                    throw MathError("direct restriction " + face_text(sigma) + " -> " + face_text(up) +
                                    " disagrees with the composite");
                }
            }
        }
    }
    // Longer stored incidences must match the canonical composite.
    for (const auto& [key, m] : maps_) {
        const auto& [from, to] = key;
        if (to.size() >= from.size() + 3) {
            SheafDatum stripped = *this;
            stripped.maps_.erase(key);
            if (!(stripped.restriction(from, to) == m)) {
                throw MathError("direct restriction " + face_text(from) + " -> " + face_text(to) +
                                " disagrees with the composite");
            }
        }
    }
}

} // namespace mlcech::cech
