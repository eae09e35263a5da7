#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace mlcech::cech {

/// Strictly increasing tuple of open indices.
using Face = std::vector<std::size_t>;

/// Intersection pattern of a finite cover {U_0, ..., U_{n-1}}: every index
/// tuple with nonempty intersection, grouped by dimension (|face| - 1).
class Nerve {
public:
    /// Validates sortedness, index range, that every open appears as a
    /// vertex, and downward closure. Throws SchemaError.
    Nerve(std::size_t n_opens, std::vector<Face> faces);

    std::size_t n_opens() const { return n_opens_; }
    std::size_t max_dim() const { return by_dim_.size() - 1; }
    const std::vector<Face>& faces(std::size_t dim) const;
    /// All faces, by dimension then lexicographically.
    std::vector<Face> all_faces() const;
    bool contains(const Face& f) const { return index_.count(f) != 0; }
    /// Position of f within faces(f.size() - 1).
    std::optional<std::size_t> position(const Face& f) const;

    /// Nerve of a cover by disjoint pieces or a single open etc.
    static Nerve single_open();

private:
    std::size_t n_opens_;
    std::vector<std::vector<Face>> by_dim_;
    std::map<Face, std::size_t> index_;
};

/// f with its j-th entry removed.
Face drop(const Face& f, std::size_t j);

} // namespace mlcech::cech
