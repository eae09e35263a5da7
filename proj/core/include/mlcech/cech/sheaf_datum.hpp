#pragma once

#include "mlcech/cech/nerve.hpp"
#include "mlcech/linalg/matrix.hpp"

#include <map>
#include <utility>

namespace mlcech::cech {

/// Finite-dimensional section spaces on the faces of a nerve plus the
/// restriction maps between them.
///
/// Restrictions are required for every codimension-one incidence
/// (face -> coface); a matrix is dim(coface) x dim(face). Longer incidences
/// may be supplied too, in which case they must equal the composite along
/// any chain. A face whose intersection has several connected components
/// simply carries the direct sum of their spaces.
class SheafDatum {
public:
    SheafDatum() = default;

    void set_dim(const Face& f, std::size_t d) { dims_[f] = d; }
    void set_restriction(const Face& from, const Face& to, linalg::Matrix m);

    std::size_t dim(const Face& f) const;
    bool has_restriction(const Face& from, const Face& to) const;
    /// Stored map, identity for from == to, or the composite along the chain
    /// that adds the missing indices in increasing order.
    linalg::Matrix restriction(const Face& from, const Face& to) const;

    const std::map<Face, std::size_t>& dims() const { return dims_; }
    const std::map<std::pair<Face, Face>, linalg::Matrix>& restrictions() const { return maps_; }

    /// Checks shapes, identities on equal faces and composition consistency
    /// along every two-step chain. Throws MathError / SchemaError.
    void validate(const Nerve& nerve) const;

private:
    std::map<Face, std::size_t> dims_;
    std::map<std::pair<Face, Face>, linalg::Matrix> maps_;
};

} // namespace mlcech::cech
