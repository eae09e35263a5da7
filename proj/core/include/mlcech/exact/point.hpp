#pragma once

#include "mlcech/exact/gauss_rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace mlcech {

/// A point of the projective line over Q(i): a finite value or infinity.
class Point {
public:
    Point() = default;
    Point(GaussRational z) : value_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
    Point(long v) : value_(v) {}                     // NOLINT(google-explicit-constructor)

    static Point infinity() {
        Point p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite coordinate; throws MathError for infinity.
    const GaussRational& value() const;

    /// Image under t -> 1/t (0 <-> infinity).
    Point reciprocal() const;

    friend bool operator==(const Point& a, const Point& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    /// Finite points first (ordered as GaussRational), infinity last.
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

private:
    bool infinite_ = false;
    GaussRational value_;
};

/// "inf" or the canonical GaussRational text.
std::string to_string(const Point& p);
Point parse_point(std::string_view text);

} // namespace mlcech
