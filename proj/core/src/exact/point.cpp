#include "mlcech/exact/point.hpp"

#include "mlcech/error.hpp"

namespace mlcech {

const GaussRational& Point::value() const {
    if (infinite_) {
        throw MathError("point at infinity has no finite coordinate");
    }
    return value_;
}

Point Point::reciprocal() const {
    if (infinite_) {
        return Point(GaussRational(0));
    }
    if (value_.is_zero()) {
        return infinity();
    }
    return Point(value_.inverse());
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.infinite_ != b.infinite_) {
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.infinite_) {
        return std::strong_ordering::equal;
    }
    return a.value_ <=> b.value_;
}

std::string to_string(const Point& p) {
    return p.is_infinity() ? std::string("inf") : to_string(p.value());
}

Point parse_point(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") {
        return Point::infinity();
    }
    return Point(parse_gauss_rational(text));
}

} // namespace mlcech
