#pragma once

#include "mlcech/exact/point.hpp"

#include <map>
#include <string>

namespace mlcech {

/// Finite formal Z-combination of points of P^1. Zero orders are never stored.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const std::map<Point, long>& entries);

    const std::map<Point, long>& entries() const { return entries_; }
    long order(const Point& p) const;
    void add(const Point& p, long n);

    long degree() const;
    bool is_effective() const;
    bool empty() const { return entries_.empty(); }
    /// sum |n_x|
    long total_weight() const;
    /// Pullback along t -> 1/t (swaps 0 and infinity).
    Divisor reciprocal() const;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    Divisor operator-() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<Point, long> entries_;
};

using FnDivisor = Divisor;
using DivisorP1 = Divisor;

/// "2[1] - [i] + 3[inf]"
std::string to_string(const Divisor& d);

} // namespace mlcech
