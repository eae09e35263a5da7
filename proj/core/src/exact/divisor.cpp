#include "mlcech/exact/divisor.hpp"

#include <cstdlib>

namespace mlcech {

Divisor::Divisor(const std::map<Point, long>& entries) {
    for (const auto& [p, n] : entries) {
        add(p, n);
    }
}

long Divisor::order(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, long n) {
    if (n == 0) {
        return;
    }
    long& slot = entries_[p];
    slot += n;
    if (slot == 0) {
        entries_.erase(p);
    }
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, n] : entries_) {
        d += n;
    }
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [p, n] : entries_) {
        if (n < 0) {
            return false;
        }
    }
    return true;
}

long Divisor::total_weight() const {
    long w = 0;
    for (const auto& [p, n] : entries_) {
        w += std::labs(n);
    }
    return w;
}

Divisor Divisor::reciprocal() const {
    Divisor out;
    for (const auto& [p, n] : entries_) {
        out.add(p.reciprocal(), n);
    }
    return out;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, n] : o.entries_) {
        add(p, n);
    }
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, n] : o.entries_) {
        add(p, -n);
    }
    return *this;
}

Divisor Divisor::operator-() const {
    Divisor out;
    for (const auto& [p, n] : entries_) {
        out.add(p, -n);
    }
    return out;
}

std::string to_string(const Divisor& d) {
    if (d.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [p, n] : d.entries()) {
        if (out.empty()) {
            if (n < 0) out += "-";
        } else {
            out += n < 0 ? " - " : " + ";
        }
        const long a = std::labs(n);
        if (a != 1) {
            out += std::to_string(a);
        }
        out += "[" + to_string(p) + "]";
    }
    return out;
}

} // namespace mlcech
