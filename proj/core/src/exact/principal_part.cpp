#include "mlcech/exact/principal_part.hpp"

#include "mlcech/error.hpp"

#include <string>

namespace mlcech {

PrincipalPart::PrincipalPart(Point pole, std::map<long, GaussRational> coeffs) : pole_(std::move(pole)) {
    for (auto& [j, c] : coeffs) {
        if (j < 1) {
            throw MathError("principal part index must be >= 1, got " + std::to_string(j));
        }
        if (!c.is_zero()) {
            coeffs_.emplace(j, std::move(c));
        }
    }
    if (coeffs_.empty()) {
        throw MathError("principal part needs at least one nonzero coefficient");
    }
}

GaussRational PrincipalPart::coeff(long j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? GaussRational() : it->second;
}

RationalFunction PrincipalPart::to_function() const {
    if (pole_.is_infinity()) {
        std::vector<GaussRational> c(static_cast<std::size_t>(order()) + 1);
        for (const auto& [j, a] : coeffs_) {
            c[static_cast<std::size_t>(j)] = a;
        }
        return RationalFunction(Poly(std::move(c)));
    }
    // sum A_j (t-a)^{m-j} / (t-a)^m
    const long m = order();
    const Poly lin = Poly::linear_root(pole_.value());
    Poly num;
    for (const auto& [j, a] : coeffs_) {
        num += lin.pow(m - j).scaled(a);
    }
    return RationalFunction(std::move(num), lin.pow(m));
}

} // namespace mlcech
