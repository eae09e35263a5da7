#include "mlcech/cech/complex.hpp"

#include "mlcech/error.hpp"

#include <string>

namespace mlcech::cech {

void CochainComplex::check_square_zero() const {
    for (std::size_t p = 0; p + 1 < deltas.size(); ++p) {
        if (!(deltas[p + 1] * deltas[p]).is_zero()) {
            throw MathError("sign-check failure: delta_" + std::to_string(p + 1) + " * delta_" + std::to_string(p) +
                            " != 0");
        }
    }
}

CochainComplex build_complex(const Nerve& nerve, const SheafDatum& datum) {
    datum.validate(nerve);
    CochainComplex cx;
    const std::size_t top = nerve.max_dim();
    std::vector<std::vector<std::size_t>> offsets(top + 1);
    for (std::size_t p = 0; p <= top; ++p) {
        std::size_t off = 0;
        for (const auto& f : nerve.faces(p)) {
            offsets[p].push_back(off);
            off += datum.dim(f);
        }
        cx.dims.push_back(off);
    }
    for (std::size_t p = 0; p < top; ++p) {
        linalg::Matrix d(cx.dims[p + 1], cx.dims[p]);
        const auto& cofaces = nerve.faces(p + 1);
        for (std::size_t ti = 0; ti < cofaces.size(); ++ti) {
            const Face& tau = cofaces[ti];
            const std::size_t row0 = offsets[p + 1][ti];
            for (std::size_t j = 0; j < tau.size(); ++j) {
                const Face sigma = drop(tau, j);
                const std::size_t col0 = offsets[p][*nerve.position(sigma)];
                const linalg::Matrix r = datum.restriction(sigma, tau);
                const bool negative = (j % 2) == 1;
                for (std::size_t a = 0; a < r.rows(); ++a) {
                    for (std::size_t b = 0; b < r.cols(); ++b) {
                        if (r(a, b).is_zero()) {
                            continue;
                        }
                        if (negative) {
                            d(row0 + a, col0 + b) -= r(a, b);
                        } else {
                            d(row0 + a, col0 + b) += r(a, b);
                        }
                    }
                }
            }
        }
        cx.deltas.push_back(std::move(d));
    }
    cx.check_square_zero();
    return cx;
}

CohomologyReport cohomology(const CochainComplex& cx, bool with_representatives) {
    const std::size_t n = cx.dims.size();
    if (cx.deltas.size() + 1 != n && !(n == 0 && cx.deltas.empty())) {
        throw MathError("cochain complex has " + std::to_string(cx.deltas.size()) + " differentials for " +
                        std::to_string(n) + " degrees");
    }
    std::vector<std::size_t> ranks_delta(n, 0);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const auto& d = cx.deltas[p];
        if (d.rows() != cx.dims[p + 1] || d.cols() != cx.dims[p]) {
            throw MathError("delta_" + std::to_string(p) + " has the wrong shape");
        }
        ranks_delta[p] = linalg::rank(d);
    }
    CohomologyReport report;
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t kernel = cx.dims[p] - ranks_delta[p];
        const std::size_t image = p == 0 ? 0 : ranks_delta[p - 1];
        if (image > kernel) {
            throw MathError("image exceeds kernel in degree " + std::to_string(p));
        }
        report.ranks.push_back(kernel - image);
    }
    if (with_representatives) {
        std::vector<std::vector<linalg::Vector>> reps(n);
        for (std::size_t p = 0; p < n; ++p) {
            linalg::Matrix z = p + 1 < n ? linalg::nullspace(cx.deltas[p]) : linalg::Matrix::identity(cx.dims[p]);
            // Greedily extend a basis of B^p by cocycles.
            std::vector<linalg::Vector> cols;
            if (p > 0) {
                const auto& prev = cx.deltas[p - 1];
                for (std::size_t c = 0; c < prev.cols(); ++c) {
                    cols.push_back(prev.column(c));
                }
            }
            auto span_rank = [&](const std::vector<linalg::Vector>& vs) {
                linalg::Matrix m(vs.size(), cx.dims[p]);
                for (std::size_t r = 0; r < vs.size(); ++r) {
                    for (std::size_t c = 0; c < cx.dims[p]; ++c) {
                        m(r, c) = vs[r][c];
                    }
                }
                return linalg::rank_by_rref(m);
            };
            std::size_t current = cols.empty() ? 0 : span_rank(cols);
            for (std::size_t c = 0; c < z.cols() && reps[p].size() < report.ranks[p]; ++c) {
                cols.push_back(z.column(c));
                const std::size_t r = span_rank(cols);
                if (r > current) {
                    current = r;
                    reps[p].push_back(cols.back());
                } else {
                    cols.pop_back();
                }
            }
        }
        report.representatives = std::move(reps);
    }
    return report;
}

bool h0_equals_global_sections(const Nerve& nerve, const SheafDatum& datum, std::size_t glued) {
    return cohomology(build_complex(nerve, datum)).ranks.at(0) == glued;
}

} // namespace mlcech::cech
