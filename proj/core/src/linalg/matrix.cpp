#include "mlcech/linalg/matrix.hpp"

#include "mlcech/error.hpp"

#include <stdexcept>
#include <utility>

namespace mlcech::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = GaussRational(1);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    }
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !x[c].is_zero()) {
                y[r] += a * x[c];
            }
        }
    }
    return y;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("Matrix +: shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("Matrix -: shape mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix *: shape mismatch");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (!y.is_zero()) {
                    c(i, j) += x * y;
                }
            }
        }
    }
    return c;
}

Matrix Matrix::scaled(const GaussRational& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) {
        x *= c;
    }
    return m;
}

namespace {

struct GaussInt {
    mpz_class re;
    mpz_class im;

    bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

/// a / b where b is known to divide a in Z[i].
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
    return q;
}

/// Rows scaled to clear denominators; row scaling preserves rank and rref.
std::vector<std::vector<GaussInt>> integer_rows(const Matrix& a) {
    std::vector<std::vector<GaussInt>> m(a.rows(), std::vector<GaussInt>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& x = a(r, c);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& x = a(r, c);
            m[r][c].re = x.re().get_num() * (l / x.re().get_den());
            m[r][c].im = x.im().get_num() * (l / x.im().get_den());
        }
    }
    return m;
}

} // namespace

std::size_t rank(const Matrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (rows == 0 || cols == 0) {
        return 0;
    }
    auto m = integer_rows(a);

    GaussInt prev{1, 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const GaussInt& piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const GaussInt lead = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                GaussInt t = sub(mul(piv, m[i][j]), mul(lead, m[r][j]));
                m[i][j] = divexact(t, prev);
            }
            m[i][c] = GaussInt{0, 0};
        }
        prev = piv;
        ++r;
    }
    return r;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
    Matrix m = a;
    if (pivots) {
        pivots->clear();
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const GaussRational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            const GaussRational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) {
                    m(i, j) -= f * m(r, j);
                }
            }
        }
        if (pivots) {
            pivots->push_back(c);
        }
        ++r;
    }
    return m;
}

std::size_t rank_by_rref(const Matrix& a) {
    std::vector<std::size_t> piv;
    rref(a, &piv);
    return piv.size();
}

Matrix nullspace(const Matrix& a) {
    std::vector<std::size_t> piv;
    Matrix e = rref(a, &piv);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) {
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    Matrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = GaussRational(1);
        for (std::size_t r = 0; r < piv.size(); ++r) {
            basis(piv[r], k) = -e(r, f);
        }
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> piv;
    Matrix e = rref(aug, &piv);
    if (!piv.empty() && piv.back() == a.cols()) {
        return std::nullopt;
    }
    Vector x(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) {
        x[piv[r]] = e(r, a.cols());
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n + r) = GaussRational(1);
    }
    std::vector<std::size_t> piv;
    Matrix e = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) {
        throw MathError("matrix is singular");
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = e(r, n + c);
        }
    }
    return inv;
}

} // namespace mlcech::linalg
