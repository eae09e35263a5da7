#include "mlcech/exact/gauss_rational.hpp"

#include "mlcech/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>

namespace mlcech {

double to_double(const Rational& q) {
    const double d = q.get_d();
    const double away = std::nextafter(d, sgn(q) < 0 ? -std::numeric_limits<double>::infinity()
                                                      : std::numeric_limits<double>::infinity());
    if (!std::isfinite(away) || d == away) {
        return d;
    }
    const Rational gap_d = abs(q - Rational(d));
    const Rational gap_away = abs(Rational(away) - q);
    return gap_away < gap_d ? away : d;
}

std::complex<double> GaussRational::to_complex() const {
    return {to_double(re_), to_double(im_)};
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) {
        throw MathError("division by zero in Q(i)");
    }
    Rational n = norm();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussRational GaussRational::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    GaussRational result(1);
    GaussRational base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) {
        throw MathError("division by zero in Q(i)");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) {
        c = cmp(a.im_, b.im_);
    }
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussRational& z) {
    const bool has_re = sgn(z.re()) != 0;
    const bool has_im = sgn(z.im()) != 0;
    if (!has_im) {
        return to_string(z.re());
    }
    std::string out;
    if (has_re) {
        out = to_string(z.re());
    }
    Rational im = z.im();
    if (sgn(im) < 0) {
        out += '-';
        im = -im;
    } else if (has_re) {
        out += '+';
    }
    if (im != 1) {
        out += to_string(im);
    }
    out += 'i';
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) {
        throw SchemaError("empty rational literal");
    }
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) {
            throw SchemaError("malformed rational '" + std::string(text) + "'");
        }
        mpz_class den{std::string(q), 10};
        if (den == 0) {
            throw SchemaError("zero denominator in '" + std::string(text) + "'");
        }
        value = Rational(mpz_class(std::string(p), 10), den);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
            throw SchemaError("malformed decimal '" + std::string(text) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        value = Rational(num, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) {
            throw SchemaError("malformed rational '" + std::string(text) + "'");
        }
        value = Rational(mpz_class(std::string(body), 10));
    }
    return negative ? Rational(-value) : value;
}

GaussRational parse_gauss_rational(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) {
        throw SchemaError("empty complex literal");
    }
    if (s.back() != 'i') {
        return {parse_rational(s)};
    }
    s.pop_back();
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part;
    std::string im_part = s;
    if (split != std::string::npos) {
        re_part = s.substr(0, split);
        im_part = s.substr(split);
    }
    Rational im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        im = parse_rational(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
}

std::size_t hash_value(const GaussRational& z) {
    std::hash<std::string> h;
    return h(to_string(z));
}

} // namespace mlcech
