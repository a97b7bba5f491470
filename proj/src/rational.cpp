#include "affadm/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace affadm {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::int64_t floor_of(const Rational& r) {
    std::int64_t n = r.numerator(), d = r.denominator();
    std::int64_t q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

IntVec to_integer(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integral(x)) throw std::domain_error("non-integral coordinate " + to_string(x));
        out.push_back(x.numerator());
    }
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    RatVec c(a);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
    return c;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    RatVec c(a);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
    return c;
}

RatVec scale(const Rational& s, const RatVec& a) {
    RatVec c(a);
    for (auto& x : c) x *= s;
    return c;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

RatVec vec_mat(const RatVec& v, const RatMat& m) {
    if (v.size() != m.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
    RatVec out(m.empty() ? 0 : m[0].size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    return out;
}

RatMat inverse(const RatMat& m) {
    const std::size_t n = m.size();
    RatMat a(m);
    RatMat inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational determinant(const RatMat& m) {
    const std::size_t n = m.size();
    RatMat a(m);
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

std::size_t rank(RatMat a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

RatMat to_rational(const IntMat& m) {
    RatMat out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(to_rational(row));
    return out;
}

}  // namespace affadm
