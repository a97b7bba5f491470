#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace affadm {

/// Exact rational with 64-bit numerator/denominator, always reduced, denominator > 0.
/// Intermediate products use 128 bits; results that do not fit throw std::overflow_error.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// Largest integer not exceeding r.
std::int64_t floor_of(const Rational& r);

/// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

RatVec to_rational(const IntVec& v);

/// Integer vector from an integral rational vector; throws if some entry is fractional.
IntVec to_integer(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& s, const RatVec& a);
RatVec mat_vec(const RatMat& m, const RatVec& v);
/// v^T m, i.e. sum_i v_i m[i][.]
RatVec vec_mat(const RatVec& v, const RatMat& m);

RatMat inverse(const RatMat& m);
Rational determinant(const RatMat& m);
std::size_t rank(RatMat m);
std::size_t rank(const IntMat& m);

RatMat to_rational(const IntMat& m);

}  // namespace affadm
