#pragma once

// Exact dyadic rationals: mantissa / 2^exponent with arbitrary-precision
// mantissa and exponent >= 0. Canonical form is lowest terms: a positive
// exponent implies an odd mantissa, and zero is (0, 0). Heights, radii and
// grid coordinates all live here so every comparison is exact.

#include <jumplab/errors.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace jumplab {

class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) {}                     // NOLINT: implicit by design
    Dyadic(mpz_class mantissa, unsigned exponent)
        : mant_(std::move(mantissa)), exp_(exponent) {
        normalize();
    }

    // p / q with q a power of two (throws otherwise).
    static Dyadic from_ratio(const mpz_class& p, const mpz_class& q);

    // Accepts "p", "p/q" with q a power of two, or "p/2^e".
    static Dyadic parse(const std::string& text);

    const mpz_class& mantissa() const { return mant_; }
    unsigned exponent() const { return exp_; }
    mpz_class denominator() const;

    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const;
    Dyadic& operator+=(const Dyadic& o);
    Dyadic& operator-=(const Dyadic& o);
    Dyadic& operator*=(const Dyadic& o);

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
    friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

    // value * 2^e (e may be negative).
    Dyadic scaled_pow2(long e) const;

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        return a.compare(b);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.mant_ == b.mant_;
    }

    // floor(value * 2^k), exact.
    mpz_class floor_scaled(unsigned k) const;
    // ceil(value * 2^k), exact.
    mpz_class ceil_scaled(unsigned k) const;
    // true iff value * 2^k is an integer.
    bool is_integer_scaled(unsigned k) const { return exp_ <= k; }

    // "p" for integers, otherwise "p/q" with q = 2^exponent in decimal.
    std::string str() const;
    double to_double() const;  // rounds; for display and float-side estimates

    friend Dyadic abs(Dyadic v) {
        if (v.mant_ < 0) v.mant_ = -v.mant_;
        return v;
    }

private:
    std::strong_ordering compare(const Dyadic& o) const;
    void normalize();

    mpz_class mant_;
    unsigned exp_;
};

// By value: returning a reference would dangle when the chosen argument
// is a temporary (min(x, Dyadic(1) - x) and friends are common).
inline Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

// 1/2^k as a Dyadic.
Dyadic unit_pow2(unsigned k);

std::ostream& operator<<(std::ostream& os, const Dyadic& v);

} // namespace jumplab
