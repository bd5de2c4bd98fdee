#pragma once

// Exact rationals for measures and ratios. Thin value wrapper over GMP's
// mpq so callers never touch raw canonicalization.

#include <jumplab/dyadic.hpp>

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace jumplab {

class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long v) : q_(v) {}                       // NOLINT: implicit by design
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const Dyadic& d) : q_(d.mantissa(), d.denominator()) {
        q_.canonicalize();
    }

    static BigRational parse(const std::string& text);   // "p" or "p/q"
    // 1/k!
    static BigRational inverse_factorial(unsigned k);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.q_ == b.q_;
    }

    friend BigRational abs(const BigRational& v) {
        BigRational r;
        r.q_ = ::abs(v.q_);
        return r;
    }

    std::string str() const;       // "p/q", or "p" when the denominator is 1
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

// Exact rational from a finite binary64 value (every finite double is one).
BigRational rational_from_double(double v);

std::ostream& operator<<(std::ostream& os, const BigRational& v);

} // namespace jumplab
