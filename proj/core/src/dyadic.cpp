#include <jumplab/dyadic.hpp>

#include <ostream>
#include <utility>

namespace jumplab {

void Dyadic::normalize() {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    // Strip common factors of two, but never push the exponent below zero.
    const auto tz = mpz_scan1(mant_.get_mpz_t(), 0);
    const unsigned shift = tz < exp_ ? static_cast<unsigned>(tz) : exp_;
    if (shift > 0) {
        mant_ >>= shift;
        exp_ -= shift;
    }
}

Dyadic Dyadic::from_ratio(const mpz_class& p, const mpz_class& q) {
    require(q > 0, "dyadic: denominator must be positive");
    if (q == 1) return Dyadic(p, 0);
    const auto tz = mpz_scan1(q.get_mpz_t(), 0);
    mpz_class reduced = q >> tz;
    require(reduced == 1, "dyadic: denominator must be a power of two");
    require(tz <= 0x7fffffff, "dyadic: exponent out of range");
    return Dyadic(p, static_cast<unsigned>(tz));
}

Dyadic Dyadic::parse(const std::string& text) {
    require(!text.empty(), "dyadic: empty string");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Dyadic(mpz_class(text), 0);
        }
        mpz_class p(text.substr(0, slash));
        const std::string den = text.substr(slash + 1);
        if (den.rfind("2^", 0) == 0) {
            const unsigned long e = std::stoul(den.substr(2));
            require(e <= 0x7fffffff, "dyadic: exponent out of range");
            return Dyadic(std::move(p), static_cast<unsigned>(e));
        }
        return from_ratio(p, mpz_class(den));
    } catch (const std::invalid_argument& e) {
        // mpz_class and std::stoul both throw this on malformed digits.
        throw precondition_error("dyadic: cannot parse \"" + text + "\"");
    }
}

mpz_class Dyadic::denominator() const {
    mpz_class d = 1;
    d <<= exp_;
    return d;
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.mant_ = -r.mant_;
    return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    mant_ <<= (e - exp_);
    mpz_class tmp = o.mant_ << (e - o.exp_);
    mant_ += tmp;
    exp_ = e;
    normalize();
    return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) {
    return *this += -o;
}

Dyadic& Dyadic::operator*=(const Dyadic& o) {
    mant_ *= o.mant_;
    exp_ += o.exp_;
    normalize();
    return *this;
}

Dyadic Dyadic::scaled_pow2(long e) const {
    if (mant_ == 0 || e == 0) return *this;
    Dyadic r = *this;
    if (e > 0) {
        const unsigned long up = static_cast<unsigned long>(e);
        if (up >= r.exp_) {
            r.mant_ <<= (up - r.exp_);
            r.exp_ = 0;
        } else {
            r.exp_ -= static_cast<unsigned>(up);
        }
    } else {
        const unsigned long down = static_cast<unsigned long>(-e);
        require(r.exp_ + down <= 0x7fffffff, "dyadic: exponent out of range");
        r.exp_ += static_cast<unsigned>(down);
    }
    r.normalize();
    return r;
}

std::strong_ordering Dyadic::compare(const Dyadic& o) const {
    // Align to the common grid; canonical forms keep these shifts small.
    const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    mpz_class a = mant_ << (e - exp_);
    mpz_class b = o.mant_ << (e - o.exp_);
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

mpz_class Dyadic::floor_scaled(unsigned k) const {
    mpz_class r;
    if (k >= exp_) {
        r = mant_ << (k - exp_);
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), exp_ - k);
    }
    return r;
}

mpz_class Dyadic::ceil_scaled(unsigned k) const {
    mpz_class r;
    if (k >= exp_) {
        r = mant_ << (k - exp_);
    } else {
        mpz_cdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), exp_ - k);
    }
    return r;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return mant_.get_str();
    return mant_.get_str() + "/" + denominator().get_str();
}

double Dyadic::to_double() const {
    mpq_class q(mant_, denominator());
    return q.get_d();
}

Dyadic unit_pow2(unsigned k) {
    return Dyadic(1, k);
}

std::ostream& operator<<(std::ostream& os, const Dyadic& v) {
    return os << v.str();
}

} // namespace jumplab
