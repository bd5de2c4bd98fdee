#include <jumplab/rational.hpp>

#include <cmath>
#include <ostream>

namespace jumplab {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    require(den != 0, "rational: zero denominator");
    q_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    require(!text.empty(), "rational: empty string");
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return BigRational(mpz_class(text), 1);
        }
        return BigRational(mpz_class(text.substr(0, slash)),
                           mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw precondition_error("rational: cannot parse \"" + text + "\"");
    }
}

BigRational BigRational::inverse_factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return BigRational(1, f);
}

BigRational BigRational::operator-() const {
    BigRational r = *this;
    r.q_ = -r.q_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    require(!o.is_zero(), "rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string BigRational::str() const {
    return q_.get_str();
}

BigRational rational_from_double(double v) {
    require(std::isfinite(v), "rational_from_double: value must be finite");
    mpq_class q(v);  // exact binary64 -> rational conversion
    BigRational r;
    r = BigRational(q.get_num(), q.get_den());
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) {
    return os << v.str();
}

} // namespace jumplab
