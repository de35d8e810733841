#include "gmtkit/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace gmtkit {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(std::string_view s) {
    mpq_init(q_);
    std::string buf(s);
    if (buf.empty() || mpq_set_str(q_, buf.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + buf + "'");
    if (mpz_sgn(mpq_denref(q_)) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + buf + "'");
    mpq_canonicalize(q_);
}

Rational Rational::factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    Rational r;
    if (k > n) return r;  // zero
    mpz_bin_uiui(mpq_numref(r.q_), n, k);
    return r;
}

Rational Rational::pow(const Rational& base, long e) {
    if (e < 0) return pow(base.reciprocal(), -e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), static_cast<unsigned long>(e));
    return r;  // powers of a canonical fraction stay canonical
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, a.q_, b.q_);
    mpq_add(q_, q_, t);
    mpq_clear(t);
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, a.q_, b.q_);
    mpq_sub(q_, q_, t);
    mpq_clear(t);
}

std::string Rational::str() const {
    std::vector<char> buf(mpz_sizeinbase(mpq_numref(q_), 10) + mpz_sizeinbase(mpq_denref(q_), 10) + 4);
    mpq_get_str(buf.data(), 10, q_);
    return std::string(buf.data());
}

std::string Rational::numerator_str() const {
    std::vector<char> buf(mpz_sizeinbase(mpq_numref(q_), 10) + 2);
    mpz_get_str(buf.data(), 10, mpq_numref(q_));
    return std::string(buf.data());
}

std::string Rational::denominator_str() const {
    std::vector<char> buf(mpz_sizeinbase(mpq_denref(q_), 10) + 2);
    mpz_get_str(buf.data(), 10, mpq_denref(q_));
    return std::string(buf.data());
}

long Rational::to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
        throw std::domain_error("Rational: value does not fit a long: " + str());
    return mpz_get_si(mpq_numref(q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gmtkit
