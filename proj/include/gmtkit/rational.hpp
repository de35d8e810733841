#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace gmtkit {

// Exact rational number on top of GMP. Always stored reduced with positive
// denominator; equality is value equality.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {  // NOLINT: implicit by design, mirrors integer literals
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    // Parses "p", "-p" or "p/q" in base 10. Rejects anything else.
    explicit Rational(std::string_view s);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    static Rational factorial(unsigned long n);
    static Rational binomial(unsigned long n, unsigned long k);
    static Rational pow(const Rational& base, long e);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o);

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    // this += a*b, one temporary instead of two.
    void add_mul(const Rational& a, const Rational& b);
    // this -= a*b.
    void sub_mul(const Rational& a, const Rational& b);

    Rational reciprocal() const;

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
    bool operator<=(const Rational& o) const { return mpq_cmp(q_, o.q_) <= 0; }
    bool operator>(const Rational& o) const { return mpq_cmp(q_, o.q_) > 0; }
    bool operator>=(const Rational& o) const { return mpq_cmp(q_, o.q_) >= 0; }

    // "p/q", or just "p" when the denominator is 1. Round-trips through the
    // string constructor.
    std::string str() const;
    std::string numerator_str() const;
    std::string denominator_str() const;
    // Exact conversion; throws std::domain_error if not an integer fitting long.
    long to_long() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_t q_;
};

inline Rational operator+(Rational a, const Rational& b) {
    a += b;
    return a;
}
inline Rational operator-(Rational a, const Rational& b) {
    a -= b;
    return a;
}
inline Rational operator*(Rational a, const Rational& b) {
    a *= b;
    return a;
}
inline Rational operator/(Rational a, const Rational& b) {
    a /= b;
    return a;
}

}  // namespace gmtkit
