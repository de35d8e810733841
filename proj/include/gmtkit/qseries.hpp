#pragma once

#include <vector>

#include "gmtkit/rational.hpp"

namespace gmtkit {

// Formal power series in q truncated at a fixed order: coefficients of
// q^0 ... q^order. Binary operations require matching orders.
class QSeries {
public:
    explicit QSeries(int order);
    QSeries(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const Rational& at(int d) const;
    void set(int d, Rational v);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries operator*(const QSeries& o) const;  // truncated Cauchy product
    QSeries operator*(const Rational& c) const;

    // Multiplicative inverse; requires a nonzero constant term.
    QSeries recip() const;
    // exp of a series with zero constant term.
    QSeries exp() const;

    bool operator==(const QSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

private:
    void check_order(const QSeries& o, const char* op) const;

    int order_;
    std::vector<Rational> c_;
};

inline QSeries operator+(QSeries a, const QSeries& b) {
    a += b;
    return a;
}
inline QSeries operator-(QSeries a, const QSeries& b) {
    a -= b;
    return a;
}

}  // namespace gmtkit
