#include "gmtkit/qseries.hpp"

#include <stdexcept>

#include "gmtkit/errors.hpp"

namespace gmtkit {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1);
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
    if (coeffs.size() > c_.size()) throw std::invalid_argument("QSeries: too many coefficients");
    for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

const Rational& QSeries::at(int d) const {
    if (d < 0 || d > order_) throw std::out_of_range("QSeries::at: index out of range");
    return c_[static_cast<size_t>(d)];
}

void QSeries::set(int d, Rational v) {
    if (d < 0 || d > order_) throw std::out_of_range("QSeries::set: index out of range");
    c_[static_cast<size_t>(d)] = std::move(v);
}

void QSeries::check_order(const QSeries& o, const char* op) const {
    if (order_ != o.order_)
        throw std::invalid_argument(std::string("QSeries::") + op + ": order mismatch");
}

QSeries& QSeries::operator+=(const QSeries& o) {
    check_order(o, "add");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    check_order(o, "sub");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries QSeries::operator*(const QSeries& o) const {
    check_order(o, "mul");
    QSeries r(order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j)
            r.c_[static_cast<size_t>(i + j)].add_mul(c_[static_cast<size_t>(i)], o.c_[static_cast<size_t>(j)]);
    }
    return r;
}

QSeries QSeries::operator*(const Rational& s) const {
    QSeries r(order_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

QSeries QSeries::recip() const {
    if (c_[0].is_zero()) throw ZeroConstantTerm("QSeries::recip: zero constant term");
    QSeries r(order_);
    Rational inv0 = c_[0].reciprocal();
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int i = 1; i <= n; ++i) acc.add_mul(c_[static_cast<size_t>(i)], r.c_[static_cast<size_t>(n - i)]);
        r.c_[static_cast<size_t>(n)] = -acc * inv0;
    }
    return r;
}

QSeries QSeries::exp() const {
    if (!c_[0].is_zero()) throw NonzeroConstantTerm("QSeries::exp: nonzero constant term");
    // e' = a' e, coefficientwise: n*e_n = sum_{i=1..n} i*a_i*e_{n-i}.
    QSeries r(order_);
    r.c_[0] = Rational(1);
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int i = 1; i <= n; ++i)
            acc.add_mul(c_[static_cast<size_t>(i)] * Rational(i), r.c_[static_cast<size_t>(n - i)]);
        r.c_[static_cast<size_t>(n)] = acc / Rational(n);
    }
    return r;
}

}  // namespace gmtkit
