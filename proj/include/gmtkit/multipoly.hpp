#pragma once

#include <map>
#include <span>
#include <string>

#include "gmtkit/monomial.hpp"
#include "gmtkit/rational.hpp"

namespace gmtkit {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending grevlex order and never store a zero
// coefficient.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, Rational c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly term(Monomial m, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    // Maximal total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    MultiPoly homogeneous_component(int deg) const;

    Rational coeff(const Monomial& m) const;
    // Leading term under grevlex (throws on zero polynomial).
    const std::pair<const Monomial, Rational>& leading_term() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(int e) const;

    // Exact quotient p/q; throws NonExactDivision when the remainder is
    // nonzero and std::invalid_argument when q == 0.
    MultiPoly divide_exact(const MultiPoly& q) const;

    // Substitution H_j -> H_{nvars-1-j}.
    MultiPoly reversed_vars() const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

    std::string str(std::span<const std::string> names) const;
    // Uses H0, H1, ... as variable names.
    std::string str() const;

private:
    void check_nvars(const MultiPoly& o, const char* op) const;

    int nvars_;
    TermMap terms_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a += b;
    return a;
}
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a -= b;
    return a;
}

}  // namespace gmtkit
