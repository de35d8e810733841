#include "gmtkit/multipoly.hpp"

#include <sstream>
#include <stdexcept>

#include "gmtkit/errors.hpp"

namespace gmtkit {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("MultiPoly: nvars must be >= 1");
}

MultiPoly MultiPoly::constant(int nvars, Rational c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    return term(Monomial(std::move(e)), Rational(1));
}

MultiPoly MultiPoly::term(Monomial m, Rational c) {
    MultiPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

MultiPoly MultiPoly::homogeneous_component(int deg) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("MultiPoly::coeff: nvars mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly::leading_term: zero polynomial");
    return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("MultiPoly::add_term: nvars mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_nvars(const MultiPoly& o, const char* op) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument(std::string("MultiPoly::") + op + ": nvars mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_nvars(o, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_nvars(o, "sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_nvars(o, "mul");
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r = constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& q) const {
    check_nvars(q, "divide_exact");
    if (q.is_zero()) throw std::invalid_argument("MultiPoly::divide_exact: division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(nvars_);
    const auto& [qm, qc] = q.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        if (!qm.divides(rm))
            throw NonExactDivision("MultiPoly::divide_exact: remainder " + rem.str());
        Monomial tm = rm.divided_by(qm);
        Rational tc = rc / qc;
        quot.add_term(tm, tc);
        rem -= q * term(tm, tc);
    }
    return quot;
}

MultiPoly MultiPoly::reversed_vars() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.reversed(), c);
    return r;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (m.degree() == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << m.str(names);
        }
        first = false;
    }
    return os.str();
}

std::string MultiPoly::str() const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) names.push_back("H" + std::to_string(i));
    return str(names);
}

}  // namespace gmtkit
