#include "gmtkit/monomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmtkit {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::times(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial::times: nvars mismatch");
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("Monomial::divided_by: not divisible");
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
    return r;
}

Monomial Monomial::reversed() const {
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[exps_.size() - 1 - i] = exps_[i];
    return r;
}

int Monomial::cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial::cmp_grevlex: nvars mismatch");
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: scan from the smallest variable; the monomial with the
    // smaller exponent at the first difference is the larger one.
    for (size_t i = 0; i < a.exps_.size(); ++i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
    }
    return 0;
}

std::string Monomial::str(std::span<const std::string> names) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (exps_[i] > 1) os << "^" << exps_[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace gmtkit
