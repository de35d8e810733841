#pragma once

#include <span>
#include <string>
#include <vector>

namespace gmtkit {

// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
    explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exp(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int>& exps() const { return exps_; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial divided_by(const Monomial& o) const;
    // Substitution H_j -> H_{nvars-1-j}.
    Monomial reversed() const;

    // Graded reverse-lexicographic order with H_0 < H_1 < ... < H_{n-1}.
    // Returns <0, 0, >0 for a < b, a == b, a > b.
    static int cmp_grevlex(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    std::string str(std::span<const std::string> names) const;

private:
    std::vector<int> exps_;
};

// Comparator putting the grevlex-largest monomial first.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grevlex(a, b) > 0;
    }
};

}  // namespace gmtkit
