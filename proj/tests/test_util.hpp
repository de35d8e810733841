#pragma once

#include <random>
#include <vector>

#include "gmtkit/multipoly.hpp"

// Deterministic generators for property-style tests.
namespace testutil {

inline gmtkit::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return gmtkit::Rational(num(rng), den(rng));
}

inline gmtkit::Monomial random_monomial(std::mt19937& rng, int nvars, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<int> exps(static_cast<size_t>(nvars));
    for (auto& x : exps) x = e(rng);
    return gmtkit::Monomial(std::move(exps));
}

inline gmtkit::MultiPoly random_poly(std::mt19937& rng, int nvars, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    gmtkit::MultiPoly p(nvars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(random_monomial(rng, nvars, max_exp), random_rational(rng));
    return p;
}

inline gmtkit::MultiPoly random_nonzero_poly(std::mt19937& rng, int nvars, int max_terms,
                                             int max_exp) {
    for (;;) {
        gmtkit::MultiPoly p = random_poly(rng, nvars, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

// Random homogeneous polynomial of the given degree (possibly zero).
inline gmtkit::MultiPoly random_homogeneous(std::mt19937& rng, int nvars, int degree,
                                            int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> cut(0, degree);
    gmtkit::MultiPoly p(nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        int left = degree;
        for (int v = 0; v + 1 < nvars; ++v) {
            std::uniform_int_distribution<int> part(0, left);
            exps[static_cast<size_t>(v)] = part(rng);
            left -= exps[static_cast<size_t>(v)];
        }
        exps[static_cast<size_t>(nvars - 1)] = left;
        p.add_term(gmtkit::Monomial(std::move(exps)), random_rational(rng));
    }
    return p;
}

}  // namespace testutil
