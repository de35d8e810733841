#include "gmtkit/quasimap.hpp"

#include <stdexcept>

namespace gmtkit {

namespace {

// Maps a two-variable polynomial p(x, y) to p(H_{i0}, H_{i1}) in nvars
// variables.
MultiPoly embed_two_var(const MultiPoly& p, int nvars, int i0, int i1) {
    MultiPoly out(nvars);
    for (const auto& [m, c] : p) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i0)] = m.exp(0);
        e[static_cast<size_t>(i1)] = m.exp(1);
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

void check_params(int N, int k, int d) {
    if (N < 2) throw std::invalid_argument("w: require N >= 2");
    if (k < 1) throw std::invalid_argument("w: require k >= 1");
    if (d < 1) throw std::invalid_argument("w: require d >= 1");
}

}  // namespace

MultiPoly ek_poly(int k) {
    if (k < 1) throw std::invalid_argument("ek_poly: require k >= 1");
    MultiPoly p = MultiPoly::constant(2, Rational(1));
    for (int j = 0; j <= k; ++j) {
        MultiPoly factor =
            MultiPoly::variable(2, 0) * Rational(j) + MultiPoly::variable(2, 1) * Rational(k - j);
        p = p * factor;
    }
    return p;
}

MultiPoly w_integrand(int N, int k, int d, int a, int b) {
    check_params(N, k, d);
    if (a < 0 || b < 0) throw std::invalid_argument("w_integrand: negative insertion exponent");
    int nv = d + 1;
    MultiPoly ek = ek_poly(k);
    std::vector<int> e0(static_cast<size_t>(nv), 0);
    e0[0] = a;
    e0[static_cast<size_t>(d)] += b;
    MultiPoly num = MultiPoly::term(Monomial(std::move(e0)), Rational(1));
    for (int j = 1; j <= d; ++j) num = num * embed_two_var(ek, nv, j - 1, j);
    if (d == 1) return num;
    std::vector<int> de(static_cast<size_t>(nv), 0);
    for (int j = 1; j <= d - 1; ++j) de[static_cast<size_t>(j)] = 1;
    MultiPoly den = MultiPoly::term(Monomial(std::move(de)), Rational::pow(Rational(k), d - 1));
    return num.divide_exact(den);
}

Rational w_two_point(int N, int k, int d, int a, int b, RingCache& cache) {
    check_params(N, k, d);
    if (a < 0 || b < 0) return Rational(0);  // h^c = 0 outside 0 <= c <= N-2
    auto ring = cache.get(N, d);
    return ring->integrate(w_integrand(N, k, d, a, b));
}

Rational w_d1_closed(int N, int k, int a, int b) {
    check_params(N, k, 1);
    int ex = N - 1 - a, ey = N - 1 - b;
    if (ex < 0 || ey < 0) return Rational(0);
    return ek_poly(k).coeff(Monomial(std::vector<int>{ex, ey}));
}

Rational vsc(int N, int k, int d, int n, RingCache& cache) {
    check_params(N, k, d);
    int a = N - 2 - n;
    int b = n - 1 + (N - k) * d;
    if (a < 0 || b < 0) return Rational(0);
    return Rational(d) / Rational(k) * w_two_point(N, k, d, a, b, cache);
}

}  // namespace gmtkit
