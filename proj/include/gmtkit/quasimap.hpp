#pragma once

#include "gmtkit/chow_ring.hpp"
#include "gmtkit/multipoly.hpp"
#include "gmtkit/rational.hpp"

namespace gmtkit {

// e^k(x, y) = prod_{j=0}^{k} (j x + (k - j) y), a homogeneous two-variable
// polynomial of degree k + 1, divisible by (kx)(ky) and symmetric in x <-> y.
MultiPoly ek_poly(int k);

// The integrand of the two-point quasimap intersection number:
//   H_0^a * [prod_{j=1}^{d} e^k(H_{j-1}, H_j)] / [prod_{j=1}^{d-1} (k H_j)] * H_d^b,
// a polynomial in d+1 variables, homogeneous of degree a + b + kd + 1.
MultiPoly w_integrand(int N, int k, int d, int a, int b);

// w(O_{h^a} O_{h^b})_{0,d}: integral of the integrand over the degree-d
// quasimap space. Exactly 0 off the selection line a + b = N-3 + (N-k)d and
// for negative exponents.
Rational w_two_point(int N, int k, int d, int a, int b, RingCache& cache = global_ring_cache());

// d = 1 closed form: the quasimap space is a product of two projective
// spaces, so w is the coefficient of x^{N-1-a} y^{N-1-b} in e^k(x, y).
Rational w_d1_closed(int N, int k, int a, int b);

// Virtual structure constant L~_n^{N,k,d} = (d/k) w(O_{h^{N-2-n}} O_{h^{n-1+(N-k)d}})_{0,d};
// 0 when either exponent is negative.
Rational vsc(int N, int k, int d, int n, RingCache& cache = global_ring_cache());

}  // namespace gmtkit
