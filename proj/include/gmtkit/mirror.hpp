#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gmtkit/chow_ring.hpp"
#include "gmtkit/qseries.hpp"

namespace gmtkit {

// Hypergeometric series w_0(x) = sum_d (kd)!/(d!)^k q^d  (q = e^x).
QSeries w0_series(int k, int order);

// w_1(x) = sum_{d>=1} (kd)!/(d!)^k [sum_{i=1}^{d} sum_{l=1}^{k-1} l/(i(ki-l))] q^d.
QSeries w1_series(int k, int order);

// Mirror map t(x) = x + w_1/w_0; tmap holds the q-coefficients of t(x) - x.
struct MirrorData {
    int k = 0;
    int order = 0;
    QSeries w0, w1, tmap;

    MirrorData(int k_, int order_) : k(k_), order(order_), w0(order_), w1(order_), tmap(order_) {}
};

MirrorData mirror_map_series(int k, int order);

// Per-degree comparison of the ring route w(O_{h^{k-3}} O_1)_{0,d} against
// k * [q^d](w_1/w_0) for the Calabi-Yau case N = k. Exact equalities; this
// doubles as the normalization check of the residue at d >= 2.
struct MirrorIdentityReport {
    struct Row {
        int d;
        Rational ring_value;
        Rational series_value;
        bool ok;
    };
    int k = 0;
    std::vector<Row> rows;
    bool all_ok = true;
};

struct MirrorMismatch : std::runtime_error {
    explicit MirrorMismatch(const std::string& what) : std::runtime_error(what) {}
};

MirrorIdentityReport check_w_mirror_identity(int k, int d_max,
                                             RingCache& cache = global_ring_cache());
// Same check, throwing MirrorMismatch on the first failing degree.
void require_w_mirror_identity(int k, int d_max, RingCache& cache = global_ring_cache());

// Solves k t(x) + sum_d <..>_{0,d} e^{d t(x)} = k x + sum_d w_d e^{dx}
// degree by degree for the Gromov-Witten invariants <..>_{0,d}, given the
// w-values for one fixed insertion pair with a + b = N - 3 (N = k).
std::map<int, Rational> cy_series_route(int k, const std::map<int, Rational>& w_by_degree,
                                        int d_max);

}  // namespace gmtkit
