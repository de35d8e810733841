#include "gmtkit/mirror.hpp"

#include "gmtkit/quasimap.hpp"

namespace gmtkit {

QSeries w0_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("w0_series: require k >= 1");
    QSeries s(order);
    for (int d = 0; d <= order; ++d) {
        Rational c = Rational::factorial(static_cast<unsigned long>(k) * d) /
                     Rational::pow(Rational::factorial(static_cast<unsigned long>(d)), k);
        s.set(d, std::move(c));
    }
    return s;
}

QSeries w1_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("w1_series: require k >= 1");
    QSeries s(order);
    Rational harmonic(0);  // sum_{i<=d} sum_{l<k} l/(i(ki-l)), accumulated over d
    for (int d = 1; d <= order; ++d) {
        for (int l = 1; l <= k - 1; ++l)
            harmonic += Rational(l) / Rational(static_cast<long>(d) * (static_cast<long>(k) * d - l));
        Rational c = Rational::factorial(static_cast<unsigned long>(k) * d) /
                     Rational::pow(Rational::factorial(static_cast<unsigned long>(d)), k);
        s.set(d, c * harmonic);
    }
    return s;
}

MirrorData mirror_map_series(int k, int order) {
    MirrorData md(k, order);
    md.w0 = w0_series(k, order);
    md.w1 = w1_series(k, order);
    md.tmap = md.w1 * md.w0.recip();
    return md;
}

MirrorIdentityReport check_w_mirror_identity(int k, int d_max, RingCache& cache) {
    if (k < 3) throw std::invalid_argument("check_w_mirror_identity: require k >= 3");
    if (d_max < 1) throw std::invalid_argument("check_w_mirror_identity: require d_max >= 1");
    MirrorData md = mirror_map_series(k, d_max);
    MirrorIdentityReport rep;
    rep.k = k;
    for (int d = 1; d <= d_max; ++d) {
        MirrorIdentityReport::Row row;
        row.d = d;
        row.ring_value = w_two_point(k, k, d, k - 3, 0, cache);
        row.series_value = Rational(k) * md.tmap.at(d);
        row.ok = row.ring_value == row.series_value;
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

void require_w_mirror_identity(int k, int d_max, RingCache& cache) {
    MirrorIdentityReport rep = check_w_mirror_identity(k, d_max, cache);
    for (const auto& row : rep.rows) {
        if (!row.ok)
            throw MirrorMismatch("w-mirror identity fails at d=" + std::to_string(row.d) + ": ring " +
                                 row.ring_value.str() + " vs series " + row.series_value.str());
    }
}

std::map<int, Rational> cy_series_route(int k, const std::map<int, Rational>& w_by_degree,
                                        int d_max) {
    if (k < 1) throw std::invalid_argument("cy_series_route: require k >= 1");
    if (d_max < 1) throw std::invalid_argument("cy_series_route: require d_max >= 1");
    for (int d = 1; d <= d_max; ++d)
        if (!w_by_degree.count(d))
            throw std::invalid_argument("cy_series_route: missing w value at degree " +
                                        std::to_string(d));
    MirrorData md = mirror_map_series(k, d_max);
    // e^{d t(x)} = q^d exp(d * tmap); cache the exponentials.
    std::vector<QSeries> exps;
    exps.reserve(static_cast<size_t>(d_max) + 1);
    for (int d = 0; d <= d_max; ++d) exps.push_back((md.tmap * Rational(d)).exp());

    // q^D coefficient of the identity:
    //   k tmap[D] + sum_{d<=D} gw_d [q^{D-d}] exp(d tmap) = w_D,
    // and the d = D term enters with unit coefficient.
    std::map<int, Rational> gw;
    for (int D = 1; D <= d_max; ++D) {
        Rational rhs = w_by_degree.at(D) - Rational(k) * md.tmap.at(D);
        for (int d = 1; d < D; ++d)
            rhs.sub_mul(gw.at(d), exps[static_cast<size_t>(d)].at(D - d));
        gw[D] = std::move(rhs);
    }
    return gw;
}

}  // namespace gmtkit
