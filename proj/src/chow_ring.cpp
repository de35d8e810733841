#include "gmtkit/chow_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmtkit/errors.hpp"

namespace gmtkit {

namespace {

Monomial pure_power(int nvars, int var, int power) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = power;
    return Monomial(std::move(e));
}

// Laplace expansion along the sparsest remaining row.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a, std::vector<int> rows,
                   std::vector<int> cols) {
    int nv = a[0][0].nvars();
    if (rows.empty()) return MultiPoly::constant(nv, Rational(1));
    size_t best = 0;
    int best_nnz = -1;
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        int nnz = 0;
        for (int c : cols)
            if (!a[static_cast<size_t>(rows[ri])][static_cast<size_t>(c)].is_zero()) ++nnz;
        if (best_nnz < 0 || nnz < best_nnz) {
            best_nnz = nnz;
            best = ri;
        }
    }
    MultiPoly acc(nv);
    if (best_nnz == 0) return acc;  // singular block
    int r = rows[best];
    std::vector<int> sub_rows = rows;
    sub_rows.erase(sub_rows.begin() + static_cast<long>(best));
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const MultiPoly& entry = a[static_cast<size_t>(r)][static_cast<size_t>(cols[ci])];
        if (entry.is_zero()) continue;
        std::vector<int> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(ci));
        MultiPoly minor = poly_det(a, sub_rows, sub_cols);
        MultiPoly term = entry * minor;
        if ((best + ci) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

QuasimapRing::QuasimapRing(int N, int d) : N_(N), d_(d), socle_degree_(N * (d + 1) - 2) {
    if (N < 2 || d < 1) throw std::invalid_argument("QuasimapRing: require N >= 2 and d >= 1");
    int nv = d + 1;
    // f_0 = H_0^N and f_d = H_d^N; interior f_i = H_i^N (2H_i - H_{i-1} - H_{i+1}).
    relations_.reserve(static_cast<size_t>(nv));
    for (int i = 0; i <= d; ++i) {
        if (i == 0 || i == d) {
            relations_.push_back(MultiPoly::term(pure_power(nv, i, N), Rational(1)));
        } else {
            MultiPoly lin =
                MultiPoly::variable(nv, i) * Rational(2) - MultiPoly::variable(nv, i - 1) -
                MultiPoly::variable(nv, i + 1);
            relations_.push_back(MultiPoly::term(pure_power(nv, i, N), Rational(1)) * lin);
        }
    }
    // Pure-power relations first: their Macaulay rows are single-entry and
    // pivot immediately, which keeps the eliminations small.
    relation_order_.push_back(0);
    relation_order_.push_back(d);
    for (int i = 1; i <= d - 1; ++i) relation_order_.push_back(i);
}

std::vector<std::pair<int, Monomial>> QuasimapRing::generators_at(int D) const {
    std::vector<std::pair<int, Monomial>> gens;
    for (int j : relation_order_) {
        int degf = relations_[static_cast<size_t>(j)].degree();
        if (D < degf) continue;
        for (const Monomial& m : detail::monomials_of_degree(nvars(), D - degf)) gens.emplace_back(j, m);
    }
    return gens;
}

detail::SparseRow QuasimapRing::product_row(const detail::DegreeBasis& basis, int rel,
                                            const Monomial& mult) const {
    detail::SparseRow row;
    for (const auto& [tm, tc] : relations_[static_cast<size_t>(rel)]) {
        int col = basis.index_of(mult.times(tm));
        row.emplace_back(col, tc);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

const QuasimapRing::DegreeData& QuasimapRing::degree_data(int D) const {
    auto it = degrees_.find(D);
    if (it != degrees_.end()) return it->second;
    detail::DegreeBasis basis(nvars(), D);
    detail::Echelon ech(basis.size());
    for (const auto& [rel, mult] : generators_at(D)) ech.insert(product_row(basis, rel, mult));
    return degrees_.emplace(D, DegreeData{std::move(basis), std::move(ech)}).first->second;
}

int QuasimapRing::graded_dim(int m) const {
    if (m < 0) throw std::invalid_argument("graded_dim: m must be >= 0");
    std::scoped_lock lk(mu_);
    const DegreeData& dd = degree_data(m);
    return dd.basis.size() - dd.echelon.rank();
}

bool QuasimapRing::pure_power_in_ideal(int var, int power) const {
    const DegreeData& dd = degree_data(power);
    int col = dd.basis.index_of(pure_power(nvars(), var, power));
    detail::SparseRow r{{col, Rational(1)}};
    return dd.echelon.reduce(std::move(r)).empty();
}

ResidueCertificate QuasimapRing::solve_certificate(int var, int power) const {
    detail::DegreeBasis basis(nvars(), power);
    detail::Echelon ech(basis.size(), /*track_history=*/true);
    auto gens = generators_at(power);
    for (size_t g = 0; g < gens.size(); ++g)
        ech.insert(product_row(basis, gens[g].first, gens[g].second), static_cast<int>(g));

    int col = basis.index_of(pure_power(nvars(), var, power));
    std::vector<std::pair<int, Rational>> combo;
    detail::SparseRow rem = ech.reduce({{col, Rational(1)}}, &combo);
    if (!rem.empty())
        throw CertificateNotFound("solve_certificate: membership lost during tracked solve");

    ResidueCertificate cert;
    cert.var = var;
    cert.power = power;
    cert.cofactors.assign(static_cast<size_t>(nvars()), MultiPoly(nvars()));
    for (const auto& [gen, coef] : ech.combo_to_generators(combo)) {
        const auto& [rel, mult] = gens[static_cast<size_t>(gen)];
        cert.cofactors[static_cast<size_t>(rel)].add_term(mult, coef);
    }
    return cert;
}

const QuasimapRing::ResidueData& QuasimapRing::residue_data() const {
    if (residue_) return *residue_;
    ResidueData rd;
    rd.certs.reserve(static_cast<size_t>(nvars()));
    for (int i = 0; i <= d_; ++i) {
        if (i == 0 || i == d_) {
            ResidueCertificate cert;
            cert.var = i;
            cert.power = N_;
            cert.cofactors.assign(static_cast<size_t>(nvars()), MultiPoly(nvars()));
            cert.cofactors[static_cast<size_t>(i)] = MultiPoly::constant(nvars(), Rational(1));
            rd.certs.push_back(std::move(cert));
            continue;
        }
        int bound = N_ * (d_ + 1);
        int found = -1;
        for (int M = N_; M <= bound; ++M) {
            if (pure_power_in_ideal(i, M)) {
                found = M;
                break;
            }
        }
        if (found < 0)
            throw CertificateNotFound("residue_data: no certificate for H_" + std::to_string(i) +
                                      " within degree bound");
        rd.certs.push_back(solve_certificate(i, found));
    }
    // Exact verification of every certificate identity.
    for (const ResidueCertificate& cert : rd.certs) {
        MultiPoly sum(nvars());
        for (int j = 0; j <= d_; ++j)
            sum += cert.cofactors[static_cast<size_t>(j)] * relations_[static_cast<size_t>(j)];
        if (sum != MultiPoly::term(pure_power(nvars(), cert.var, cert.power), Rational(1)))
            throw CertificateNotFound("residue_data: certificate identity failed for H_" +
                                      std::to_string(cert.var));
    }
    std::vector<std::vector<MultiPoly>> a;
    for (int i = 0; i <= d_; ++i) a.push_back(rd.certs[static_cast<size_t>(i)].cofactors);
    std::vector<int> idx(static_cast<size_t>(nvars()));
    for (int i = 0; i <= d_; ++i) idx[static_cast<size_t>(i)] = i;
    rd.det_cofactor = poly_det(a, idx, idx);
    std::vector<int> texp(static_cast<size_t>(nvars()));
    for (int i = 0; i <= d_; ++i) texp[static_cast<size_t>(i)] = rd.certs[static_cast<size_t>(i)].power - 1;
    rd.target = Monomial(std::move(texp));
    residue_ = std::move(rd);
    return *residue_;
}

const ResidueCertificate& QuasimapRing::certificate(int i) const {
    if (i < 0 || i > d_) throw std::invalid_argument("certificate: variable index out of range");
    std::scoped_lock lk(mu_);
    return residue_data().certs[static_cast<size_t>(i)];
}

Rational QuasimapRing::integrate(const MultiPoly& p) const {
    if (p.nvars() != nvars()) throw std::invalid_argument("integrate: nvars mismatch");
    if (p.is_zero()) return Rational(0);
    std::scoped_lock lk(mu_);
    const ResidueData& rd = residue_data();
    Rational acc(0);
    for (const auto& [m, c] : p) {
        if (m.degree() != socle_degree_) continue;  // other components integrate to 0
        if (!m.divides(rd.target)) continue;
        acc.add_mul(c, rd.det_cofactor.coeff(rd.target.divided_by(m)));
    }
    return acc;
}

const QuasimapRing::SocleData& QuasimapRing::socle_data() const {
    if (socle_) return *socle_;
    const DegreeData& dd = degree_data(socle_degree_);
    std::vector<int> free_cols = dd.echelon.nonpivot_columns();
    if (free_cols.size() != 1)
        throw std::logic_error("socle_data: socle is not one-dimensional");
    SocleData sd;
    sd.monomial = dd.basis.monomial(free_cols[0]);
    const ResidueData& rd = residue_data();
    if (sd.monomial.divides(rd.target))
        sd.value = rd.det_cofactor.coeff(rd.target.divided_by(sd.monomial));
    socle_ = std::move(sd);
    return *socle_;
}

const Monomial& QuasimapRing::socle_monomial() const {
    std::scoped_lock lk(mu_);
    return socle_data().monomial;
}

Rational QuasimapRing::integrate_via_reduction(const MultiPoly& p) const {
    if (p.nvars() != nvars()) throw std::invalid_argument("integrate_via_reduction: nvars mismatch");
    MultiPoly comp = p.homogeneous_component(socle_degree_);
    if (comp.is_zero()) return Rational(0);
    std::scoped_lock lk(mu_);
    const SocleData& sd = socle_data();
    const DegreeData& dd = degree_data(socle_degree_);
    detail::SparseRow row;
    for (const auto& [m, c] : comp) row.emplace_back(dd.basis.index_of(m), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    detail::SparseRow rem = dd.echelon.reduce(std::move(row));
    if (rem.empty()) return Rational(0);
    if (rem.size() != 1 || dd.basis.monomial(rem[0].first) != sd.monomial)
        throw std::logic_error("integrate_via_reduction: normal form not supported on the socle");
    return rem[0].second * sd.value;
}

std::shared_ptr<const QuasimapRing> RingCache::get(int N, int d) {
    std::scoped_lock lk(mu_);
    auto key = std::make_pair(N, d);
    auto it = rings_.find(key);
    if (it != rings_.end()) return it->second;
    auto ring = std::make_shared<const QuasimapRing>(N, d);
    rings_.emplace(key, ring);
    return ring;
}

RingCache& global_ring_cache() {
    static RingCache cache;
    return cache;
}

}  // namespace gmtkit
