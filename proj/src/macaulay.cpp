#include "gmtkit/macaulay.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmtkit::detail {

namespace {

void gen_monomials(int nvars, int var, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        exps[static_cast<size_t>(var)] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[static_cast<size_t>(var)] = e;
        gen_monomials(nvars, var + 1, remaining - e, exps, out);
    }
    exps[static_cast<size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars < 1 || degree < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    gen_monomials(nvars, 0, degree, exps, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp_grevlex(a, b) > 0; });
    return out;
}

DegreeBasis::DegreeBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), monos_(monomials_of_degree(nvars, degree)) {}

int DegreeBasis::index_of(const Monomial& m) const {
    if (m.nvars() != nvars_ || m.degree() != degree_) return -1;
    auto it = std::lower_bound(
        monos_.begin(), monos_.end(), m,
        [](const Monomial& a, const Monomial& b) { return Monomial::cmp_grevlex(a, b) > 0; });
    if (it == monos_.end() || *it != m) return -1;
    return static_cast<int>(it - monos_.begin());
}

SparseRow axpy(const SparseRow& x, const Rational& c, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i]);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, c * y[j].second);
            ++j;
        } else {
            Rational v = x[i].second;
            v.add_mul(c, y[j].second);
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

Echelon::Echelon(int ncols, bool track_history)
    : ncols_(ncols), track_(track_history), pivot_of_col_(static_cast<size_t>(ncols), -1) {}

SparseRow Echelon::reduce(SparseRow r, std::vector<std::pair<int, Rational>>* combo) const {
    // Columns are processed left to right; pivot rows lead at their pivot
    // column, so eliminating at position pos never disturbs entries before it.
    size_t pos = 0;
    while (pos < r.size()) {
        int col = r[pos].first;
        int piv = pivot_of_col_[static_cast<size_t>(col)];
        if (piv < 0) {
            ++pos;
            continue;
        }
        Rational coef = r[pos].second;  // pivot rows are monic
        if (combo) combo->emplace_back(piv, coef);
        SparseRow head(r.begin(), r.begin() + static_cast<long>(pos));
        SparseRow tail(r.begin() + static_cast<long>(pos), r.end());
        SparseRow merged = axpy(tail, -coef, rows_[static_cast<size_t>(piv)]);
        head.insert(head.end(), merged.begin(), merged.end());
        r = std::move(head);
    }
    return r;
}

bool Echelon::insert(SparseRow r, int gen_index) {
    std::vector<std::pair<int, Rational>> combo;
    r = reduce(std::move(r), track_ ? &combo : nullptr);
    if (r.empty()) return false;
    Rational inv = r.front().second.reciprocal();
    for (auto& [c, v] : r) v *= inv;
    if (track_) {
        SparseRow h;
        if (gen_index >= 0) h.emplace_back(gen_index, Rational(1));
        for (const auto& [piv, coef] : combo) h = axpy(h, -coef, histories_[static_cast<size_t>(piv)]);
        for (auto& [g, v] : h) v *= inv;
        histories_.push_back(std::move(h));
    }
    pivot_of_col_[static_cast<size_t>(r.front().first)] = rank();
    rows_.push_back(std::move(r));
    return true;
}

std::vector<int> Echelon::nonpivot_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_of_col_[static_cast<size_t>(c)] < 0) out.push_back(c);
    return out;
}

SparseRow Echelon::combo_to_generators(const std::vector<std::pair<int, Rational>>& combo) const {
    if (!track_) throw std::logic_error("Echelon::combo_to_generators: history tracking disabled");
    SparseRow out;
    for (const auto& [piv, coef] : combo) out = axpy(out, coef, histories_[static_cast<size_t>(piv)]);
    return out;
}

}  // namespace gmtkit::detail
