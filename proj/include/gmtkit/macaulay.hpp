#pragma once

#include <utility>
#include <vector>

#include "gmtkit/monomial.hpp"
#include "gmtkit/rational.hpp"

namespace gmtkit::detail {

// All monomials of the given total degree, sorted descending under grevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Indexed monomial basis of one graded piece. Column 0 holds the largest
// monomial, so the leading entry of a sorted sparse row is its front.
class DegreeBasis {
public:
    DegreeBasis(int nvars, int degree);

    int size() const { return static_cast<int>(monos_.size()); }
    int degree() const { return degree_; }
    const Monomial& monomial(int col) const { return monos_[static_cast<size_t>(col)]; }
    // -1 when m is not of this degree.
    int index_of(const Monomial& m) const;

private:
    int nvars_, degree_;
    std::vector<Monomial> monos_;
};

// Sparse row over a DegreeBasis, entries sorted by column index ascending.
using SparseRow = std::vector<std::pair<int, Rational>>;

// x + c*y for nonzero c; zero results are dropped.
SparseRow axpy(const SparseRow& x, const Rational& c, const SparseRow& y);

// Incremental row echelon form over the rationals. Rows are inserted in a
// fixed order; each is fully reduced against the pivots present at insertion
// time and, if nonzero, registered with its leading coefficient normalized
// to 1. Deterministic by construction. With history tracking enabled, every
// stored row also knows its expression as a combination of the inserted
// generator rows.
class Echelon {
public:
    explicit Echelon(int ncols, bool track_history = false);

    // Reduces r to its normal form. When combo is non-null, records pairs
    // (pivot_row, coeff) with input = normal_form + sum coeff * row(pivot_row).
    SparseRow reduce(SparseRow r, std::vector<std::pair<int, Rational>>* combo = nullptr) const;

    // Inserts a generator row; gen_index names it in histories. Returns true
    // if the row contributed a new pivot.
    bool insert(SparseRow r, int gen_index = -1);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool has_pivot(int col) const { return pivot_of_col_[static_cast<size_t>(col)] >= 0; }
    const SparseRow& row(int idx) const { return rows_[static_cast<size_t>(idx)]; }
    const SparseRow& history(int idx) const { return histories_[static_cast<size_t>(idx)]; }
    bool tracks_history() const { return track_; }
    std::vector<int> nonpivot_columns() const;

    // Expands a pivot-row combination into a generator combination.
    SparseRow combo_to_generators(const std::vector<std::pair<int, Rational>>& combo) const;

private:
    int ncols_;
    bool track_;
    std::vector<SparseRow> rows_;
    std::vector<SparseRow> histories_;
    std::vector<int> pivot_of_col_;
};

}  // namespace gmtkit::detail
