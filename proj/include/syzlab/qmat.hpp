#pragma once

#include <vector>

#include "syzlab/rational.hpp"

namespace syzlab {

/// Dense matrix over the rationals.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("QMat: negative dimension");
    }
    static QMat from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[idx(r, c)]; }
    const Rational& at(int r, int c) const { return a_[idx(r, c)]; }

    QMat transposed() const;

private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact rank over Q. Fraction-free elimination for small matrices; large
/// ones take a modular fast path whose result is certified exactly (pivot
/// minor for the lower bound, verified kernel vectors for the upper bound).
int rank(const QMat& m);

/// Basis of the right null space, exact, in reduced standard form (one unit
/// coordinate per free column). Size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const QMat& m);

/// True iff the row spans of A and B coincide. All vectors must share one
/// length; either side may be empty (empty span).
bool span_equal(const std::vector<std::vector<Rational>>& a,
                const std::vector<std::vector<Rational>>& b);

/// Rank of a list of row vectors (convenience wrapper).
int row_rank(const std::vector<std::vector<Rational>>& rows);

namespace detail {

/// Lower bound on the rank from one modular elimination: an r x r pivot
/// submatrix invertible mod p is invertible over Z, so true rank >= result.
/// Different attempts use different primes. Never exceeds the true rank.
int rank_lower_bound(const QMat& m, int attempt = 0);

}  // namespace detail

}  // namespace syzlab
