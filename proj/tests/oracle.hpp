#pragma once

// Test-only oracle: an independent route to the graded quotient dimensions.
// Builds the degree-t coefficient matrix directly and row-reduces it with
// plain rational Gaussian elimination (first nonzero pivot, no fraction-free
// tricks, no modular arithmetic), so it shares no elimination code with the
// library path it cross-checks.

#include <map>
#include <vector>

#include "syzlab/hpoly.hpp"

namespace syzlab::oracle {

inline int naive_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    size_t col = 0;
    while (col < cols && rank < static_cast<int>(rows.size())) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        Rational inv = rows[static_cast<size_t>(rank)][col].inverse();
        for (size_t j = col; j < cols; ++j) rows[static_cast<size_t>(rank)][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<size_t>(rank) || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (size_t j = col; j < cols; ++j)
                rows[r][j] -= factor * rows[static_cast<size_t>(rank)][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

// dim (R/J_f)_t via one dense row per monomial multiple of a partial
inline int quotient_dim_at(const HPoly& f, int t) {
    int d = f.degree();
    int s = t - (d - 1);
    if (s < 0) return graded_dim(t);
    std::map<Mono, int, MonoCmp> idx;
    int n = 0;
    for (const Mono& m : monomials_of_degree(t)) idx.emplace(m, n++);
    std::vector<std::vector<Rational>> rows;
    for (Var v : {Var::X, Var::Y, Var::Z}) {
        HPoly p = partial_derivative(f, v);
        for (const Mono& mu : monomials_of_degree(s)) {
            std::vector<Rational> row(static_cast<size_t>(n));
            for (const auto& [m, c] : p.terms())
                row[static_cast<size_t>(idx.at({m.i + mu.i, m.j + mu.j, m.k + mu.k}))] = c;
            rows.push_back(std::move(row));
        }
    }
    return n - naive_rank(std::move(rows));
}

// stable quotient dimension read off at the head of the scan window, with a
// second sample at the window tail confirming the plateau
inline int tau_independent(const HPoly& f) {
    int d = f.degree();
    int start = 3 * d - 6;
    int head = quotient_dim_at(f, start);
    int tail = quotient_dim_at(f, start + std::max(d, 4));
    if (head != tail) throw std::runtime_error("oracle: no plateau at the scan window");
    return head;
}

}  // namespace syzlab::oracle
