/*
   Copyright 2026 The mvop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVOP_LINALG_HPP
#define MVOP_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "matrix.hpp"

namespace mvop {

using IntRow = std::vector<Integer>;

/// Divides v by the gcd of its entries; makes the first nonzero entry positive when
/// `sign_first` is set.
inline void make_primitive(IntRow& v, bool sign_first = false) {
    Integer g = 0;
    for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0) return;
    if (sign_first) {
        for (const auto& z : v)
            if (z != 0) {
                if (z < 0) g = -g;
                break;
            }
    }
    if (g == 1) return;
    for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators of a rational row (row-wise lcm), result is primitive.
inline IntRow integer_row(std::span<const Rational> row) {
    Integer l = 1;
    for (const auto& r : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].num() * (l / row[j].den());
    make_primitive(out);
    return out;
}

inline std::vector<IntRow> integer_rows(const RatMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    std::vector<Rational> buf(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) buf[j] = m(i, j);
        rows.push_back(integer_row(buf));
    }
    return rows;
}

/// Row echelon form of an integer matrix: nonzero rows only, each primitive, with
/// strictly increasing pivot columns.
struct Echelon {
    std::size_t cols = 0;
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

/// Fraction-free (Bareiss) forward elimination with column skipping. Every update
/// divides exactly by the previous pivot, so intermediate entries are minors of the
/// input and never need rational arithmetic.
inline Echelon bareiss_echelon(std::vector<IntRow> a, std::size_t cols) {
    Echelon out;
    out.cols = cols;
    const std::size_t nrows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            IntRow& row = a[i];
            const Integer f = row[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * row[j];
                if (f != 0) t -= f * a[r][j];
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    for (auto& row : a) make_primitive(row);
    out.rows = std::move(a);
    return out;
}

inline Echelon bareiss_echelon(const RatMatrix& m) { return bareiss_echelon(integer_rows(m), m.cols()); }

/// Right nullspace basis from an echelon form. One vector per free column, in
/// increasing column order; each is integral with content 1 and a positive entry at
/// its free column.
inline std::vector<IntRow> nullspace_from_echelon(const Echelon& e) {
    std::vector<bool> is_pivot(e.cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<IntRow> basis;
    for (std::size_t f = 0; f < e.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(e.cols);
        x[f] = 1;
        for (std::size_t i = e.rows.size(); i-- > 0;) {
            const std::size_t pc = e.pivots[i];
            if (pc > f) continue;
            Rational acc;
            for (std::size_t j = pc + 1; j <= f; ++j)
                if (!x[j].is_zero() && e.rows[i][j] != 0) acc += Rational(e.rows[i][j]) * x[j];
            x[pc] = -acc / Rational(e.rows[i][pc]);
        }
        basis.push_back(integer_row(x));
    }
    return basis;
}

/// Basis of the right nullspace of M over Q; empty when M has full column rank.
inline std::vector<RatMatrix> nullspace_exact(const RatMatrix& m) {
    std::vector<RatMatrix> out;
    for (const auto& v : nullspace_from_echelon(bareiss_echelon(m))) {
        RatMatrix col(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = Rational(v[i]);
        out.push_back(std::move(col));
    }
    return out;
}

inline std::size_t rank(const RatMatrix& m) { return bareiss_echelon(m).rank(); }

/// Solution of M x = b. Returns nullopt when inconsistent; `free_dimension` reports the
/// dimension of the homogeneous solution space (0 means the solution is unique).
struct LinearSolution {
    std::vector<Rational> x;
    std::size_t free_dimension = 0;
};

inline std::optional<LinearSolution> solve_exact(const RatMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "right-hand side length mismatch");
    const std::size_t n = m.cols();
    RatMatrix aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = -b[i];
    }
    const auto e = bareiss_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    LinearSolution sol;
    sol.free_dimension = n - e.rank();
    // Particular solution: free columns zero, last column fixed to 1.
    std::vector<Rational> x(n + 1);
    x[n] = 1;
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        const std::size_t pc = e.pivots[i];
        Rational acc = Rational(e.rows[i][n]);
        for (std::size_t j = pc + 1; j < n; ++j)
            if (!x[j].is_zero() && e.rows[i][j] != 0) acc += Rational(e.rows[i][j]) * x[j];
        x[pc] = -acc / Rational(e.rows[i][pc]);
    }
    x.pop_back();
    sol.x = std::move(x);
    return sol;
}

/// Reduced row echelon form over Q of a list of vectors, zero rows dropped. Used to put
/// operator bases in canonical form so that equal spans compare equal.
inline std::vector<std::vector<Rational>> rref(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational piv = rows[r][c];
        for (auto& v : rows[r]) v /= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace mvop

#endif  // MVOP_LINALG_HPP
