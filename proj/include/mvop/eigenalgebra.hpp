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

#ifndef MVOP_EIGENALGEBRA_HPP
#define MVOP_EIGENALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffop.hpp"

namespace mvop {

/// Search limits for the operator space. Degree bound D_k defaults to k.
struct SolveConfig {
    unsigned max_order = 4;
    std::vector<unsigned> degree_bounds;
    unsigned initial_train = 0;  // last training index of the first round; 0 means max_order + 2
    unsigned growth = 2;
    unsigned verify_count = 4;
    unsigned max_train = 80;

    unsigned bound(std::size_t k) const {
        return k < degree_bounds.size() ? degree_bounds[k] : static_cast<unsigned>(k);
    }
    unsigned first_train() const { return initial_train ? initial_train : max_order + 2; }
};

/// Bijection between MatDiffOp coefficients and flat vectors. Coordinates run over
/// order k descending, entry (i, j) row-major, power d descending. This ordering is
/// also the one used to normalize bases: the first nonzero coordinate of an operator
/// is its highest-order, top-left-most, highest-power coefficient.
class OperatorLayout {
   public:
    OperatorLayout(std::size_t n, const SolveConfig& cfg) : n_(n), m_(cfg.max_order) {
        std::size_t off = 0;
        for (unsigned k = m_ + 1; k-- > 0;) {
            offset_[k] = off;
            bound_[k] = cfg.bound(k);
            off += n_ * n_ * (bound_[k] + 1);
        }
        size_ = off;
    }

    std::size_t size() const { return size_; }
    std::size_t n() const { return n_; }
    unsigned max_order() const { return m_; }
    unsigned bound(unsigned k) const { return bound_.at(k); }

    std::size_t index(unsigned k, std::size_t i, std::size_t j, unsigned d) const {
        return offset_.at(k) + (i * n_ + j) * (bound_.at(k) + 1) + (bound_.at(k) - d);
    }

    MatDiffOp to_operator(const std::vector<Rational>& v) const {
        std::vector<MatPoly> c(m_ + 1, MatPoly(n_));
        for (unsigned k = 0; k <= m_; ++k)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    std::vector<Rational> pc(bound_.at(k) + 1);
                    for (unsigned d = 0; d <= bound_.at(k); ++d) pc[d] = v[index(k, i, j, d)];
                    c[k](i, j) = Poly(std::move(pc));
                }
        return MatDiffOp(n_, std::move(c));
    }

    /// nullopt when the operator does not fit within the order and degree bounds.
    std::optional<std::vector<Rational>> to_vector(const MatDiffOp& op) const {
        if (op.size() != n_) throw Error(ErrorCode::SizeMismatch, "operator size differs from layout");
        if (op.order() > static_cast<int>(m_)) return std::nullopt;
        std::vector<Rational> v(size_);
        for (std::size_t k = 0; k < op.coeffs().size(); ++k)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    const Poly& p = op.coeffs()[k](i, j);
                    if (p.degree() > static_cast<int>(bound_.at(static_cast<unsigned>(k)))) return std::nullopt;
                    for (int d = 0; d <= p.degree(); ++d)
                        v[index(static_cast<unsigned>(k), i, j, static_cast<unsigned>(d))] = p[static_cast<std::size_t>(d)];
                }
        return v;
    }

   private:
    std::size_t n_;
    unsigned m_;
    std::size_t size_ = 0;
    std::map<unsigned, std::size_t> offset_;
    std::map<unsigned, unsigned> bound_;
};

using MatFamily = std::function<MatPoly(unsigned)>;

/// Stacked coefficients [P_0 | P_1 | ... | P_T] of a matrix polynomial (N x N(T+1)).
inline RatMatrix stacked_coefficients(const MatPoly& p, int top) {
    const std::size_t n = p.size();
    const std::size_t blocks = static_cast<std::size_t>(std::max(top, 0) + 1);
    RatMatrix out(n, n * blocks);
    for (std::size_t e = 0; e < blocks; ++e)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, e * n + j) = p(i, j)[e];
    return out;
}

/// Gamma_n with P_n B = Gamma_n P_n, solved from the coefficient system of P_n.
inline RatMatrix compute_eigenvalue(const MatDiffOp& op, const MatPoly& p) {
    const MatPoly pb = apply_matrix(p, op);
    const int top = std::max(p.degree(), pb.degree());
    const RatMatrix c = stacked_coefficients(p, top);
    const RatMatrix q = stacked_coefficients(pb, top);
    if (rank(c) < p.size()) throw Error(ErrorCode::RankDeficient, "coefficients of P_n do not have full row rank");
    const RatMatrix ct = c.transpose();
    RatMatrix gamma(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Rational> rhs(q.cols());
        for (std::size_t j = 0; j < q.cols(); ++j) rhs[j] = q(i, j);
        const auto sol = solve_exact(ct, rhs);
        if (!sol) throw Error(ErrorCode::NotAnEigenfunction, "P_n B is not a left multiple of P_n");
        for (std::size_t j = 0; j < p.size(); ++j) gamma(i, j) = sol->x[j];
    }
    return gamma;
}

/// Table n -> Gamma_n for n in [first, last].
inline std::map<unsigned, RatMatrix> compute_eigenvalues(const MatDiffOp& op, const MatFamily& family, unsigned first,
                                                         unsigned last) {
    std::map<unsigned, RatMatrix> out;
    for (unsigned n = first; n <= last; ++n) {
        try {
            out.emplace(n, compute_eigenvalue(op, family(n)));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotAnEigenfunction) throw;
            throw Error(ErrorCode::NotAnEigenfunction, "index n = " + std::to_string(n));
        }
    }
    return out;
}

/// Exact interpolation Gamma_n = sum_j G_j n^j through the first degree + 1 entries,
/// checked against every entry of the table.
inline std::vector<RatMatrix> fit_eigenvalue_poly(const std::map<unsigned, RatMatrix>& table, unsigned degree) {
    if (table.size() < degree + 2) throw Error(ErrorCode::NotPolynomial, "table too short to certify the fit");
    std::vector<std::pair<unsigned, RatMatrix>> pts(table.begin(), table.end());
    const std::size_t rows = pts.front().second.rows(), cols = pts.front().second.cols();
    // Vandermonde solve on the first degree + 1 points.
    RatMatrix v(degree + 1, degree + 1);
    for (unsigned r = 0; r <= degree; ++r)
        for (unsigned c = 0; c <= degree; ++c) v(r, c) = pow(Rational(pts[r].first), c);
    const RatMatrix vinv = inverse(v);
    std::vector<RatMatrix> g(degree + 1, RatMatrix(rows, cols));
    for (unsigned j = 0; j <= degree; ++j)
        for (unsigned r = 0; r <= degree; ++r) g[j] += pts[r].second * vinv(j, r);
    for (const auto& [n, gamma] : pts) {
        RatMatrix val(rows, cols);
        for (unsigned j = 0; j <= degree; ++j) val += g[j] * pow(Rational(n), j);
        if (val != gamma) throw Error(ErrorCode::NotPolynomial, "entry at n = " + std::to_string(n) + " deviates");
    }
    return g;
}

struct EigenPair {
    MatDiffOp op;
    std::map<unsigned, RatMatrix> eigenvalues;
    std::optional<std::vector<RatMatrix>> fit;
};

struct StabilizationStep {
    unsigned train_last;
    std::size_t dimension;
};

struct EigenSolveResult {
    std::size_t dimension = 0;
    std::vector<EigenPair> basis;  // basis[0] is the identity
    unsigned train_last = 0;
    std::vector<unsigned> verified;
    std::vector<StabilizationStep> history;
};

namespace detail {

/// Integer constraint rows that the operator coordinates must satisfy for P_n to be an
/// eigenfunction. Gamma_n is eliminated through the leading coefficient L of P_n:
/// Gamma_n = [P_n B]_T L^{-1}, so each lower power e gives [P_n B]_e - [P_n B]_T L^{-1} [P_n]_e = 0.
/// Powers above T must vanish outright.
inline std::vector<IntRow> eigen_constraints(const MatPoly& p, const OperatorLayout& layout) {
    const std::size_t n = p.size();
    const int top = p.degree();
    if (top < 0) throw Error(ErrorCode::RankDeficient, "zero matrix polynomial");
    const RatMatrix lead = p.coefficient(static_cast<std::size_t>(top));
    if (determinant(lead).is_zero()) {
        throw Error(ErrorCode::SingularLeadingCoefficient, "leading coefficient of P_n is singular");
    }
    const RatMatrix lead_inv = inverse(lead);

    unsigned max_power = static_cast<unsigned>(top);
    for (unsigned k = 0; k <= layout.max_order(); ++k) {
        if (static_cast<int>(k) > top) break;
        max_power = std::max(max_power, static_cast<unsigned>(top) - k + layout.bound(k));
    }

    std::vector<MatPoly> dp;
    for (unsigned k = 0; k <= layout.max_order(); ++k) dp.push_back(derivative(p, k));

    // lin[e][(i, j)] = coordinates of [P B]_e (i, j).
    auto power_rows = [&](unsigned e) {
        std::vector<std::vector<Rational>> rows(n * n, std::vector<Rational>(layout.size()));
        for (unsigned k = 0; k <= layout.max_order(); ++k) {
            if (dp[k].is_zero()) continue;
            for (unsigned d = 0; d <= std::min(e, layout.bound(k)); ++d) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rational c = dp[k](i, l)[e - d];
                        if (c.is_zero()) continue;
                        for (std::size_t j = 0; j < n; ++j) rows[i * n + j][layout.index(k, l, j, d)] += c;
                    }
            }
        }
        return rows;
    };

    std::vector<IntRow> out;
    auto push = [&](const std::vector<Rational>& row) {
        for (const auto& v : row)
            if (!v.is_zero()) {
                out.push_back(integer_row(row));
                return;
            }
    };

    for (unsigned e = static_cast<unsigned>(top) + 1; e <= max_power; ++e)
        for (const auto& row : power_rows(e)) push(row);

    const auto top_rows = power_rows(static_cast<unsigned>(top));
    for (unsigned e = 0; e < static_cast<unsigned>(top); ++e) {
        const RatMatrix w = lead_inv * p.coefficient(e);
        auto rows = power_rows(e);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto& row = rows[i * n + j];
                for (std::size_t s = 0; s < n; ++s) {
                    const Rational f = w(s, j);
                    if (f.is_zero()) continue;
                    const auto& tr = top_rows[i * n + s];
                    for (std::size_t u = 0; u < row.size(); ++u)
                        if (!tr[u].is_zero()) row[u] -= f * tr[u];
                }
                push(row);
            }
    }
    return out;
}

inline std::vector<Rational> to_rational(const IntRow& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

inline bool is_eigen_on(const MatDiffOp& op, const MatPoly& p) {
    try {
        (void)compute_eigenvalue(op, p);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAnEigenfunction) return false;
        throw;
    }
}

/// Identity first, then the reduced row echelon form of the space taken modulo the
/// identity (coordinate A_0(0,0) constant cleared).
inline std::vector<std::vector<Rational>> canonical_basis(const std::vector<IntRow>& null, const OperatorLayout& layout) {
    const auto id = layout.to_vector(MatDiffOp::identity(layout.n()));
    const std::size_t pivot = layout.index(0, 0, 0, 0);
    std::vector<std::vector<Rational>> rest;
    for (const auto& v : null) {
        auto r = to_rational(v);
        if (id) {
            const Rational c = r[pivot];
            if (!c.is_zero())
                for (std::size_t u = 0; u < r.size(); ++u) r[u] -= c * (*id)[u];
        }
        rest.push_back(std::move(r));
    }
    auto reduced = rref(std::move(rest));
    std::vector<std::vector<Rational>> out;
    if (id) out.push_back(*id);
    for (auto& r : reduced) out.push_back(std::move(r));
    return out;
}

}  // namespace detail

/// Linear space of right-acting operators of order <= max_order (deg A_k <= D_k) having
/// every P_n as eigenfunction. Training indices 0..t grow until the dimension repeats,
/// then every basis element is verified on held-out indices t+1..t+verify_count; a
/// failure triggers another round.
inline EigenSolveResult solve_operator_space(const MatFamily& family, std::size_t n, const SolveConfig& cfg) {
    const OperatorLayout layout(n, cfg);
    EigenSolveResult result;
    Echelon ech;
    ech.cols = layout.size();
    unsigned next = 0;
    std::optional<std::size_t> prev_dim;
    unsigned t = cfg.first_train();
    while (true) {
        if (t > cfg.max_train) {
            std::string msg = "dimensions:";
            for (const auto& h : result.history) msg += " " + std::to_string(h.dimension);
            throw Error(ErrorCode::DidNotStabilize, msg);
        }
        std::vector<IntRow> rows = std::move(ech.rows);
        for (; next <= t; ++next) {
            auto add = detail::eigen_constraints(family(next), layout);
            rows.insert(rows.end(), std::make_move_iterator(add.begin()), std::make_move_iterator(add.end()));
        }
        ech = bareiss_echelon(std::move(rows), layout.size());
        const std::size_t dim = layout.size() - ech.rank();
        result.history.push_back({t, dim});
        if (prev_dim && *prev_dim == dim) {
            const auto null = nullspace_from_echelon(ech);
            const auto canon = detail::canonical_basis(null, layout);
            bool ok = true;
            for (unsigned v = t + 1; v <= t + cfg.verify_count && ok; ++v) {
                const MatPoly p = family(v);
                for (const auto& vec : canon)
                    if (!detail::is_eigen_on(layout.to_operator(vec), p)) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                result.dimension = dim;
                result.train_last = t;
                for (unsigned v = t + 1; v <= t + cfg.verify_count; ++v) result.verified.push_back(v);
                for (const auto& vec : canon) {
                    EigenPair pair{layout.to_operator(vec), {}, std::nullopt};
                    pair.eigenvalues = compute_eigenvalues(pair.op, family, 0, t + cfg.verify_count);
                    result.basis.push_back(std::move(pair));
                }
                return result;
            }
        }
        prev_dim = dim;
        t += cfg.growth;
    }
}

/// Same solver for a scalar family (N = 1).
inline EigenSolveResult scalar_space(const std::function<Poly(unsigned)>& family, const SolveConfig& cfg) {
    return solve_operator_space([&](unsigned k) { return MatPoly({{family(k)}}); }, 1, cfg);
}

/// Exact membership of an operator in the span of a solved basis.
inline bool in_span(const MatDiffOp& op, const EigenSolveResult& space, const SolveConfig& cfg) {
    const OperatorLayout layout(op.size(), cfg);
    const auto target = layout.to_vector(op);
    if (!target) return false;
    if (space.basis.empty()) return std::all_of(target->begin(), target->end(), [](const Rational& r) { return r.is_zero(); });
    RatMatrix m(layout.size(), space.basis.size());
    for (std::size_t c = 0; c < space.basis.size(); ++c) {
        const auto v = layout.to_vector(space.basis[c].op);
        for (std::size_t r = 0; r < layout.size(); ++r) m(r, c) = (*v)[r];
    }
    return solve_exact(m, *target).has_value();
}

/// Canonical representative of an operator modulo the identity: subtract the A_0(0,0)
/// constant times I, then scale the first nonzero coordinate (layout order) to 1.
inline MatDiffOp normalize_modulo_identity(const MatDiffOp& op) {
    SolveConfig cfg;
    cfg.max_order = static_cast<unsigned>(std::max(op.order(), 0));
    std::vector<unsigned> bounds;
    for (const auto& c : op.coeffs()) bounds.push_back(static_cast<unsigned>(std::max(c.degree(), 0)));
    for (unsigned k = 0; k <= cfg.max_order; ++k) bounds[k] = std::max(bounds[k], k);
    cfg.degree_bounds = bounds;
    const OperatorLayout layout(op.size(), cfg);
    auto v = *layout.to_vector(op);
    const auto id = *layout.to_vector(MatDiffOp::identity(op.size()));
    const Rational c = v[layout.index(0, 0, 0, 0)];
    for (std::size_t u = 0; u < v.size(); ++u) v[u] -= c * id[u];
    for (const auto& x : v)
        if (!x.is_zero()) {
            const Rational s = x;
            for (auto& y : v) y /= s;
            break;
        }
    return layout.to_operator(v);
}

}  // namespace mvop

#endif  // MVOP_EIGENALGEBRA_HPP
