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

#ifndef MVOP_DIFFOP_HPP
#define MVOP_DIFFOP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"
#include "residue.hpp"

namespace mvop {

/// Left-acting scalar operator p -> sum_l a_l(x) p^{(l)}(x). Trailing zero
/// coefficients are stripped, so the zero operator has no coefficients.
class ScalarDiffOp {
   public:
    ScalarDiffOp() = default;
    explicit ScalarDiffOp(std::vector<Poly> coeffs) : a_(std::move(coeffs)) { strip(); }

    static ScalarDiffOp identity() { return ScalarDiffOp({Poly(1)}); }
    /// D^k.
    static ScalarDiffOp derivative(unsigned k) {
        std::vector<Poly> c(k + 1);
        c[k] = Poly(1);
        return ScalarDiffOp(std::move(c));
    }

    int order() const { return static_cast<int>(a_.size()) - 1; }
    bool is_zero() const { return a_.empty(); }
    const std::vector<Poly>& coeffs() const { return a_; }
    Poly coeff(std::size_t l) const { return l < a_.size() ? a_[l] : Poly(); }

    ScalarDiffOp& operator+=(const ScalarDiffOp& o) {
        if (o.a_.size() > a_.size()) a_.resize(o.a_.size());
        for (std::size_t l = 0; l < o.a_.size(); ++l) a_[l] += o.a_[l];
        strip();
        return *this;
    }
    ScalarDiffOp& operator-=(const ScalarDiffOp& o) {
        if (o.a_.size() > a_.size()) a_.resize(o.a_.size());
        for (std::size_t l = 0; l < o.a_.size(); ++l) a_[l] -= o.a_[l];
        strip();
        return *this;
    }
    friend ScalarDiffOp operator+(ScalarDiffOp a, const ScalarDiffOp& b) { return a += b; }
    friend ScalarDiffOp operator-(ScalarDiffOp a, const ScalarDiffOp& b) { return a -= b; }
    friend ScalarDiffOp operator*(const Rational& s, ScalarDiffOp a) {
        for (auto& p : a.a_) p *= s;
        a.strip();
        return a;
    }
    friend bool operator==(const ScalarDiffOp&, const ScalarDiffOp&) = default;

    std::string to_string() const {
        if (a_.empty()) return "0";
        std::string out;
        for (int l = order(); l >= 0; --l) {
            const Poly& p = a_[static_cast<std::size_t>(l)];
            if (p.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + p.to_string() + ")";
            if (l > 0) out += l == 1 ? "D" : "D^" + std::to_string(l);
        }
        return out;
    }

   private:
    void strip() {
        while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    }
    std::vector<Poly> a_;
};

inline Poly apply_scalar(const ScalarDiffOp& op, const Poly& p) {
    Poly out;
    for (std::size_t l = 0; l < op.coeffs().size(); ++l) {
        if (op.coeffs()[l].is_zero()) continue;
        out += op.coeffs()[l] * derivative(p, static_cast<unsigned>(l));
    }
    return out;
}

/// The operator p -> outer(inner(p)), expanded with the Leibniz rule:
/// a D^i (b D^j) = sum_t C(i,t) a b^{(i-t)} D^{j+t}.
inline ScalarDiffOp compose_scalar(const ScalarDiffOp& outer, const ScalarDiffOp& inner) {
    if (outer.is_zero() || inner.is_zero()) return {};
    std::vector<Poly> c(static_cast<std::size_t>(outer.order() + inner.order() + 1));
    for (std::size_t i = 0; i < outer.coeffs().size(); ++i) {
        const Poly& a = outer.coeffs()[i];
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < inner.coeffs().size(); ++j) {
            const Poly& b = inner.coeffs()[j];
            if (b.is_zero()) continue;
            for (std::size_t t = 0; t <= i; ++t) {
                const Poly db = mvop::derivative(b, static_cast<unsigned>(i - t));
                if (db.is_zero()) continue;
                c[j + t] += a * db * Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(t)));
            }
        }
    }
    return ScalarDiffOp(std::move(c));
}

/// Operator in y where x = s y + c: sum_l a_l(s y + c) s^{-l} D_y^l. If L p = g then
/// translated(L) applied to p(s y + c) equals g(s y + c).
inline ScalarDiffOp translate_scalar(const ScalarDiffOp& op, const Rational& s, const Rational& c) {
    if (s.is_zero()) throw Error(ErrorCode::DegenerateParameters, "translation scale must be nonzero");
    std::vector<Poly> out;
    Rational inv_pow(1);
    for (const auto& a : op.coeffs()) {
        out.push_back(affine_subst(a, s, c) * inv_pow);
        inv_pow /= s;
    }
    return ScalarDiffOp(std::move(out));
}

/// Right-acting N x N operator P -> sum_k P^{(k)}(x) A_k(x).
class MatDiffOp {
   public:
    MatDiffOp() = default;
    explicit MatDiffOp(std::size_t n) : n_(n) {}
    MatDiffOp(std::size_t n, std::vector<MatPoly> coeffs) : n_(n), a_(std::move(coeffs)) {
        for (const auto& c : a_)
            if (c.size() != n_) throw Error(ErrorCode::SizeMismatch, "operator coefficient size mismatch");
        strip();
    }

    static MatDiffOp identity(std::size_t n) { return MatDiffOp(n, {MatPoly::identity(n)}); }

    std::size_t size() const { return n_; }
    int order() const { return static_cast<int>(a_.size()) - 1; }
    bool is_zero() const { return a_.empty(); }
    const std::vector<MatPoly>& coeffs() const { return a_; }
    MatPoly coeff(std::size_t k) const { return k < a_.size() ? a_[k] : MatPoly(n_); }

    MatDiffOp& operator+=(const MatDiffOp& o) {
        if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "operator size mismatch");
        while (a_.size() < o.a_.size()) a_.emplace_back(n_);
        for (std::size_t k = 0; k < o.a_.size(); ++k) a_[k] += o.a_[k];
        strip();
        return *this;
    }
    MatDiffOp& operator-=(const MatDiffOp& o) {
        if (o.n_ != n_) throw Error(ErrorCode::SizeMismatch, "operator size mismatch");
        while (a_.size() < o.a_.size()) a_.emplace_back(n_);
        for (std::size_t k = 0; k < o.a_.size(); ++k) a_[k] -= o.a_[k];
        strip();
        return *this;
    }
    friend MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b) { return a += b; }
    friend MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b) { return a -= b; }
    friend MatDiffOp operator*(const Rational& s, MatDiffOp a) {
        for (auto& c : a.a_) c *= Poly(s);
        a.strip();
        return a;
    }
    friend bool operator==(const MatDiffOp&, const MatDiffOp&) = default;

    std::string to_string() const {
        if (a_.empty()) return "0";
        std::string out;
        for (int k = order(); k >= 0; --k) {
            const MatPoly& c = a_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += k == 0 ? std::string() : (k == 1 ? "D " : "D^" + std::to_string(k) + " ");
            out += c.to_string();
        }
        return out;
    }

   private:
    void strip() {
        while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    }
    std::size_t n_ = 0;
    std::vector<MatPoly> a_;
};

inline MatPoly apply_matrix(const MatPoly& p, const MatDiffOp& op) {
    if (p.size() != op.size()) throw Error(ErrorCode::SizeMismatch, "operator and polynomial sizes differ");
    MatPoly out(p.size());
    for (std::size_t k = 0; k < op.coeffs().size(); ++k) {
        if (op.coeffs()[k].is_zero()) continue;
        const MatPoly dp = mvop::derivative(p, static_cast<unsigned>(k));
        if (dp.is_zero()) break;
        out += dp * op.coeffs()[k];
    }
    return out;
}

/// Right action on a row vector of polynomials (one row of a MatPoly).
inline std::vector<Poly> apply_row(const std::vector<Poly>& row, const MatDiffOp& op) {
    const std::size_t n = op.size();
    if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "row length differs from operator size");
    std::vector<Poly> out(n);
    for (std::size_t k = 0; k < op.coeffs().size(); ++k) {
        const MatPoly& a = op.coeffs()[k];
        for (std::size_t i = 0; i < n; ++i) {
            const Poly d = mvop::derivative(row[i], static_cast<unsigned>(k));
            if (d.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[j] += d * a(i, j);
        }
    }
    return out;
}

/// A 1 x 1 matrix operator is a scalar operator written in right-action form.
inline MatDiffOp as_matrix_op(const ScalarDiffOp& op) {
    std::vector<MatPoly> c;
    for (const auto& a : op.coeffs()) c.push_back(MatPoly({{a}}));
    return MatDiffOp(1, std::move(c));
}

// ---------------------------------------------------------------------------
// Fold of a scalar operator, N = 2, a = 0, from the closed-form tables.

/// Constant c with b_{k,l}(x) = c x^{2k-l}, where (f(x^2))^{(l)} = sum_k b_{k,l}(x) f^{(k)}(x^2).
/// Zero outside (l+1)/2 <= k <= l.
inline Rational fold_b_constant(unsigned k, unsigned l) {
    if (k > l || 2 * k < l) return 0;
    Rational sum;
    for (unsigned j = (l + 1) / 2; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * falling(Rational(2 * j), l);
        sum += (j % 2 ? -term : term);
    }
    const Rational scale = Rational(Integer(k % 2 ? -1 : 1), factorial(k));
    return scale * sum;
}

/// b_{k,l} as a polynomial; zero when l < 0 is requested through `l_minus_one`.
inline Poly fold_b(unsigned k, unsigned l) {
    const Rational c = fold_b_constant(k, l);
    if (c.is_zero()) return {};
    return Poly::monomial(c, 2 * k - l);
}

/// C_{k,l}(x) for a scalar coefficient a_l.
inline MatPoly fold_c_block(unsigned k, unsigned l, const Poly& a_l) {
    const FoldConfig two{2};
    const Poly x = Poly::x();
    const auto b = split_all(fold_b(k, l), two);
    const auto bm = l == 0 ? ResidueVector{Poly(), Poly()} : split_all(fold_b(k, l - 1), two);
    const Rational lr(l);
    const MatPoly left{{b[0], b[1]}, {x * b[1] + bm[0] * lr, b[0] + bm[1] * lr}};
    const auto a = split_all(a_l, two);
    const MatPoly mult{{a[0], a[1]}, {x * a[1], a[0]}};
    return left * mult;
}

/// Right-acting 2 x 2 operator B with fold(L p) = fold(p) B for every p, where fold is
/// the (N = 2, a = 0) residue split: A_k = sum_{l >= k} C_{k,l}.
inline MatDiffOp fold_operator_2x2(const ScalarDiffOp& op) {
    if (op.is_zero()) return MatDiffOp(2);
    const unsigned m = static_cast<unsigned>(op.order());
    std::vector<MatPoly> a(m + 1, MatPoly(2));
    for (unsigned l = 0; l <= m; ++l) {
        const Poly& al = op.coeffs()[l];
        if (al.is_zero()) continue;
        for (unsigned k = 0; k <= l; ++k) a[k] += fold_c_block(k, l, al);
    }
    return MatDiffOp(2, std::move(a));
}

// ---------------------------------------------------------------------------
// Fold of a scalar operator for any N by solving for the coefficients.

/// Degree caps for the unknown coefficients; `bound(k)` defaults to 2k.
struct DegreeBounds {
    std::vector<unsigned> per_order;

    unsigned bound(std::size_t k) const {
        return k < per_order.size() ? per_order[k] : static_cast<unsigned>(2 * k);
    }
};

namespace detail {
/// Row of residue parts of p folded at 0 with block size n.
inline ResidueVector fold_at_zero(const Poly& p, unsigned n) { return split_all(p, FoldConfig{n}); }
}  // namespace detail

/// Constructive fold for any N: the coefficients A_k (deg A_k <= bounds.bound(k)) are the
/// unique solution of fold(L x^j) = fold(x^j) B for j = 0..J, then checked on ten
/// further monomials. Shifts and the pre-substitution in `cfg` are handled by
/// translating L first and folding at 0.
inline MatDiffOp fold_operator_general(const ScalarDiffOp& op, const FoldConfig& cfg,
                                       const DegreeBounds& bounds = {}) {
    cfg.validate();
    const unsigned n = cfg.n;
    if (op.is_zero()) return MatDiffOp(n);
    const ScalarDiffOp lt = translate_scalar(op, cfg.pre_s, cfg.pre_s * cfg.a + cfg.pre_c);
    const unsigned m = static_cast<unsigned>(lt.order());

    // Unknown layout: order k, entry (r, c) row-major, power d.
    std::vector<std::size_t> offset(m + 2, 0);
    for (unsigned k = 0; k <= m; ++k) offset[k + 1] = offset[k] + n * n * (bounds.bound(k) + 1);
    const std::size_t unknowns = offset[m + 1];
    auto index = [&](unsigned k, unsigned r, unsigned c, unsigned d) {
        return offset[k] + (r * n + c) * (bounds.bound(k) + 1) + d;
    };

    const unsigned fit_count = n * (m + 2);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (unsigned j = 0; j < fit_count; ++j) {
        const unsigned r = j % n, q = j / n;
        const auto target = detail::fold_at_zero(apply_scalar(lt, Poly::monomial(1, j)), n);
        // Highest power reached on either side.
        unsigned top = q;
        for (const auto& t : target) top = std::max(top, static_cast<unsigned>(std::max(t.degree(), 0)));
        for (unsigned k = 0; k <= m; ++k) top = std::max(top, q + bounds.bound(k));
        for (unsigned c = 0; c < n; ++c) {
            for (unsigned e = 0; e <= top; ++e) {
                std::vector<Rational> row(unknowns);
                bool any = false;
                for (unsigned k = 0; k <= std::min(m, q); ++k) {
                    // (x^q)^{(k)} = q!/(q-k)! x^{q-k}; contributes x^{q-k+d} A_k[r][c]_d.
                    if (e + k < q) continue;
                    const unsigned d = e + k - q;
                    if (d > bounds.bound(k)) continue;
                    row[index(k, r, c, d)] = falling(Rational(q), k);
                    any = true;
                }
                const Rational t = target[c][e];
                if (!any && t.is_zero()) continue;
                rows.push_back(std::move(row));
                rhs.push_back(t);
            }
        }
    }

    RatMatrix sys(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
    const auto sol = solve_exact(sys, rhs);
    if (!sol) throw Error(ErrorCode::NoSolution, "no operator within the degree bounds");
    if (sol->free_dimension > 0) {
        throw Error(ErrorCode::NonUnique,
                    "operator not determined, nullspace dimension " + std::to_string(sol->free_dimension));
    }

    std::vector<MatPoly> coeffs(m + 1, MatPoly(n));
    for (unsigned k = 0; k <= m; ++k)
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                std::vector<Rational> pc(bounds.bound(k) + 1);
                for (unsigned d = 0; d <= bounds.bound(k); ++d) pc[d] = sol->x[index(k, r, c, d)];
                coeffs[k](r, c) = Poly(std::move(pc));
            }
    MatDiffOp out(n, std::move(coeffs));

    for (unsigned j = fit_count; j < fit_count + 10; ++j) {
        const auto lhs = detail::fold_at_zero(apply_scalar(lt, Poly::monomial(1, j)), n);
        const auto rhs_row = apply_row(detail::fold_at_zero(Poly::monomial(1, j), n), out);
        if (lhs != rhs_row) throw Error(ErrorCode::NoSolution, "fold check failed on x^" + std::to_string(j));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Built-in scalar operators.

/// x D^2 + (alpha + 1 - x) D; eigenvalue -n on the monic Laguerre polynomials.
inline ScalarDiffOp laguerre_op(const Rational& alpha) {
    return ScalarDiffOp({Poly(), Poly({alpha + 1, Rational(-1)}), Poly::x()});
}

/// Fourth-order operator of the extended Krall-Laguerre family; eigenvalue (R+n)(R+n+1).
inline ScalarDiffOp krall_laguerre_op(const Rational& alpha, const Rational& r) {
    const Poly x = Poly::x();
    return ScalarDiffOp({
        Poly(r * (r + 1)),
        Poly({-2 * ((alpha + 1) * r + alpha), 2 * (r + 1)}),
        x * Poly({-2 * (r + alpha) - 6, Rational(1)}) + Poly(alpha * (alpha + 3)),
        Poly({Rational(0), 2 * (alpha + 2), Rational(-2)}),
        Poly::monomial(1, 2),
    });
}

/// (x^2 - 1) D^2 + ((alpha + beta + 1) x - beta + alpha + 1) D + R.
inline ScalarDiffOp kj_p_op(const Rational& alpha, const Rational& beta, const Rational& r) {
    return ScalarDiffOp({Poly(r), Poly({alpha - beta + 1, alpha + beta + 1}), Poly({Rational(-1), Rational(0), Rational(1)})});
}

/// (x^2 - 1) D^2 + ((alpha + beta + 3) x - beta + alpha - 1) D + (R + alpha + beta + 1).
inline ScalarDiffOp kj_q_op(const Rational& alpha, const Rational& beta, const Rational& r) {
    return ScalarDiffOp({Poly(r + alpha + beta + 1), Poly({alpha - beta - 1, alpha + beta + 3}),
                         Poly({Rational(-1), Rational(0), Rational(1)})});
}

/// The R-free fourth-order operator for the beta = alpha + 1 Krall-Jacobi family.
inline ScalarDiffOp kj_shift_op(const Rational& alpha) {
    const Poly x = Poly::x();
    const Poly x2m1({Rational(-1), Rational(0), Rational(1)});
    const Poly d3 = Poly({Rational(2), Rational(0), Rational(-2)}) * Poly({Rational(-1), 2 * alpha + 5});
    const Poly d2 = Rational(-2) * (x * Poly({-2 * alpha - 2, 2 * alpha * alpha + 11 * alpha + 19}) +
                                    Poly(-3 * alpha - 13));
    const Poly d1 = Rational(-2) * Poly({Rational(-7), (2 * alpha + 3) * (2 * alpha + 9)});
    return ScalarDiffOp({Poly(), d1, d2, d3, x2m1 * x2m1});
}

/// Operator of the Krall-Jacobi family: P applied after Q. The opposite order does not
/// have the family as eigenfunctions; see tests.
inline ScalarDiffOp kj_pq_op(const Rational& alpha, const Rational& beta, const Rational& r) {
    return compose_scalar(kj_p_op(alpha, beta, r), kj_q_op(alpha, beta, r));
}

/// Built-in lookup by name: laguerre, krall-laguerre, kj-P, kj-Q, kj-PQ, kj-shift.
inline ScalarDiffOp builtin(std::string_view name, const Rational& alpha, const Rational& beta = 0,
                            const Rational& r = 0) {
    if (name == "laguerre") return laguerre_op(alpha);
    if (name == "krall-laguerre") return krall_laguerre_op(alpha, r);
    if (name == "kj-P") return kj_p_op(alpha, beta, r);
    if (name == "kj-Q") return kj_q_op(alpha, beta, r);
    if (name == "kj-PQ") return kj_pq_op(alpha, beta, r);
    if (name == "kj-shift") return kj_shift_op(alpha);
    throw Error(ErrorCode::ParseError, "unknown built-in operator '" + std::string(name) + "'");
}

}  // namespace mvop

#endif  // MVOP_DIFFOP_HPP
