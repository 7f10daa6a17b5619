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

#ifndef MVOP_RECURRENCE_HPP
#define MVOP_RECURRENCE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eigenalgebra.hpp"
#include "families.hpp"
#include "residue.hpp"

namespace mvop {

/// (x - a)^N p_n = sum_{|k| <= N} c_{n,k} p_{n+k}, with p_j = 0 for j < 0.
struct BandedRec {
    unsigned n = 1;
    Rational a{0};
    std::function<Rational(unsigned, int)> band;

    Rational operator()(unsigned row, int k) const {
        if (k < -static_cast<int>(n) || k > static_cast<int>(n)) return Rational(0);
        if (static_cast<long>(row) + k < 0) return Rational(0);
        return band(row, k);
    }
    Poly pivot() const {
        Poly f(1);
        for (unsigned i = 0; i < n; ++i) f = f * Poly{-a, Rational(1)};
        return f;
    }
};

/// Tridiagonal band data: entries (n, n-1), (n, n), (n, n+1).
struct TriBand {
    std::function<Rational(unsigned)> lower;
    std::function<Rational(unsigned)> diag;
    std::function<Rational(unsigned)> upper;

    Rational at(unsigned row, long col) const {
        if (col < 0) return Rational(0);
        if (col + 1 == static_cast<long>(row)) return row ? lower(row) : Rational(0);
        if (col == static_cast<long>(row)) return diag(row);
        if (col == static_cast<long>(row) + 1) return upper(row);
        return Rational(0);
    }
};

/// Bands of the product T1 T2 as a recurrence with pivot (x - a)^2.
inline BandedRec five_term_from_bidiagonal(TriBand t1, TriBand t2, Rational a) {
    BandedRec rec;
    rec.n = 2;
    rec.a = a;
    rec.band = [t1 = std::move(t1), t2 = std::move(t2)](unsigned row, int k) {
        Rational s(0);
        const long target = static_cast<long>(row) + k;
        for (long j = static_cast<long>(row) - 1; j <= static_cast<long>(row) + 1; ++j) {
            if (j < 0) continue;
            s += t1.at(row, j) * t2.at(static_cast<unsigned>(j), target);
        }
        return s;
    };
    return rec;
}

/// Row n of T1 is (y_n, x_{n+1}, 1) and of T2 is (ybar_n, xbar_{n+1}, 1); the product
/// gives x^2 (Krall-Laguerre) or (x + 1)^2 (Krall-Jacobi) times the family.
inline BandedRec krall_bands(const FamilySpec& spec) {
    const FamilyCoeffs c(spec);
    TriBand t1{[c](unsigned n) { return c.y(n); }, [c](unsigned n) { return c.x(n + 1); },
               [](unsigned) { return Rational(1); }};
    TriBand t2{[c](unsigned n) { return c.y_bar(n); }, [c](unsigned n) { return c.x_bar(n + 1); },
               [](unsigned) { return Rational(1); }};
    switch (spec.kind) {
        case FamilyKind::KrallLaguerre:
            return five_term_from_bidiagonal(std::move(t1), std::move(t2), Rational(0));
        case FamilyKind::KrallJacobi:
            return five_term_from_bidiagonal(std::move(t1), std::move(t2), Rational(-1));
        default:
            throw Error(ErrorCode::DegenerateParameters, "five-term bands need a Krall family");
    }
}

/// x L_n = L_{n+1} + (2n + 1 + alpha) L_n + n (n + alpha) L_{n-1}.
inline BandedRec laguerre_bands(const Rational& alpha) {
    BandedRec rec;
    rec.n = 1;
    rec.band = [alpha](unsigned n, int k) {
        const Rational r(n);
        if (k == 1) return Rational(1);
        if (k == 0) return 2 * r + 1 + alpha;
        return r * (r + alpha);
    };
    return rec;
}

struct BandReport {
    unsigned checked = 0;
    std::vector<unsigned> failing;
    bool pass() const { return failing.empty(); }
};

/// Exact polynomial identity check for n = 0..n_max.
template <PolySequence F>
BandReport verify_banded(F&& family, const BandedRec& rec, unsigned n_max) {
    BandReport rep;
    const Poly piv = rec.pivot();
    const int width = static_cast<int>(rec.n);
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly rhs;
        for (int k = -width; k <= width; ++k) {
            if (static_cast<int>(n) + k < 0) continue;
            const Rational c = rec(n, k);
            if (!c.is_zero()) rhs += family(static_cast<unsigned>(static_cast<int>(n) + k)) * c;
        }
        ++rep.checked;
        if (piv * family(n) != rhs) rep.failing.push_back(n);
    }
    return rep;
}

/// Bands of the same recurrence read in the fold variable of `cfg`: with x = s u + c the
/// pivot (x - a0)^N becomes s^N (u - (a0 - c)/s)^N, so the fold point must be (a0 - c)/s
/// and the bands are divided by s^N.
inline BandedRec bands_for_fold(const BandedRec& rec, const FoldConfig& cfg) {
    cfg.validate();
    if (cfg.n != rec.n) throw Error(ErrorCode::SizeMismatch, "fold size differs from recurrence pivot");
    const Rational a = (rec.a - cfg.pre_c) / cfg.pre_s;
    if (a != cfg.a) {
        throw Error(ErrorCode::DegenerateParameters,
                    "fold point " + cfg.a.to_string() + " does not match the pivot (expected " + a.to_string() + ")");
    }
    const Rational scale = pow(cfg.pre_s, cfg.n);
    BandedRec out;
    out.n = rec.n;
    out.a = a;
    out.band = [rec, scale](unsigned row, int k) { return rec(row, k) / scale; };
    return out;
}

/// t P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1}; C_0 is zero.
struct BlockTTRR {
    std::vector<RatMatrix> a, b, c;
    std::size_t count() const { return b.size(); }
};

/// N x N blocks of the banded matrix, n = 0..count-1.
inline BlockTTRR blocks_from_banded(const BandedRec& rec, unsigned count) {
    const unsigned nn = rec.n;
    if (nn < 1) throw Error(ErrorCode::SizeMismatch, "pivot exponent must be >= 1");
    auto block = [&](unsigned row_block, long col_block) {
        RatMatrix m(nn, nn);
        if (col_block < 0) return m;
        for (unsigned i = 0; i < nn; ++i)
            for (unsigned j = 0; j < nn; ++j) {
                const long row = static_cast<long>(row_block) * nn + i;
                const long col = col_block * nn + j;
                m(i, j) = rec(static_cast<unsigned>(row), static_cast<int>(col - row));
            }
        return m;
    };
    BlockTTRR out;
    for (unsigned n = 0; n < count; ++n) {
        out.a.push_back(block(n, static_cast<long>(n) + 1));
        out.b.push_back(block(n, n));
        out.c.push_back(block(n, static_cast<long>(n) - 1));
    }
    return out;
}

inline MatPoly left_mul(const RatMatrix& m, const MatPoly& p) {
    const std::size_t n = p.size();
    MatPoly out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly s;
            for (std::size_t k = 0; k < n; ++k)
                if (!m(i, k).is_zero()) s += p(k, j) * m(i, k);
            out(i, j) = std::move(s);
        }
    return out;
}

/// Indices n (0..count-2) where the block recurrence fails against the family.
inline std::vector<unsigned> verify_block_ttrr(const MatFamily& family, const BlockTTRR& rec) {
    std::vector<unsigned> bad;
    if (rec.count() < 2) return bad;
    std::optional<MatPoly> prev;
    MatPoly cur = family(0);
    for (unsigned n = 0; n + 1 < rec.count(); ++n) {
        MatPoly next = family(n + 1);
        MatPoly rhs = left_mul(rec.a[n], next) + left_mul(rec.b[n], cur);
        if (prev) rhs = rhs + left_mul(rec.c[n], *prev);
        if (cur * Poly::x() != rhs) bad.push_back(n);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return bad;
}

/// Monic normalization: Phat_n = L_n^{-1} P_n with L_n the leading coefficient.
struct MonicFamily {
    std::vector<RatMatrix> multipliers;  // L_n^{-1}
    std::vector<MatPoly> polys;
};

inline MonicFamily make_monic(const std::vector<MatPoly>& family) {
    MonicFamily out;
    for (std::size_t n = 0; n < family.size(); ++n) {
        const MatPoly& p = family[n];
        if (p.degree() < 0) throw Error(ErrorCode::SingularLeadingCoefficient, "zero polynomial at n = " + std::to_string(n));
        const RatMatrix lead = p.coefficient(static_cast<std::size_t>(p.degree()));
        if (determinant(lead).is_zero()) {
            throw Error(ErrorCode::SingularLeadingCoefficient, "singular leading coefficient at n = " + std::to_string(n));
        }
        RatMatrix inv = inverse(lead);
        out.polys.push_back(left_mul(inv, p));
        out.multipliers.push_back(std::move(inv));
    }
    return out;
}

/// Monic recurrence t Phat_n = Phat_{n+1} + B_n Phat_n + A_n Phat_{n-1} from the blocks
/// and multipliers M_n = L_n^{-1}: B_n -> M_n B_n M_n^{-1}, A_n -> M_n C_n M_{n-1}^{-1}.
/// Returned with a = identity, b = B_n and c = A_n.
inline BlockTTRR monic_blocks(const BlockTTRR& rec, const std::vector<RatMatrix>& mult) {
    if (mult.size() < rec.count()) throw Error(ErrorCode::SizeMismatch, "not enough multipliers");
    BlockTTRR out;
    for (std::size_t n = 0; n < rec.count(); ++n) {
        const RatMatrix minv = inverse(mult[n]);
        out.b.push_back(mult[n] * rec.b[n] * minv);
        out.c.push_back(n ? mult[n] * rec.c[n] * inverse(mult[n - 1]) : RatMatrix(rec.b[n].rows(), rec.b[n].cols()));
        if (n + 1 < mult.size()) out.a.push_back(mult[n] * rec.a[n] * inverse(mult[n + 1]));
        else out.a.push_back(RatMatrix::identity(rec.b[n].rows()));
    }
    return out;
}

struct ScalarSymmetrizeResult {
    bool success = false;
    std::optional<unsigned> first_failure;
    std::string reason;
    std::vector<Rational> rho;  // rho[n] = (tau_n / tau_{n-1})^2, rho[0] unused (= 1)
};

/// Positive scale factors tau_n making a three- or five-band recurrence symmetric, tested
/// up to row n_max. Requires (tau_n / tau_{n-k})^2 = c_{n-k,k} / c_{n,-k} for every k.
inline ScalarSymmetrizeResult scalar_symmetrize(const BandedRec& rec, unsigned n_max) {
    if (rec.n < 1 || rec.n > 2) throw Error(ErrorCode::SizeMismatch, "scalar symmetrization needs 3 or 5 bands");
    ScalarSymmetrizeResult out;
    out.rho.push_back(Rational(1));
    auto fail = [&](unsigned n, std::string why) {
        out.first_failure = n;
        out.reason = std::move(why);
        return out;
    };
    for (unsigned n = 1; n <= n_max; ++n) {
        const Rational lower = rec(n, -1);
        if (lower.is_zero()) return fail(n, std::string(error_name(ErrorCode::ZeroBand)) + ": c_{n,-1} = 0");
        const Rational r = rec(n - 1, 1) / lower;
        if (r.sign() <= 0) return fail(n, "nonpositive squared ratio " + r.to_string());
        if (rec.n == 2 && n >= 2) {
            const Rational outer = rec(n, -2);
            if (outer.is_zero()) return fail(n, std::string(error_name(ErrorCode::ZeroBand)) + ": c_{n,-2} = 0");
            if (rec(n - 2, 2) / outer != r * out.rho[n - 1]) return fail(n, "outer band inconsistent with inner band");
        }
        out.rho.push_back(r);
    }
    out.success = true;
    return out;
}

/// The necessary condition
///   y_{n+1} ybar_n = (y_n xbar_n + x_{n+1} ybar_n)(y_{n+1} xbar_{n+1} + x_{n+2} ybar_{n+1})
///                    / ((x_n + xbar_{n+1})(x_{n+1} + xbar_{n+2}))
/// evaluated directly from the Darboux coefficients.
inline bool darboux_symmetry_condition(const FamilyCoeffs& c, unsigned n) {
    const Rational lhs = c.y(n + 1) * c.y_bar(n);
    const Rational num = (c.y(n) * c.x_bar(n) + c.x(n + 1) * c.y_bar(n)) *
                         (c.y(n + 1) * c.x_bar(n + 1) + c.x(n + 2) * c.y_bar(n + 1));
    const Rational den = (c.x(n) + c.x_bar(n + 1)) * (c.x(n + 1) + c.x_bar(n + 2));
    if (den.is_zero()) throw Error(ErrorCode::ZeroBand, "vanishing denominator at n = " + std::to_string(n));
    return lhs == num / den;
}

struct MatrixSymmetrizeResult {
    bool success = false;
    std::optional<unsigned> first_failure;
    std::string reason;
    std::size_t solution_dimension = 0;
    std::vector<RatMatrix> s;
};

/// Monic recurrence t P_n = P_{n+1} + B_n P_n + A_n P_{n-1}. Looks for positive definite
/// S_n with S_n = A_n S_{n-1} and B_n S_n symmetric, n = 0..count-1. S_0 ranges over the
/// symmetric matrices; every condition is linear in S_0.
inline MatrixSymmetrizeResult matrix_symmetrize(const BlockTTRR& monic) {
    MatrixSymmetrizeResult out;
    if (monic.count() == 0) throw Error(ErrorCode::SizeMismatch, "empty recurrence");
    const std::size_t n = monic.b[0].rows();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    const std::size_t unknowns = slots.size();

    // s_basis[u][n] = S_n when S_0 is the u-th symmetric unit.
    std::vector<std::vector<RatMatrix>> s_basis(unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) {
        RatMatrix s0(n, n);
        s0(slots[u].first, slots[u].second) = 1;
        s0(slots[u].second, slots[u].first) = 1;
        s_basis[u].push_back(s0);
    }
    for (std::size_t k = 1; k < monic.count(); ++k) {
        if (determinant(monic.c[k]).is_zero()) {
            throw Error(ErrorCode::SingularBlock, "A_n singular at n = " + std::to_string(k));
        }
        for (auto& seq : s_basis) seq.push_back(monic.c[k] * seq.back());
    }

    std::vector<std::vector<Rational>> rows;
    auto add_antisym = [&](const std::function<RatMatrix(std::size_t)>& mat_of) {
        std::vector<RatMatrix> m;
        for (std::size_t u = 0; u < unknowns; ++u) m.push_back(mat_of(u));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<Rational> row(unknowns);
                for (std::size_t u = 0; u < unknowns; ++u) row[u] = m[u](i, j) - m[u](j, i);
                rows.push_back(std::move(row));
            }
    };
    for (std::size_t k = 0; k < monic.count(); ++k) {
        add_antisym([&](std::size_t u) { return s_basis[u][k]; });
        add_antisym([&](std::size_t u) { return monic.b[k] * s_basis[u][k]; });
    }
    RatMatrix sys(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t u = 0; u < unknowns; ++u) sys(r, u) = rows[r][u];
    const auto null = nullspace_exact(sys);
    out.solution_dimension = null.size();
    if (null.empty()) {
        out.reason = "no symmetric S_0 satisfies the linear conditions";
        return out;
    }

    auto sequence_for = [&](const std::vector<Rational>& coef) {
        std::vector<RatMatrix> seq;
        for (std::size_t k = 0; k < monic.count(); ++k) {
            RatMatrix s(n, n);
            for (std::size_t u = 0; u < unknowns; ++u)
                if (!coef[u].is_zero()) s += s_basis[u][k] * coef[u];
            seq.push_back(std::move(s));
        }
        return seq;
    };
    auto first_not_pd = [&](const std::vector<RatMatrix>& seq) -> std::optional<unsigned> {
        for (std::size_t k = 0; k < seq.size(); ++k)
            if (!is_positive_definite(seq[k])) return static_cast<unsigned>(k);
        return std::nullopt;
    };

    // Small search over the solution space: +-v for one generator, else small integer
    // combinations of up to three generators.
    std::vector<std::vector<Rational>> candidates;
    auto coef_of = [&](const std::vector<int>& w) {
        std::vector<Rational> c(unknowns);
        for (std::size_t g = 0; g < w.size(); ++g)
            for (std::size_t u = 0; u < unknowns; ++u) c[u] += null[g](u, 0) * w[g];
        return c;
    };
    const std::size_t gens = std::min<std::size_t>(null.size(), 3);
    std::vector<int> w(gens, -2);
    while (true) {
        bool nonzero = false;
        for (int v : w) nonzero = nonzero || v != 0;
        if (nonzero) candidates.push_back(coef_of(w));
        std::size_t p = 0;
        while (p < gens && w[p] == 2) w[p++] = -2;
        if (p == gens) break;
        ++w[p];
    }
    unsigned best = 0;
    for (const auto& c : candidates) {
        auto seq = sequence_for(c);
        const auto bad = first_not_pd(seq);
        if (!bad) {
            out.success = true;
            out.s = std::move(seq);
            return out;
        }
        best = std::max(best, *bad);
    }
    out.first_failure = best;
    out.reason = "no positive definite witness found";
    return out;
}

/// Entry moments of a weight matrix plus optional point masses.
struct MomentFunctional {
    std::size_t n = 2;
    std::function<Rational(std::size_t, std::size_t, unsigned)> moment;  // mu^{(ab)}_j
    struct PointMass {
        Rational location;
        RatMatrix mass;
    };
    std::vector<PointMass> masses;
};

/// Weight obtained by folding x^alpha e^{-x} (plus mass/R at 0 when r is given) with
/// (x)^N -> t, scaled by N: mu^{(ab)}_j = N (N j + a + b + alpha)!. For N = 2, alpha = 0 this is
/// e^{-sqrt t} [[t^{-1/2} + (2/R) delta_0, 1], [1, t^{1/2}]].
inline MomentFunctional folded_laguerre_weight(unsigned n, const Rational& alpha, std::optional<Rational> r = std::nullopt) {
    if (!alpha.is_integer() || alpha.sign() < 0) {
        throw Error(ErrorCode::IrrationalMoments, "alpha = " + alpha.to_string() + " is not a nonnegative integer");
    }
    if (r && r->is_zero()) throw Error(ErrorCode::DegenerateParameters, "point mass 1/R needs R != 0");
    const unsigned al = static_cast<unsigned>(alpha.num().get_ui());
    MomentFunctional w;
    w.n = n;
    w.moment = [n, al](std::size_t a, std::size_t b, unsigned j) {
        return Rational(n) * factorial(static_cast<unsigned>(n * j + a + b + al));
    };
    if (r) {
        RatMatrix m(n, n);
        m(0, 0) = Rational(n) / *r;
        w.masses.push_back({Rational(0), m});
    }
    return w;
}

/// Gram block sum_{a,b} int P_m(i,a) W_ab P_n(j,b), from moments only.
inline RatMatrix moment_gram(const MatPoly& pm, const MatPoly& pn, const MomentFunctional& w) {
    const std::size_t n = w.n;
    if (pm.size() != n || pn.size() != n) throw Error(ErrorCode::SizeMismatch, "weight and polynomial sizes differ");
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Poly& f = pm(i, a);
                    const Poly& h = pn(j, b);
                    for (int p = 0; p <= f.degree(); ++p) {
                        if (f[static_cast<std::size_t>(p)].is_zero()) continue;
                        for (int q = 0; q <= h.degree(); ++q) {
                            if (h[static_cast<std::size_t>(q)].is_zero()) continue;
                            s += f[static_cast<std::size_t>(p)] * h[static_cast<std::size_t>(q)] *
                                 w.moment(a, b, static_cast<unsigned>(p + q));
                        }
                    }
                }
            for (const auto& pmass : w.masses)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        if (!pmass.mass(a, b).is_zero())
                            s += pm(i, a)(pmass.location) * pmass.mass(a, b) * pn(j, b)(pmass.location);
            g(i, j) = s;
        }
    return g;
}

}  // namespace mvop

#endif  // MVOP_RECURRENCE_HPP
