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

#ifndef MVOP_RESIDUE_HPP
#define MVOP_RESIDUE_HPP

#include <concepts>
#include <vector>

#include "matpoly.hpp"

namespace mvop {

/// How a scalar polynomial is folded into N residue parts. The scalar polynomial is
/// first replaced by p(pre_s x + pre_c), then expanded around `a`, and the powers of
/// (x - a) are grouped by their residue mod N with (x - a)^N becoming the new variable.
struct FoldConfig {
    unsigned n = 2;
    Rational a{0};
    Rational pre_s{1};
    Rational pre_c{0};

    void validate() const {
        if (n < 1) throw Error(ErrorCode::DegenerateParameters, "fold size must be >= 1");
        if (pre_s.is_zero()) throw Error(ErrorCode::DegenerateParameters, "pre-substitution scale must be nonzero");
    }
    bool has_pre_substitution() const { return pre_s != Rational(1) || !pre_c.is_zero(); }
};

/// The N residue parts of one scalar polynomial, index m = 0..N-1.
using ResidueVector = std::vector<Poly>;

namespace detail {
inline Poly residue_from_taylor(const std::vector<Rational>& t, unsigned n, unsigned m) {
    std::vector<Rational> out;
    for (std::size_t i = m; i < t.size(); i += n) out.push_back(t[i]);
    return Poly(std::move(out));
}
}  // namespace detail

/// R_{N,m,a}: sum over k of p^{(kN+m)}(a)/(kN+m)! x^k. The pre-substitution in `cfg`
/// is not applied here; see `fold_row`.
inline Poly split_residue(const Poly& p, const FoldConfig& cfg, unsigned m) {
    if (m >= cfg.n) throw Error(ErrorCode::SizeMismatch, "residue index out of range");
    return detail::residue_from_taylor(taylor_coefficients(p, cfg.a), cfg.n, m);
}

inline ResidueVector split_all(const Poly& p, const FoldConfig& cfg) {
    cfg.validate();
    const auto t = taylor_coefficients(p, cfg.a);
    ResidueVector out;
    for (unsigned m = 0; m < cfg.n; ++m) out.push_back(detail::residue_from_taylor(t, cfg.n, m));
    return out;
}

/// Inverse of split_all: sum over m of (x - a)^m R_m((x - a)^N).
inline Poly unfold(const ResidueVector& rv, const FoldConfig& cfg) {
    if (rv.size() != cfg.n) throw Error(ErrorCode::SizeMismatch, "residue vector must have N components");
    std::vector<Rational> t;
    for (unsigned m = 0; m < cfg.n; ++m) {
        const Poly& part = rv[m];
        for (int k = 0; k <= part.degree(); ++k) {
            const std::size_t idx = static_cast<std::size_t>(k) * cfg.n + m;
            if (t.size() <= idx) t.resize(idx + 1);
            t[idx] = part[static_cast<std::size_t>(k)];
        }
    }
    // t holds coefficients in powers of (x - a); shift back.
    return affine_subst(Poly(std::move(t)), Rational(1), -cfg.a);
}

/// Row of residue parts of p after the pre-substitution.
inline ResidueVector fold_row(const Poly& p, const FoldConfig& cfg) {
    cfg.validate();
    return split_all(cfg.has_pre_substitution() ? affine_subst(p, cfg.pre_s, cfg.pre_c) : p, cfg);
}

template <class F>
concept PolySequence = requires(F f, unsigned k) {
    { f(k) } -> std::convertible_to<Poly>;
};

/// P_n: row j holds the residue parts of the (pre-substituted) p_{nN+j}.
template <PolySequence F>
MatPoly fold_family(F&& family, const FoldConfig& cfg, unsigned n) {
    cfg.validate();
    MatPoly out(cfg.n);
    for (unsigned j = 0; j < cfg.n; ++j) {
        const auto row = fold_row(family(n * cfg.n + j), cfg);
        for (unsigned m = 0; m < cfg.n; ++m) out(j, m) = row[m];
    }
    return out;
}

}  // namespace mvop

#endif  // MVOP_RESIDUE_HPP
