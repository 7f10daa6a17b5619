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

#ifndef MVOP_CLOSED_FORMS_HPP
#define MVOP_CLOSED_FORMS_HPP

// Closed-form operators, eigenvalues and coefficients that the scenarios compare against.
// Everything here is written out by hand from the known formulas; nothing is computed by
// the library routines under test.

#include <vector>

#include "diffop.hpp"

namespace mvop::forms {

inline Poly px(std::initializer_list<Rational> c) { return Poly(c); }

/// 2x2 fold of the Laguerre operator.
inline MatDiffOp laguerre_2x2(const Rational& alpha) {
    MatPoly a2{{Poly(), px({0, 4})}, {px({0, 0, 4}), Poly()}};
    MatPoly a1{{px({0, -2}), Poly(2 * alpha + 4)}, {px({0, 8 + 2 * alpha}), px({0, -2})}};
    MatPoly a0{{Poly(), Poly()}, {Poly(alpha + 1), Poly(-1)}};
    return MatDiffOp(2, {a0, a1, a2});
}

inline RatMatrix laguerre_2x2_gamma(unsigned n) {
    return RatMatrix{{Rational(-2 * static_cast<long>(n)), 0}, {0, Rational(-2 * static_cast<long>(n) - 1)}};
}

/// Exact coefficients of the N x N Laguerre fold (rows j = 0..N-1).
struct LaguerreFoldForms {
    MatPoly a2, a1, a0;
};

inline LaguerreFoldForms laguerre_nxn(unsigned n, const Rational& alpha) {
    LaguerreFoldForms f{MatPoly(n), MatPoly(n), MatPoly(n)};
    const Rational nn(n);
    f.a2(0, n - 1) = px({0, nn * nn});
    f.a1(0, n - 1) = Poly(nn * (nn + alpha));
    for (unsigned j = 0; j < n; ++j) {
        const Rational jj(j);
        f.a1(j, j) = px({0, -nn});
        f.a0(j, j) = Poly(-jj);
        if (j > 0) {
            f.a2(j, j - 1) = px({0, 0, nn * nn});
            f.a1(j, j - 1) = px({0, nn * (nn + 2 * jj + alpha)});
            f.a0(j, j - 1) = Poly(jj * (jj + alpha));
        }
    }
    return f;
}

/// First two folded Krall-Laguerre polynomials.
inline MatPoly kl_p0(const Rational& a, const Rational& r) {
    return MatPoly{{Poly(1), Poly()}, {Poly(-(a + (a + 1) * r) / (r + 1)), Poly(1)}};
}

inline MatPoly kl_p1(const Rational& a, const Rational& r) {
    return MatPoly{
        {px({(a + 2) * ((a + 1) * r + 2 * a) / (r + 2), 1}), Poly(-2 * ((a + 2) * r + 2 * a + 3) / (r + 2))},
        {px({-(a + 2) * (a + 3) * ((a + 1) * r + 3 * a) / (r + 3), -3 * ((a + 3) * r + 3 * a + 8) / (r + 3)}),
         px({3 * (a + 3) * ((a + 2) * r + 3 * a + 4) / (r + 3), 1})}};
}

/// Fourth-order matrix operator B of the folded Krall-Laguerre family.
inline MatDiffOp kl_b(const Rational& a, const Rational& r) {
    const Poly x3 = Poly::monomial(1, 3);
    MatPoly d4{{x3, Poly()}, {Poly(), x3}};
    MatPoly d3{{px({0, 0, a + 5}), px({0, 0, -1})}, {px({0, 0, 0, -1}), px({0, 0, a + 7})}};
    MatPoly d2{{px({0, (a * a + 9 * a + 15) / 4, Rational(1, 4)}), px({0, -(r + a + 6) / 2})},
               {px({0, 0, -(r + a + 9) / 2}), px({0, (a * a + 15 * a + 39) / 4, Rational(1, 4)})}};
    MatPoly d1{{px({a * (a + 3) / 8, (2 * r + 3) / 8}), Poly(-((a + 2) * r + 2 * a + 3) / 4)},
               {px({0, -((a + 4) * r + 4 * (a + 3)) / 4}), px({3 * (a + 1) * (a + 4) / 8, (2 * r + 5) / 8})}};
    MatPoly d0{{Poly(-(r + 1) / 8), Poly()}, {Poly(-((a + 1) * r + a) / 8), Poly()}};
    return MatDiffOp(2, {d0, d1, d2, d3, d4});
}

/// Gamma_n = G0 + n G1 + n^2 G2 for kl_b.
inline std::vector<RatMatrix> kl_b_gamma(const Rational& r) {
    return {RatMatrix{{-(r + 1) / 8, 0}, {0, 0}}, RatMatrix{{(2 * r + 1) / 8, 0}, {0, (2 * r + 3) / 8}},
            RatMatrix{{Rational(1, 4), 0}, {0, Rational(1, 4)}}};
}

/// Squared coefficients of the symmetric five-term recurrence at alpha = 0:
/// a_{n+2}^2, b_{n+1}^2 and c_n.
inline Rational kl0_a_sq(unsigned n, const Rational& r) {
    const Rational k(n);
    return (k + 1) * (k + 1) * (k + 2) * (k + 2) * (k + r) * (k + r + 3) / ((k + r + 1) * (k + r + 2));
}
inline Rational kl0_b_sq(unsigned n, const Rational& r) {
    const Rational k(n);
    const Rational num = 2 * (k + 1) * r * r + (2 * k + 1) * (2 * k + 3) * r + 2 * k * (k + 1) * (k + 2);
    return 4 * (k + 1) * (k + 1) * num * num / ((k + r + 1) * (k + r + 1) * (k + r) * (k + r + 2));
}
inline Rational kl0_c(unsigned n, const Rational& r) {
    const Rational k(n);
    const Rational t = 2 * k * (k + 1) + (2 * k + 1) * r;
    return (k * k * (k + r + 1) * (k + r + 1) + (k + 1) * (k + 1) * (k + r) * (k + r) + t * t) / ((k + r) * (k + r + 1));
}

/// lambda_n = (R + n(alpha + beta + n))(R + (n + 1)(alpha + beta + n + 1)).
inline Rational kj_lambda(unsigned n, const Rational& a, const Rational& b, const Rational& r) {
    const Rational k(n);
    return (r + k * (a + b + k)) * (r + (k + 1) * (a + b + k + 1));
}

/// Fourth-order scalar operator at alpha = 3/2, beta = 7/8, R = 7.
inline ScalarDiffOp kj_generic_scalar() {
    const Poly x2m1 = px({-1, 0, 1});
    return ScalarDiffOp({Poly(), Rational(35, 32) * px({21, 83}), Rational(7, 64) * px({-281, 98, 503}),
                         x2m1 * px({Rational(5, 4), Rational(51, 4)}), x2m1 * x2m1});
}

/// Leading terms (orders 6 and 5) of the order-six matrix operator at (3/2, 7/8, 7).
inline MatPoly kj_order6_d6() {
    const Poly xm1 = px({-1, 1});
    const Poly p = xm1 * xm1 * xm1 * Poly::monomial(1, 3);
    return MatPoly{{p, Poly()}, {Poly(), p}};
}
inline MatPoly kj_order6_d5() {
    const Poly xm1 = px({-1, 1});
    const Poly base = xm1 * xm1 * Poly::monomial(1, 2);
    const Rational s(3, 16);
    return MatPoly{{s * (base * px({-40, 107})), s * (Rational(5) * base)},
                   {s * (Rational(5) * base * Poly::x()), s * (base * px({-56, 123}))}};
}

/// beta = alpha + 1: first-order operator and its eigenvalue.
inline MatDiffOp kj_shift_order1(const Rational& a, const Rational& r) {
    const Rational b = a + 1;
    MatPoly d1{{Poly(), px({-1, 1})}, {Poly(), Poly()}};
    MatPoly d0{{Poly(1 + r / (2 * b)), Poly(b - r / (2 * b))}, {Poly(), Poly()}};
    return MatDiffOp(2, {d0, d1});
}
inline RatMatrix kj_shift_order1_gamma(unsigned n, const Rational& a, const Rational& r) {
    const Rational b = a + 1;
    return RatMatrix{{1 + r / (2 * b), b - r / (2 * b) + Rational(n)}, {0, 0}};
}

/// beta = alpha + 1: second-order operator and its eigenvalue.
inline RatMatrix kj_shift_order2_a0(const Rational& a, const Rational& r) {
    const Rational k = r * (3 * a + 4) / (4 * (a + 1));
    return RatMatrix{{-(4 * a + 5) / 2 - k, -(a + 1) * (a + 1) + k}, {0, 0}};
}
inline MatDiffOp kj_shift_order2(const Rational& a, const Rational& r) {
    const Poly xx = px({0, -1, 1});
    MatPoly d2{{Poly(), xx}, {Poly(), xx}};
    MatPoly d1{{Poly(), px({a, 1})}, {Poly(), px({Rational(-3, 2), (2 * a + 5) / 2})}};
    return MatDiffOp(2, {MatPoly(kj_shift_order2_a0(a, r)), d1, d2});
}
inline RatMatrix kj_shift_order2_gamma(unsigned n, const Rational& a, const Rational& r) {
    const Rational k(n);
    return kj_shift_order2_a0(a, r) + RatMatrix{{0, 0}, {0, (2 * a + 3) / 2}} * k +
           RatMatrix{{0, 1}, {0, 1}} * (k * k);
}

}  // namespace mvop::forms

#endif  // MVOP_CLOSED_FORMS_HPP
