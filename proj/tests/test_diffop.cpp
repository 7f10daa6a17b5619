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

#include <gtest/gtest.h>

#include <random>

#include <mvop/diffop.hpp>
#include <mvop/families.hpp>

using namespace mvop;

namespace {

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

std::vector<Poly> random_polys(unsigned count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 12), num(-9, 9), den(1, 4);
    std::vector<Poly> out;
    for (unsigned i = 0; i < count; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Rational(num(rng), den(rng));
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST(ScalarDiffOp, ApplyByHand) {
    // (x D^2 + D + 3) x^3 = 6x^2 + 3x^2 + 3x^3
    const ScalarDiffOp op({Poly(3), Poly(1), Poly::x()});
    EXPECT_EQ(apply_scalar(op, Poly::monomial(1, 3)), P({0, 0, 9, 3}));
    EXPECT_EQ(op.order(), 2);
    EXPECT_TRUE(ScalarDiffOp({Poly(), Poly()}).is_zero());
}

TEST(ScalarDiffOp, CompositionMatchesRepeatedApplication) {
    const ScalarDiffOp p = kj_p_op(Rational(3, 2), Rational(7, 8), 7);
    const ScalarDiffOp q = kj_q_op(Rational(3, 2), Rational(7, 8), 7);
    const ScalarDiffOp pq = compose_scalar(p, q);
    EXPECT_EQ(pq.order(), 4);
    for (const auto& f : random_polys(20, 3)) EXPECT_EQ(apply_scalar(pq, f), apply_scalar(p, apply_scalar(q, f)));
    // D o (x D) = D + x D^2
    EXPECT_EQ(compose_scalar(ScalarDiffOp::derivative(1), ScalarDiffOp({Poly(), Poly::x()})),
              ScalarDiffOp({Poly(), Poly(1), Poly::x()}));
}

TEST(ScalarDiffOp, KrallLaguerreEigenvalues) {
    const Rational a(1, 2), r(5);
    const auto p = family_sequence(FamilySpec::krall_laguerre(a, r), 10);
    const ScalarDiffOp op = krall_laguerre_op(a, r);
    for (unsigned n = 0; n < 10; ++n) EXPECT_EQ(apply_scalar(op, p[n]), p[n] * ((r + n) * (r + n + 1))) << n;
}

TEST(ScalarDiffOp, CompositionOrderMatters) {
    // Only P applied after Q has the Krall-Jacobi polynomials as eigenfunctions.
    const Rational a(3, 2), b(7, 8), r(7);
    const auto q = family_sequence(FamilySpec::krall_jacobi(a, b, r), 6);
    const ScalarDiffOp qp = compose_scalar(kj_q_op(a, b, r), kj_p_op(a, b, r));
    bool all_eigen = true;
    for (unsigned n = 1; n < 6; ++n) {
        const Poly img = apply_scalar(qp, q[n]);
        const Rational lam = img.leading() / q[n].leading();
        all_eigen = all_eigen && img == q[n] * lam;
    }
    EXPECT_FALSE(all_eigen);
}

TEST(ScalarDiffOp, BuiltinLookup) {
    EXPECT_EQ(builtin("laguerre", 2), laguerre_op(2));
    EXPECT_EQ(builtin("kj-PQ", 1, 2, 3), kj_pq_op(1, 2, 3));
    try {
        (void)builtin("hermite", 0);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
    }
}

TEST(Fold, TwoByTwoFoldIntertwinesWithSplitting) {
    // fold(L p) = fold(p) B for every polynomial p, checked on random inputs.
    for (const ScalarDiffOp& op : {laguerre_op(Rational(1, 2)), krall_laguerre_op(1, 2), kj_pq_op(Rational(3, 2), Rational(7, 8), 7)}) {
        const MatDiffOp b = fold_operator_2x2(op);
        for (const auto& p : random_polys(15, 11))
            EXPECT_EQ(apply_row(split_all(p, FoldConfig{}), b), split_all(apply_scalar(op, p), FoldConfig{}));
    }
}

TEST(Fold, GeneralFoldAgreesWithTwoByTwo) {
    for (const ScalarDiffOp& op : {laguerre_op(0), krall_laguerre_op(Rational(1, 2), 5), kj_p_op(1, 2, 3)})
        EXPECT_EQ(fold_operator_general(op, FoldConfig{}), fold_operator_2x2(op));
}

TEST(Fold, GeneralFoldAtShiftedPointIntertwines) {
    FoldConfig cfg;
    cfg.n = 3;
    cfg.a = -1;
    const ScalarDiffOp op = laguerre_op(Rational(1, 2));
    const MatDiffOp b = fold_operator_general(op, cfg);
    for (const auto& p : random_polys(15, 5)) EXPECT_EQ(apply_row(split_all(p, cfg), b), split_all(apply_scalar(op, p), cfg));
}

TEST(Fold, LaguerreTwoByTwoByHand) {
    // x D^2 + (1 - x) D folded: A_2 = [[0, 4x], [4x^2, 0]], A_1 = [[-2x, 4], [8x, -2x]], A_0 = [[0, 0], [1, -1]].
    const MatDiffOp b = fold_operator_2x2(laguerre_op(0));
    EXPECT_EQ(b.coeff(2), (MatPoly{{Poly(), P({0, 4})}, {P({0, 0, 4}), Poly()}}));
    EXPECT_EQ(b.coeff(1), (MatPoly{{P({0, -2}), Poly(4)}, {P({0, 8}), P({0, -2})}}));
    EXPECT_EQ(b.coeff(0), (MatPoly{{Poly(), Poly()}, {Poly(1), Poly(-1)}}));
}

TEST(MatDiffOp, IdentityAndScalarEmbedding) {
    const MatPoly p{{P({1, 2}), Poly(3)}, {Poly(), P({0, 1})}};
    EXPECT_EQ(apply_matrix(p, MatDiffOp::identity(2)), p);
    const MatDiffOp d = as_matrix_op(ScalarDiffOp::derivative(1));
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(apply_matrix(MatPoly{{P({0, 0, 1})}}, d), (MatPoly{{P({0, 2})}}));
    EXPECT_EQ(Rational(2) * MatDiffOp::identity(2) - MatDiffOp::identity(2), MatDiffOp::identity(2));
}
