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

#include <mvop/eigenalgebra.hpp>
#include <mvop/families.hpp>

using namespace mvop;

namespace {

MatFamily folded(const FamilySpec& spec, FoldConfig cfg = {}) {
    Family fam(spec);
    return [fam, cfg](unsigned n) { return fold_family(fam, cfg, n); };
}

SolveConfig order(unsigned m) {
    SolveConfig c;
    c.max_order = m;
    return c;
}

}  // namespace

TEST(Eigenvalue, LaguerreFoldByHand) {
    const auto f = folded(FamilySpec::laguerre(Rational(1, 2)));
    const MatDiffOp b = fold_operator_2x2(laguerre_op(Rational(1, 2)));
    EXPECT_EQ(compute_eigenvalue(b, f(3)), (RatMatrix{{-6, 0}, {0, -7}}));
    EXPECT_EQ(compute_eigenvalue(MatDiffOp::identity(2), f(4)), RatMatrix::identity(2));
}

TEST(Eigenvalue, NonEigenOperatorRejected) {
    const auto f = folded(FamilySpec::laguerre(0));
    MatPoly d1(2);
    d1(0, 1) = Poly(1);
    try {
        (void)compute_eigenvalues(MatDiffOp(2, {MatPoly(2), d1}), f, 0, 5);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnEigenfunction);
    }
}

TEST(Eigenvalue, PolynomialFit) {
    std::map<unsigned, RatMatrix> table;
    for (unsigned n = 0; n < 8; ++n) {
        const Rational k(n);
        table.emplace(n, RatMatrix{{k * k + 1, k}, {Rational(0), Rational(3)}});
    }
    const auto g = fit_eigenvalue_poly(table, 2);
    EXPECT_EQ(g[0], (RatMatrix{{1, 0}, {0, 3}}));
    EXPECT_EQ(g[1], (RatMatrix{{0, 1}, {0, 0}}));
    EXPECT_EQ(g[2], (RatMatrix{{1, 0}, {0, 0}}));
    EXPECT_THROW((void)fit_eigenvalue_poly(table, 1), Error);
    table.erase(table.begin(), std::next(table.begin(), 5));
    EXPECT_THROW((void)fit_eigenvalue_poly(table, 2), Error);
}

TEST(Layout, RoundTripAndOrdering) {
    SolveConfig cfg = order(2);
    const OperatorLayout layout(2, cfg);
    // orders 2, 1, 0 with degree bounds 2, 1, 0 and four entries each
    EXPECT_EQ(layout.size(), 4u * (3 + 2 + 1));
    EXPECT_EQ(layout.index(2, 0, 0, 2), 0u);
    EXPECT_EQ(layout.index(2, 0, 0, 0), 2u);
    EXPECT_EQ(layout.index(1, 0, 0, 1), 12u);
    const MatDiffOp op = fold_operator_2x2(laguerre_op(1));
    const auto v = layout.to_vector(op);
    ASSERT_TRUE(v);
    EXPECT_EQ(layout.to_operator(*v), op);
    EXPECT_FALSE(OperatorLayout(2, order(1)).to_vector(op));
}

TEST(Solver, ScalarLaguerreAlgebraIsTwoDimensional) {
    Family lag(FamilySpec::laguerre(Rational(1, 2)));
    const auto cfg = order(2);
    const auto s = scalar_space([&](unsigned n) { return lag(n); }, cfg);
    EXPECT_EQ(s.dimension, 2u);
    EXPECT_EQ(s.basis.front().op, MatDiffOp::identity(1));
    EXPECT_TRUE(in_span(as_matrix_op(laguerre_op(Rational(1, 2))), s, cfg));
    EXPECT_FALSE(in_span(as_matrix_op(ScalarDiffOp::derivative(1)), s, cfg));
    EXPECT_FALSE(s.verified.empty());
}

TEST(Solver, KrallLaguerreDimensions) {
    const auto f = folded(FamilySpec::krall_laguerre(1, 2));
    const auto s4 = solve_operator_space(f, 2, order(4));
    EXPECT_EQ(s4.dimension, 2u);
    const auto s3 = solve_operator_space(f, 2, order(3));
    EXPECT_EQ(s3.dimension, 1u);
    // every basis element really has the family as eigenfunctions beyond the training range
    for (const auto& e : s4.basis)
        for (unsigned n = s4.train_last + 1; n <= s4.train_last + 6; ++n) EXPECT_NO_THROW((void)compute_eigenvalue(e.op, f(n)));
    // the fold of the scalar operator lies in the space
    EXPECT_TRUE(in_span(fold_operator_2x2(krall_laguerre_op(1, 2)), s4, order(4)));
}

TEST(Solver, StopsWhenTrainingIsCapped) {
    auto cfg = order(4);
    cfg.max_train = 4;
    try {
        (void)solve_operator_space(folded(FamilySpec::krall_laguerre(1, 2)), 2, cfg);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DidNotStabilize);
    }
}

TEST(Normalize, IgnoresScaleAndIdentityShift) {
    const MatDiffOp b = fold_operator_2x2(laguerre_op(1));
    const MatDiffOp shifted = Rational(-3, 2) * b + Rational(5) * MatDiffOp::identity(2);
    EXPECT_EQ(normalize_modulo_identity(shifted), normalize_modulo_identity(b));
    EXPECT_EQ(normalize_modulo_identity(b).coeff(2)(0, 1), Poly::x());
}
