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

#include <mvop/linalg.hpp>
#include <mvop/matpoly.hpp>

using namespace mvop;

namespace {
Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }
}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::parse(" -10/5 ").to_string(), "-2");
    EXPECT_EQ(Rational::parse("0/7").to_string(), "0");
    EXPECT_EQ(Rational::parse("+3").to_string(), "3");
}

TEST(Rational, RejectsBadLiterals) {
    for (const char* bad : {"", "1/0", "x", "1.5", "2/"}) {
        try {
            (void)Rational::parse(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError);
        }
    }
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1) / Rational(-3), Rational(-1, 3));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(Rational(factorial(6)), Rational(720));
}

TEST(Poly, MultiplicationAndDivision) {
    const Poly xp1({1, 1}), xm1({-1, 1});
    EXPECT_EQ(xp1 * xm1, P({-1, 0, 1}));
    const auto [q, r] = divmod(P({1, 0, 0, 1}), xp1);
    EXPECT_EQ(q, P({1, -1, 1}));
    EXPECT_TRUE(r.is_zero());
    const auto [q2, r2] = divmod(P({1, 0, 1}), Poly::x());
    EXPECT_EQ(q2, Poly::x());
    EXPECT_EQ(r2, Poly(1));
}

TEST(Poly, ExactDivisionRejectsRemainder) {
    try {
        (void)exact_div(P({1, 0, 1}), Poly::x());
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
    }
}

TEST(Poly, DerivativeSubstitutionTaylor) {
    const Poly p({1, 2, 3});  // 1 + 2x + 3x^2
    EXPECT_EQ(derivative(p), P({2, 6}));
    EXPECT_EQ(derivative(p, 2), Poly(6));
    EXPECT_TRUE(derivative(p, 3).is_zero());
    // p(2x + 1) = 6 + 16x + 12x^2
    EXPECT_EQ(affine_subst(p, 2, 1), P({6, 16, 12}));
    // around x = 1: 6 + 8 (x-1) + 3 (x-1)^2
    EXPECT_EQ(taylor_coefficients(p, 1), (std::vector<Rational>{6, 8, 3}));
    EXPECT_EQ(p(Rational(1, 2)), Rational(11, 4));
}

TEST(Poly, ZeroIsNormalized) {
    Poly p({1, 2});
    p -= P({1, 2});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), -1);
    EXPECT_EQ(P({0, 0}), Poly());
}

TEST(Matrix, DeterminantInverse) {
    const RatMatrix m{{2, 1}, {1, 3}};
    EXPECT_EQ(determinant(m), Rational(5));
    EXPECT_EQ(inverse(m), (RatMatrix{{Rational(3, 5), Rational(-1, 5)}, {Rational(-1, 5), Rational(2, 5)}}));
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(2));
    const RatMatrix h{{1, Rational(1, 2), Rational(1, 3)},
                      {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
                      {Rational(1, 3), Rational(1, 4), Rational(1, 5)}};
    EXPECT_EQ(determinant(h), Rational(1, 2160));
}

TEST(Matrix, SingularInverseThrows) {
    EXPECT_THROW((void)inverse(RatMatrix{{1, 2}, {2, 4}}), Error);
}

TEST(Matrix, PositiveDefinite) {
    EXPECT_TRUE(is_positive_definite(RatMatrix{{2, 1}, {1, 2}}));
    EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
    EXPECT_FALSE(is_positive_definite(RatMatrix{{0, 0}, {0, 1}}));
}

TEST(Linalg, NullspaceAndRank) {
    const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(m), 2u);
    const auto ns = nullspace_exact(m);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_TRUE((m * ns[0]).is_zero());
    // (1, 1, -1) spans the kernel
    EXPECT_EQ(ns[0](0, 0) * Rational(-1), ns[0](2, 0));
    EXPECT_EQ(ns[0](0, 0), ns[0](1, 0));
    EXPECT_TRUE(nullspace_exact(RatMatrix::identity(3)).empty());
}

TEST(Linalg, SolveExact) {
    const RatMatrix m{{1, 1}, {1, -1}};
    const auto sol = solve_exact(m, {3, 1});
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->x, (std::vector<Rational>{2, 1}));
    EXPECT_EQ(sol->free_dimension, 0u);
    EXPECT_FALSE(solve_exact(RatMatrix{{1, 1}, {2, 2}}, {1, 3}));
    const auto under = solve_exact(RatMatrix{{1, 1}}, {Rational(1, 2)});
    ASSERT_TRUE(under);
    EXPECT_EQ(under->free_dimension, 1u);
    EXPECT_EQ(under->x[0] + under->x[1], Rational(1, 2));
}

TEST(Linalg, Rref) {
    const auto r = rref({{2, 4, 2}, {1, 2, 3}, {3, 6, 5}});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0], (std::vector<Rational>{1, 2, 0}));
    EXPECT_EQ(r[1], (std::vector<Rational>{0, 0, 1}));
}

TEST(MatPoly, ProductEvaluationDerivative) {
    const MatPoly a{{Poly::x(), Poly(1)}, {Poly(), Poly::x()}};
    const MatPoly sq = a * a;
    EXPECT_EQ(sq, (MatPoly{{P({0, 0, 1}), P({0, 2})}, {Poly(), P({0, 0, 1})}}));
    EXPECT_EQ(sq(Rational(3)), (RatMatrix{{9, 6}, {0, 9}}));
    EXPECT_EQ(derivative(sq), (MatPoly{{P({0, 2}), Poly(2)}, {Poly(), P({0, 2})}}));
    EXPECT_EQ(sq.degree(), 2);
    EXPECT_EQ(sq.leading_coefficient(), RatMatrix::identity(2));
}
