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

#include <mvop/diffop.hpp>
#include <mvop/families.hpp>

using namespace mvop;

namespace {
Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }
}  // namespace

TEST(FamilySpec, ParseAndPrintRoundTrip) {
    const auto s = FamilySpec::parse("krall-laguerre:alpha=1/3,R=5");
    EXPECT_EQ(s.kind, FamilyKind::KrallLaguerre);
    EXPECT_EQ(s.alpha, Rational(1, 3));
    EXPECT_EQ(s.r, Rational(5));
    EXPECT_EQ(s.to_string(), "krall-laguerre:alpha=1/3,R=5");
    EXPECT_EQ(FamilySpec::parse(s.to_string()), s);
    const auto j = FamilySpec::parse("krall-jacobi:alpha=3/2,beta=7/8,r=7");
    EXPECT_EQ(j, FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7));
}

TEST(FamilySpec, ParseErrors) {
    for (const char* bad : {"hermite:alpha=1", "laguerre:alpha", "laguerre:gamma=2", "laguerre:alpha=1/0"}) {
        try {
            (void)FamilySpec::parse(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(Families, MonicLaguerreLowDegrees) {
    const auto l = laguerre_sequence(1, 3);
    EXPECT_EQ(l[0], Poly(1));
    EXPECT_EQ(l[1], P({-2, 1}));
    EXPECT_EQ(l[2], P({6, -6, 1}));
}

TEST(Families, LaguerreSatisfiesItsEquation) {
    // x y'' + (alpha + 1 - x) y' = -n y, written out without the operator type.
    const Rational a(3, 2);
    const auto l = laguerre_sequence(a, 12);
    for (unsigned n = 0; n < 12; ++n) {
        const Poly lhs = Poly::x() * derivative(l[n], 2) + Poly({a + 1, Rational(-1)}) * derivative(l[n]);
        EXPECT_EQ(lhs, l[n] * Rational(-static_cast<long>(n))) << n;
    }
}

TEST(Families, MonicJacobiSatisfiesItsEquation) {
    // (1 - x^2) y'' + (beta - alpha - (alpha + beta + 2) x) y' = -n (n + alpha + beta + 1) y.
    const Rational a(3, 2), b(7, 8);
    const auto p = jacobi_monic_sequence(a, b, 10);
    for (unsigned n = 0; n < 10; ++n) {
        EXPECT_EQ(p[n].leading(), Rational(1));
        EXPECT_EQ(p[n].degree(), static_cast<int>(n));
        const Poly lhs = P({1, 0, -1}) * derivative(p[n], 2) + Poly({b - a, -(a + b + 2)}) * derivative(p[n]);
        EXPECT_EQ(lhs, p[n] * (-Rational(n) * (Rational(n) + a + b + 1))) << n;
    }
}

TEST(Families, KrallLaguerreHandValues) {
    // alpha = 1, R = 2: x_1 = 2, x_2 = 13/3, y_1 = 8/3 give p_0 = 1 and p_1 = x - 5/3.
    const auto spec = FamilySpec::krall_laguerre(1, 2);
    const FamilyCoeffs c(spec);
    EXPECT_EQ(c.x(1), Rational(2));
    EXPECT_EQ(c.x(2), Rational(13, 3));
    EXPECT_EQ(c.y(1), Rational(8, 3));
    const auto p = family_sequence(spec, 2);
    EXPECT_EQ(p[0], Poly(1));
    EXPECT_EQ(p[1], P({Rational(-5, 3), 1}));
}

TEST(Families, KrallFamiliesAreMonicOfExactDegree) {
    for (const auto& spec : {FamilySpec::krall_laguerre(Rational(1, 2), 5),
                             FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7),
                             FamilySpec::krall_jacobi(Rational(1, 2), Rational(3, 2), 2)}) {
        const auto p = family_sequence(spec, 15);
        for (unsigned n = 0; n < 15; ++n) {
            EXPECT_EQ(p[n].degree(), static_cast<int>(n));
            EXPECT_EQ(p[n].leading(), Rational(1));
        }
    }
}

TEST(Families, CachedFamilyAgreesWithSequence) {
    const auto spec = FamilySpec::krall_jacobi(1, 0, 5);
    Family fam(spec);
    const auto seq = family_sequence(spec, 9);
    EXPECT_EQ(fam(8), seq[8]);
    EXPECT_EQ(fam(3), seq[3]);
    const Family copy(fam);
    EXPECT_EQ(copy(8), seq[8]);
}

TEST(Families, PerturbedCoefficientIsNotDivisible) {
    for (auto spec : {FamilySpec::krall_laguerre(1, 2), FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7)}) {
        spec.x_perturbation = Rational(1, 1000);
        try {
            (void)family_sequence(spec, 4);
            ADD_FAILURE() << spec.to_string();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
        }
    }
}

TEST(Families, DegenerateParameters) {
    EXPECT_THROW(Family(FamilySpec::laguerre(-1)), Error);
    try {
        (void)family_sequence(FamilySpec::krall_jacobi(0, 0, 2), 4);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateParameters);
    }
}
