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

#include <mvop/families.hpp>
#include <mvop/residue.hpp>

using namespace mvop;

namespace {

Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

// r(q(x)) by Horner.
Poly compose(const Poly& r, const Poly& q) {
    Poly out;
    for (int d = r.degree(); d >= 0; --d) out = out * q + Poly(r[static_cast<std::size_t>(d)]);
    return out;
}

// sum_m (x - a)^m R_m((x - a)^N), written without the library's unfold.
Poly rebuild(const ResidueVector& parts, const FoldConfig& cfg) {
    const Poly u({-cfg.a, Rational(1)});
    Poly un(1);
    for (unsigned i = 0; i < cfg.n; ++i) un = un * u;
    Poly out, um(1);
    for (unsigned m = 0; m < cfg.n; ++m) {
        out += um * compose(parts[m], un);
        um = um * u;
    }
    return out;
}

}  // namespace

TEST(Residue, SplitsEvenAndOddParts) {
    const Poly p = P({1, 2, 3, 4});
    FoldConfig cfg;
    EXPECT_EQ(split_residue(p, cfg, 0), P({1, 3}));
    EXPECT_EQ(split_residue(p, cfg, 1), P({2, 4}));
    cfg.n = 3;
    EXPECT_EQ(split_residue(p, cfg, 0), P({1, 4}));
    EXPECT_EQ(split_residue(p, cfg, 1), Poly(2));
    EXPECT_EQ(split_residue(p, cfg, 2), Poly(3));
}

TEST(Residue, SplitAroundShiftedPoint) {
    // x^2 = (x + 1)^2 - 2 (x + 1) + 1 around a = -1.
    FoldConfig cfg;
    cfg.a = -1;
    const auto parts = split_all(P({0, 0, 1}), cfg);
    EXPECT_EQ(parts[0], P({1, 1}));
    EXPECT_EQ(parts[1], Poly(-2));
}

TEST(Residue, SplitMatchesIndependentReconstruction) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 15), num(-9, 9), den(1, 5);
    for (unsigned n : {1u, 2u, 3u, 5u})
        for (const Rational& a : {Rational(0), Rational(-1), Rational(3, 2)})
            for (int t = 0; t < 10; ++t) {
                std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
                for (auto& v : c) v = Rational(num(rng), den(rng));
                const Poly p(c);
                FoldConfig cfg;
                cfg.n = n;
                cfg.a = a;
                const auto parts = split_all(p, cfg);
                EXPECT_EQ(rebuild(parts, cfg), p);
                EXPECT_EQ(unfold(parts, cfg), p);
            }
}

TEST(Residue, PreSubstitution) {
    FoldConfig cfg;
    cfg.pre_s = 2;
    cfg.pre_c = -1;
    const auto row = fold_row(Poly::x(), cfg);
    EXPECT_EQ(row[0], Poly(-1));
    EXPECT_EQ(row[1], Poly(2));
}

TEST(Residue, InvalidConfigRejected) {
    FoldConfig cfg;
    cfg.n = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg.n = 2;
    cfg.pre_s = 0;
    EXPECT_THROW(cfg.validate(), Error);
}

TEST(Residue, FoldFamilyRowsAreConsecutiveDegrees) {
    // Monic Laguerre alpha = 0: L_0 = 1, L_1 = x - 1, L_2 = x^2 - 4x + 2, L_3 = x^3 - 9x^2 + 18x - 6.
    Family lag(FamilySpec::laguerre(0));
    const MatPoly p0 = fold_family(lag, FoldConfig{}, 0);
    EXPECT_EQ(p0, (MatPoly{{Poly(1), Poly()}, {Poly(-1), Poly(1)}}));
    const MatPoly p1 = fold_family(lag, FoldConfig{}, 1);
    EXPECT_EQ(p1, (MatPoly{{P({2, 1}), Poly(-4)}, {P({-6, -9}), P({18, 1})}}));
}
