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

#include <mvop/recurrence.hpp>

using namespace mvop;

namespace {

TriBand laguerre_tri(const Rational& a) {
    return {[a](unsigned n) { return Rational(n) * (Rational(n) + a); }, [a](unsigned n) { return 2 * Rational(n) + 1 + a; },
            [](unsigned) { return Rational(1); }};
}

std::vector<MatPoly> folded_list(const FamilySpec& spec, const FoldConfig& cfg, unsigned count) {
    Family fam(spec);
    std::vector<MatPoly> out;
    for (unsigned n = 0; n < count; ++n) out.push_back(fold_family(fam, cfg, n));
    return out;
}

}  // namespace

TEST(Bands, LaguerreThreeTerm) {
    Family lag(FamilySpec::laguerre(Rational(1, 2)));
    const auto rep = verify_banded(lag, laguerre_bands(Rational(1, 2)), 15);
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.checked, 16u);
}

TEST(Bands, SquaredJacobiMatrixGivesFiveTerms) {
    const Rational a(1);
    Family lag(FamilySpec::laguerre(a));
    const auto rec = five_term_from_bidiagonal(laguerre_tri(a), laguerre_tri(a), 0);
    EXPECT_EQ(rec.pivot(), Poly::monomial(1, 2));
    EXPECT_TRUE(verify_banded(lag, rec, 12).pass());
    // x^2 L_0 = L_2 + 2(alpha + 2) L_1 + (alpha + 1)(alpha + 2) L_0, computed by hand at alpha = 1
    EXPECT_EQ(rec(0, 2), Rational(1));
    EXPECT_EQ(rec(0, 1), Rational(6));
    EXPECT_EQ(rec(0, 0), Rational(6));
}

TEST(Bands, KrallFamilies) {
    for (const auto& spec : {FamilySpec::krall_laguerre(Rational(1, 2), 5), FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7)}) {
        Family fam(spec);
        EXPECT_TRUE(verify_banded(fam, krall_bands(spec), 12).pass()) << spec.to_string();
    }
    EXPECT_THROW((void)krall_bands(FamilySpec::laguerre(0)), Error);
}

TEST(Bands, CorruptionIsLocalized) {
    const auto spec = FamilySpec::krall_laguerre(1, 2);
    Family fam(spec);
    const auto rec = krall_bands(spec);
    for (unsigned bad_row : {0u, 3u, 7u}) {
        BandedRec bad = rec;
        bad.band = [rec, bad_row](unsigned n, int k) { return rec(n, k) + (n == bad_row && k == 0 ? Rational(1) : Rational(0)); };
        EXPECT_EQ(verify_banded(fam, bad, 10).failing, std::vector<unsigned>{bad_row});
    }
}

TEST(Blocks, FoldedRecurrenceHolds) {
    const auto spec = FamilySpec::krall_laguerre(Rational(1, 2), 5);
    Family fam(spec);
    const FoldConfig cfg;
    const auto blocks = blocks_from_banded(bands_for_fold(krall_bands(spec), cfg), 10);
    EXPECT_EQ(blocks.count(), 10u);
    EXPECT_TRUE(blocks.c[0].is_zero());
    EXPECT_TRUE(verify_block_ttrr([&](unsigned n) { return fold_family(fam, cfg, n); }, blocks).empty());

    const auto kj = FamilySpec::krall_jacobi(Rational(3, 2), Rational(7, 8), 7);
    Family kjf(kj);
    FoldConfig at_minus_one;
    at_minus_one.a = -1;
    const auto kb = blocks_from_banded(bands_for_fold(krall_bands(kj), at_minus_one), 10);
    EXPECT_TRUE(verify_block_ttrr([&](unsigned n) { return fold_family(kjf, at_minus_one, n); }, kb).empty());
    EXPECT_THROW((void)bands_for_fold(krall_bands(kj), FoldConfig{}), Error);
}

TEST(Blocks, PreSubstitutedFold) {
    // x = 2u - 1 sends the pivot (x + 1)^2 to 4 u^2.
    const auto kj = FamilySpec::krall_jacobi(1, 0, 5);
    Family fam(kj);
    FoldConfig cfg;
    cfg.pre_s = 2;
    cfg.pre_c = -1;
    const auto blocks = blocks_from_banded(bands_for_fold(krall_bands(kj), cfg), 8);
    EXPECT_TRUE(verify_block_ttrr([&](unsigned n) { return fold_family(fam, cfg, n); }, blocks).empty());
}

TEST(Monic, LeadingCoefficientBecomesIdentity) {
    const auto ps = folded_list(FamilySpec::krall_laguerre(1, 2), FoldConfig{}, 6);
    const auto mon = make_monic(ps);
    for (const auto& p : mon.polys) EXPECT_EQ(p.leading_coefficient(), RatMatrix::identity(2));
    MatPoly sing(2);
    sing(0, 0) = Poly::x();
    sing(1, 0) = Poly::x();
    try {
        (void)make_monic({sing});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularLeadingCoefficient);
    }
}

TEST(Symmetrize, LaguerreRatios) {
    const Rational a(1, 2);
    const auto res = scalar_symmetrize(laguerre_bands(a), 10);
    ASSERT_TRUE(res.success);
    for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(res.rho[n], Rational(1) / (Rational(n) * (Rational(n) + a)));
}

TEST(Symmetrize, ZeroBandReported) {
    BandedRec rec = laguerre_bands(0);
    BandedRec bad = rec;
    bad.band = [rec](unsigned n, int k) { return n == 4 && k == -1 ? Rational(0) : rec(n, k); };
    const auto res = scalar_symmetrize(bad, 10);
    EXPECT_FALSE(res.success);
    ASSERT_TRUE(res.first_failure);
    EXPECT_EQ(*res.first_failure, 4u);
    EXPECT_NE(res.reason.find("ZeroBand"), std::string::npos);
}

TEST(Symmetrize, KrallLaguerreOnlyAtAlphaZero) {
    EXPECT_TRUE(scalar_symmetrize(krall_bands(FamilySpec::krall_laguerre(0, 5)), 12).success);
    EXPECT_FALSE(scalar_symmetrize(krall_bands(FamilySpec::krall_laguerre(1, 5)), 12).success);
    EXPECT_TRUE(darboux_symmetry_condition(FamilyCoeffs(FamilySpec::krall_laguerre(0, 5)), 3));
    EXPECT_FALSE(darboux_symmetry_condition(FamilyCoeffs(FamilySpec::krall_laguerre(1, 5)), 3));
}

TEST(Symmetrize, MatrixLaguerre) {
    const auto spec = FamilySpec::laguerre(0);
    const FoldConfig cfg;
    const auto mon = make_monic(folded_list(spec, cfg, 9));
    const auto rec = five_term_from_bidiagonal(laguerre_tri(0), laguerre_tri(0), 0);
    const auto res = matrix_symmetrize(monic_blocks(blocks_from_banded(rec, 9), mon.multipliers));
    ASSERT_TRUE(res.success) << res.reason;
    for (std::size_t n = 0; n < res.s.size(); ++n) {
        EXPECT_TRUE(res.s[n].is_symmetric());
        EXPECT_TRUE(is_positive_definite(res.s[n]));
    }
}

TEST(Gram, HandComputedFirstBlock) {
    // P_0 rows: p_0 = 1 and p_1 = x - 7/8. Moments 2 (2j + a + b)! plus 2/7 at the origin.
    const auto w = folded_laguerre_weight(2, 0, Rational(7));
    const auto ps = folded_list(FamilySpec::krall_laguerre(0, 7), FoldConfig{}, 2);
    EXPECT_EQ(moment_gram(ps[0], ps[0], w), (RatMatrix{{Rational(16, 7), 0}, {0, Rational(9, 4)}}));
    EXPECT_TRUE(moment_gram(ps[0], ps[1], w).is_zero());
}

TEST(Gram, NonIntegerAlphaRejected) {
    try {
        (void)folded_laguerre_weight(2, Rational(1, 2));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IrrationalMoments);
    }
}
