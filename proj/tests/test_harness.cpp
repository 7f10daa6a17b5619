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

#include <set>

#include <mvop/scenarios.hpp>

using namespace mvop;

TEST(Json, ExactForms) {
    EXPECT_EQ(to_json(Rational(3, 2)), Json("3/2"));
    EXPECT_EQ(to_json(Rational(-4)), Json("-4"));
    EXPECT_EQ(to_json(Poly({Rational(1), Rational(0), Rational(1, 2)})).dump(), R"(["1","0","1/2"])");
    EXPECT_EQ(to_json(Poly()).dump(), "[]");
    EXPECT_EQ(to_json(RatMatrix{{1, 2}, {3, 4}}).dump(), R"([["1","2"],["3","4"]])");
}

TEST(Json, PolyTextRoundTrip) {
    const Poly p = parse_poly("1, -2/4,0,3");
    EXPECT_EQ(p, Poly({Rational(1), Rational(-1, 2), Rational(0), Rational(3)}));
    EXPECT_EQ(poly_csv(p), "1,-1/2,0,3");
    EXPECT_EQ(poly_csv(Poly()), "0");
    EXPECT_THROW((void)parse_poly("1,,2"), Error);
}

TEST(Scenarios, RegistryIsWellFormed) {
    std::set<std::string> names;
    for (const auto& s : scenarios()) {
        EXPECT_TRUE(names.insert(s.name).second) << "duplicate " << s.name;
        EXPECT_FALSE(s.criteria.empty()) << s.name;
        EXPECT_TRUE(static_cast<bool>(s.run)) << s.name;
    }
    std::set<std::string> covered;
    for (const auto& s : scenarios()) covered.insert(s.criteria.begin(), s.criteria.end());
    for (int i = 1; i <= 10; ++i) EXPECT_TRUE(covered.count("A" + std::to_string(i))) << i;
}

TEST(Scenarios, UnknownNameRaises) {
    try {
        (void)find_scenario("no-such-scenario");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownScenario);
    }
}

TEST(Scenarios, ReportsAreDeterministic) {
    const auto& s = find_scenario("laguerre-2x2");
    const Report a = s.run(), b = s.run();
    EXPECT_TRUE(a.pass());
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
    const Json j = a.to_json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["scenario"], "laguerre-2x2");
    EXPECT_TRUE(j.contains("timings"));
    EXPECT_FALSE(a.to_json(false).contains("timings"));
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_TRUE(c.contains("paper_ref"));
        EXPECT_TRUE(c.contains("witness"));
    }
}

TEST(Scenarios, EmptyOrFailingReportDoesNotPass) {
    Report r("x");
    EXPECT_FALSE(r.pass());
    r.add("ok", "ref", true);
    EXPECT_TRUE(r.pass());
    r.add("bad", "ref", false);
    EXPECT_FALSE(r.pass());
}
