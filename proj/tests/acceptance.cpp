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

// Runs every scenario once and prints one PASS/FAIL line per acceptance criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <mvop/scenarios.hpp>

int main() {
    using namespace mvop;
    struct Tally {
        std::vector<std::string> scenarios;
        std::size_t checks = 0, passed = 0;
        std::vector<std::string> failures;
        double seconds = 0;
    };
    std::map<int, Tally> by_criterion;
    for (const auto& s : scenarios()) {
        const auto t0 = std::chrono::steady_clock::now();
        Report rep("error");
        try {
            rep = s.run();
        } catch (const std::exception& e) {
            rep = Report(s.name);
            rep.add("scenario raised an exception", "", false, {{"error", e.what()}});
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& c : s.criteria) {
            Tally& t = by_criterion[std::stoi(c.substr(1))];
            t.scenarios.push_back(s.name);
            t.seconds += dt;
            for (const auto& chk : rep.checks()) {
                ++t.checks;
                if (chk.pass) ++t.passed;
                else t.failures.push_back(s.name + ": " + chk.name + " " + chk.witness.dump());
            }
        }
    }
    bool all = true;
    for (int a = 1; a <= 10; ++a) {
        const auto it = by_criterion.find(a);
        const bool ok = it != by_criterion.end() && it->second.checks > 0 && it->second.passed == it->second.checks;
        all = all && ok;
        std::cout << "A" << a << (a < 10 ? "  " : " ") << (ok ? "PASS" : "FAIL");
        if (it == by_criterion.end()) {
            std::cout << "  no scenario\n";
            continue;
        }
        const Tally& t = it->second;
        std::cout << "  " << t.passed << "/" << t.checks << " checks  [";
        for (std::size_t i = 0; i < t.scenarios.size(); ++i) std::cout << (i ? ", " : "") << t.scenarios[i];
        std::cout << "]  " << static_cast<long>(t.seconds * 1000) << " ms\n";
        for (const auto& f : t.failures) std::cout << "      failed: " << f << "\n";
    }
    return all ? 0 : 1;
}
