// Copyright 2026 The mmsum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mmsum/tableaux.hpp"

using namespace mmsum;

namespace {

std::map<std::vector<long>, long> shape_breakdown(TabKind kind, int r, int n) {
    std::map<std::vector<long>, long> out;
    tableaux_foreach(kind, r, n, std::nullopt, [&](const Tableau& t) {
        std::vector<long> s;
        for (auto& row : t.rows) s.push_back(static_cast<long>(row.size()));
        out[s]++;
    });
    return out;
}

} // namespace

TEST_CASE("published 2x2 data") {
    // Sundaram: 100 tableaux, by shape 1,5,10,14,35,35
    auto bd = shape_breakdown(TabKind::Sundaram, 2, 2);
    CHECK(bd[{}] == 1);
    CHECK(bd[{1}] == 5);
    CHECK(bd[{1, 1}] == 10);
    CHECK(bd[{2}] == 14);
    CHECK(bd[{2, 1}] == 35);
    CHECK(bd[{2, 2}] == 35);
    CHECK(tableau_count_generated(TabKind::Sundaram, 2, 2) == 100);
    // infinity multiplicity histogram 50 / 40 / 10, signed counts 20 and 20
    std::map<long, long> hist;
    tableaux_foreach(TabKind::Sundaram, 2, 2, std::nullopt,
                     [&](const Tableau& t) { hist[t.m_infinity()]++; });
    CHECK(hist[0] == 50);
    CHECK(hist[1] == 40);
    CHECK(hist[2] == 10);
    CHECK(tableau_count_generated(TabKind::Sundaram, 2, 2, TabWeighting::SignSize) == 20);
    CHECK(tableau_count_generated(TabKind::Sundaram, 2, 2, TabWeighting::SignMInfinity) == 20);

    // symplectic: 50, by shape 1,4,5,10,16,14, signed 10
    bd = shape_breakdown(TabKind::King, 2, 2);
    CHECK(bd[{}] == 1);
    CHECK(bd[{1}] == 4);
    CHECK(bd[{1, 1}] == 5);
    CHECK(bd[{2}] == 10);
    CHECK(bd[{2, 1}] == 16);
    CHECK(bd[{2, 2}] == 14);
    CHECK(tableau_count_generated(TabKind::King, 2, 2) == 50);
    CHECK(tableau_count_generated(TabKind::King, 2, 2, TabWeighting::SignSize) == 10);

    // even family: 46, by shape 1,4,6,9,16,10, exactly 32 of height 2
    bd = shape_breakdown(TabKind::EvenSundaram, 2, 2);
    CHECK(bd[{}] == 1);
    CHECK(bd[{1}] == 4);
    CHECK(bd[{1, 1}] == 6);
    CHECK(bd[{2}] == 9);
    CHECK(bd[{2, 1}] == 16);
    CHECK(bd[{2, 2}] == 10);
    CHECK(tableau_count_generated(TabKind::EvenSundaram, 2, 2) == 46);
    CHECK(tableau_count_generated(TabKind::EvenSundaram, 2, 2, TabWeighting::HeightExactN) == 32);
}

TEST_CASE("generated counts match the closed forms for r, n <= 3") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            CHECK(Rational(tableau_count_generated(TabKind::Sundaram, r, n)) ==
                  tableau_count_closed(TabKind::Sundaram, r, n));
            CHECK(Rational(tableau_count_generated(TabKind::Sundaram, r, n, TabWeighting::SignSize)) ==
                  tableau_count_closed(TabKind::Sundaram, r, n, TabWeighting::SignSize));
            CHECK(Rational(tableau_count_generated(TabKind::Sundaram, r, n, TabWeighting::SignMInfinity)) ==
                  tableau_count_closed(TabKind::Sundaram, r, n, TabWeighting::SignMInfinity));
            CHECK(Rational(tableau_count_generated(TabKind::King, r, n)) ==
                  tableau_count_closed(TabKind::King, r, n));
            CHECK(Rational(tableau_count_generated(TabKind::King, r, n, TabWeighting::SignSize)) ==
                  tableau_count_closed(TabKind::King, r, n, TabWeighting::SignSize));
            CHECK(Rational(tableau_count_generated(TabKind::EvenSundaram, r, n)) ==
                  tableau_count_closed(TabKind::EvenSundaram, r, n));
            CHECK(Rational(tableau_count_generated(TabKind::EvenSundaram, r, n, TabWeighting::HeightExactN)) ==
                  tableau_count_closed(TabKind::EvenSundaram, r, n, TabWeighting::HeightExactN));
        }
}

TEST_CASE("unsupported weightings are rejected") {
    CHECK_THROWS_AS(tableau_count_closed(TabKind::EvenSundaram, 2, 2, TabWeighting::SignSize),
                    std::domain_error);
    CHECK_THROWS_AS(tableau_count_closed(TabKind::King, 2, 2, TabWeighting::SignMInfinity),
                    std::domain_error);
}

TEST_CASE("text dump uses bars and inf") {
    bool seen = false;
    GPartition shape = GPartition::ints({2});
    tableaux_foreach(TabKind::Sundaram, 2, 1, shape, [&](const Tableau& t) {
        std::string s = t.text();
        if (s == "1 inf\n") seen = true;
        CHECK(s.find("  ") == std::string::npos);
    });
    CHECK(seen);
}
