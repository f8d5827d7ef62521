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

#include "mmsum/sums.hpp"

using namespace mmsum;

namespace {
SumSpec spec(int a, int tg, long d, int r, HalfInt n, bool sgn = false) {
    SumSpec s;
    s.alpha = a;
    s.two_gamma = tg;
    s.delta = d;
    s.r = r;
    s.n = n;
    s.is_signed = sgn;
    return s;
}
} // namespace

TEST_CASE("frozen spot values") {
    CHECK(discrete_mm_sum(spec(2, 1, 0, 2, HalfInt(2))) == 288);
    CHECK(discrete_mm_sum(spec(2, 2, 0, 2, HalfInt(2))) == 768);
    CHECK(discrete_mm_sum(spec(1, 2, 1, 2, HalfInt(2))) == 576);
    CHECK(discrete_mm_sum(spec(1, 1, 0, 2, HalfInt(1))) == 12);
    CHECK(discrete_mm_sum(spec(2, 1, 0, 3, HalfInt(2))) == 6912);
    CHECK(discrete_mm_sum(spec(2, 1, 1, 2, HalfInt(2))) == 192);
    CHECK(discrete_mm_sum(spec(2, 2, 2, 2, HalfInt(2), true)) == -1152);
}

TEST_CASE("vanishing with a positive point weight at n=0") {
    for (int a : {1, 2})
        for (int r : {1, 2, 3})
            CHECK(discrete_mm_sum(spec(a, 2, 1, r, HalfInt(0))) == 0);
}

TEST_CASE("oracle equivalence: reduced kernel equals naive enumeration") {
    std::vector<HalfInt> ns = {HalfInt(0), HalfInt(1), HalfInt(2), HalfInt(3), HalfInt(4),
                               HalfInt::parse("1/2"), HalfInt::parse("3/2"), HalfInt::parse("5/2"),
                               HalfInt::parse("7/2")};
    for (int a : {1, 2})
        for (int tg : {1, 2})
            for (long d : {0L, 1L, 2L, 3L})
                for (int r : {1, 2, 3})
                    for (auto& n : ns) {
                        SumSpec s = spec(a, tg, d, r, n);
                        CHECK(discrete_mm_sum_exact(s) == discrete_mm_sum_naive(s));
                    }
    // signed sums (integer n only)
    for (int r : {1, 2, 3})
        for (long nn = 0; nn <= 4; ++nn) {
            SumSpec s = spec(2, 2, 2, r, HalfInt(nn), true);
            CHECK(discrete_mm_sum_exact(s) == discrete_mm_sum_naive(s));
        }
}

TEST_CASE("positivity below the vanishing threshold") {
    // the D-type sum is positive for n >= r-1 (delta=0, gamma=1/2)
    for (int r : {2, 3, 4})
        for (long nn = r - 1; nn <= r + 2; ++nn)
            CHECK(discrete_mm_sum(spec(2, 1, 0, r, HalfInt(nn))) > 0);
}

TEST_CASE("signed sums reject half-integer n") {
    CHECK_THROWS_AS(discrete_mm_sum(spec(2, 2, 2, 2, HalfInt::parse("3/2"), true)), std::domain_error);
}

TEST_CASE("pochhammer deformation") {
    // gamma = 1 reduces to the squared... no: plain Vandermonde with 2gamma=2
    for (int r : {1, 2, 3})
        for (long n = 0; n <= 3; ++n)
            CHECK(pochhammer_mm_sum(1, r, n) == discrete_mm_sum(spec(1, 2, 0, r, HalfInt(n))));
    // r = 1: binomial row sum
    for (long g : {0L, 1L, 2L, 5L})
        for (long n = 0; n <= 5; ++n)
            CHECK(pochhammer_mm_sum(g, 1, n) == big_pow(BigInt(2), 2 * n));
    // reduced equals naive
    for (long g : {0L, 1L, 2L, 3L})
        for (int r : {1, 2, 3})
            for (long n = 0; n <= 3; ++n)
                CHECK(pochhammer_mm_sum(g, r, n) == pochhammer_mm_sum_naive(g, r, n));
}

TEST_CASE("two-box variant") {
    SumSpec s = spec(1, 2, 1, 2, HalfInt(2));
    s.m = HalfInt(3);
    CHECK(discrete_mm_sum(s) == 62208);  // independently derived
    s = spec(1, 2, 1, 2, HalfInt::parse("3/2"));
    s.m = HalfInt::parse("5/2");
    CHECK(discrete_mm_sum_exact(s) == Rational(7425, 2));
    CHECK(discrete_mm_sum_exact(s) == discrete_mm_sum_naive(s));
}
