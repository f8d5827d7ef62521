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

#include <algorithm>
#include <random>

#include "mmsum/qfun.hpp"

using namespace mmsum;

namespace {
RationalFunction rf(const LaurentPoly& p) { return RationalFunction(p); }
HalfInt h(long twice) { return HalfInt::from_twice(twice); }
} // namespace

TEST_CASE("rational arithmetic and normalization") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("halfint basics") {
    HalfInt x = HalfInt::parse("3/2");
    CHECK(!x.is_integer());
    CHECK(x.floor() == HalfInt(1));
    CHECK(x.ceil() == HalfInt(2));
    CHECK((-x).floor() == HalfInt(-2));
    CHECK((x + x).to_long() == 3);
    CHECK(HalfInt::parse("-2") == HalfInt(-2));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p = LaurentPoly::t_power(2) + LaurentPoly(1);      // 1 + t^2
    LaurentPoly q = LaurentPoly::t_power(-1).scaled(Rational(3));  // 3 t^-1
    LaurentPoly r = p * q;
    CHECK(r.coeff(-1) == Rational(3));
    CHECK(r.coeff(1) == Rational(3));
    CHECK(r.eval(Rational(2)) == Rational(15, 2));
    CHECK(p.negate_var() == p);
    CHECK(q.negate_var() == -q);
    CHECK(laurent_div_exact(p * p, p) == p);
    CHECK_THROWS(laurent_div_exact(p + LaurentPoly::t_power(1), p));
}

TEST_CASE("rational function normalization and equality") {
    // (1 - t^2) / (1 - t) == 1 + t
    RationalFunction f(LaurentPoly(1) - LaurentPoly::t_power(2), LaurentPoly(1) - LaurentPoly::t_power(1));
    CHECK(f.is_polynomial());
    CHECK(f == rf(LaurentPoly(1) + LaurentPoly::t_power(1)));
    CHECK(f.eval(Rational(1)) == Rational(2));
    // 1 / (1 + t) at 1/2 -> 2/3
    RationalFunction g(LaurentPoly(1), LaurentPoly(1) + LaurentPoly::t_power(1));
    CHECK(g.eval(Rational(1, 2)) == Rational(2, 3));
    // denominator normalized: monic, lowest exponent zero
    RationalFunction s(LaurentPoly::t_power(3), LaurentPoly::t_power(1) + LaurentPoly::t_power(2));
    CHECK(s.den().low_exp() == 0);
    CHECK(s.den().coeff(s.den().high_exp()) == Rational(1));
}

TEST_CASE("q_bracket examples") {
    // [3]_q = 1 + q + q^2 = 1 + t^2 + t^4
    LaurentPoly want = LaurentPoly(1) + LaurentPoly::t_power(2) + LaurentPoly::t_power(4);
    CHECK(q_bracket(HalfInt(3), 2) == rf(want));
    CHECK(q_bracket(HalfInt(0), 2).is_zero());
    // [1/2]_q = 1/(1+t)
    RationalFunction half = q_bracket(HalfInt::half(), 2);
    CHECK(half == RationalFunction(LaurentPoly(1), LaurentPoly(1) + LaurentPoly::t_power(1)));
    CHECK_THROWS_AS(q_bracket(HalfInt::half(), 1), std::domain_error);
}

TEST_CASE("q_abs_bracket examples") {
    // |[-2]_q| = q^-2 + q^-1 = t^-4 + t^-2
    LaurentPoly want = LaurentPoly::t_power(-4) + LaurentPoly::t_power(-2);
    CHECK(q_abs_bracket(HalfInt(-2), 2) == rf(want));
    CHECK(q_abs_bracket(HalfInt(2), 2) == rf(LaurentPoly(1) + LaurentPoly::t_power(2)));
    // |[-1/2]_q| = t^-1 / (1+t)
    CHECK(q_abs_bracket(h(-1), 2) ==
          RationalFunction(LaurentPoly::t_power(-1), LaurentPoly(1) + LaurentPoly::t_power(1)));
    // nonnegative on a grid of rational t0 in (0,1)
    for (long tw = -5; tw <= 5; ++tw) {
        for (int den = 2; den <= 4; ++den) {
            Rational t0(1, den);
            CHECK(q_abs_bracket(h(tw), 2).eval(t0) >= Rational(0));
        }
    }
}

TEST_CASE("q_shifted_factorial examples") {
    CHECK(q_shifted_factorial(+1, 2, 2, 2) ==
          (LaurentPoly(1) - LaurentPoly::t_power(2)) * (LaurentPoly(1) - LaurentPoly::t_power(4)));
    // (-q^{1/2};q^{1/2})_3 = (1+t)(1+t^2)(1+t^3)
    LaurentPoly want = (LaurentPoly(1) + LaurentPoly::t_power(1)) *
                       (LaurentPoly(1) + LaurentPoly::t_power(2)) *
                       (LaurentPoly(1) + LaurentPoly::t_power(3));
    CHECK(q_shifted_factorial(-1, 1, 1, 3) == want);
    CHECK(q_shifted_factorial(-1, 1, 1, 0) == LaurentPoly(1));
    // generalized negative length: (a;Q)_{-1} = 1/(1 - a/Q)
    CHECK(q_shifted_factorial_gen(-1, 2, 1, -1) ==
          RationalFunction(LaurentPoly(1), LaurentPoly(1) + LaurentPoly::t_power(1)));
}

TEST_CASE("q_binomial examples") {
    // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
    LaurentPoly want;
    want.add_term(0, Rational(1));
    want.add_term(2, Rational(1));
    want.add_term(4, Rational(2));
    want.add_term(6, Rational(1));
    want.add_term(8, Rational(1));
    CHECK(q_binomial(4, 2, 2) == want);
    CHECK(q_binomial(7, 0, 2) == LaurentPoly(1));
    CHECK(q_binomial(3, 5, 2).is_zero());
    CHECK(q_binomial(3, -1, 2).is_zero());
    CHECK(rf(q_binomial(4, 3, 2)).eval(Rational(1)) == Rational(4));
    for (long n = 0; n <= 12; ++n)
        for (long m = 0; m <= n; ++m)
            CHECK(rf(q_binomial(n, m, 2)).eval(Rational(1)) == Rational(big_binomial(n, m)));
}

TEST_CASE("gamma ratio product") {
    auto G = [](int beta, const char* a) { return GammaFactor{beta, HalfInt::parse(a)}; };
    // Gamma_q(5)/Gamma_q(3) = [3][4]
    RationalFunction v = gamma_ratio_product({G(2, "5")}, {G(2, "3")});
    CHECK(v == q_bracket(HalfInt(3), 2) * q_bracket(HalfInt(4), 2));
    // Gamma_q(7/2)/Gamma_q(3/2) = [3/2][5/2]
    v = gamma_ratio_product({G(2, "7/2")}, {G(2, "3/2")});
    CHECK(v == q_bracket(HalfInt::parse("3/2"), 2) * q_bracket(HalfInt::parse("5/2"), 2));
    // unpaired fractional parts -> error
    CHECK_THROWS_AS(gamma_ratio_product({G(2, "3/2")}, {G(2, "2")}), std::domain_error);
    // Gamma_q(n+1)/Gamma_q(1) = [n]!
    for (long n = 0; n <= 6; ++n) {
        v = gamma_ratio_product({GammaFactor{2, HalfInt(n + 1)}}, {GammaFactor{2, HalfInt(1)}});
        CHECK(v == rf(q_factorial(n, 2)));
    }
    // invariance under permutation within a group (values shuffled, same multiset)
    std::vector<GammaFactor> nums = {G(2, "4"), G(2, "7"), G(2, "9/2")};
    std::vector<GammaFactor> dens = {G(2, "2"), G(2, "5"), G(2, "3/2")};
    RationalFunction base = gamma_ratio_product(nums, dens);
    std::mt19937 rng(42);
    for (int it = 0; it < 5; ++it) {
        std::shuffle(nums.begin(), nums.end(), rng);
        std::shuffle(dens.begin(), dens.end(), rng);
        CHECK(gamma_ratio_product(nums, dens) == base);
    }
    // zero bracket in numerator position -> 0
    CHECK(gamma_ratio_product({G(2, "2")}, {G(2, "0")}).is_zero());
    // leftover whole gammas (unbalanced integer group)
    v = gamma_ratio_product({G(2, "4")}, {});
    CHECK(v == rf(q_factorial(3, 2)));
    v = gamma_ratio_product({}, {G(2, "3")});
    CHECK(v == RationalFunction(Rational(1)) / rf(q_factorial(2, 2)));
}

TEST_CASE("classical gamma ratios and gamma_halfint") {
    CHECK(gamma_halfint(HalfInt(3)).coeff == Rational(2));
    CHECK(gamma_halfint(HalfInt(3)).pi_half_power == 0);
    SqrtPiNumber g32 = gamma_halfint(HalfInt::parse("3/2"));
    CHECK(g32.coeff == Rational(1, 2));
    CHECK(g32.pi_half_power == 1);
    SqrtPiNumber g72 = gamma_halfint(HalfInt::parse("7/2"));
    CHECK(g72.coeff == Rational(15, 8));
    CHECK(g72.pi_half_power == 1);
    CHECK_THROWS_AS(gamma_halfint(HalfInt(0)), std::domain_error);

    // Gamma(9/2)/Gamma(3/2) = (3/2)(5/2)(7/2)
    Rational v = gamma_ratio_rational({HalfInt::parse("9/2")}, {HalfInt::parse("3/2")});
    CHECK(v == Rational(105, 8));
    CHECK(gamma_ratio_rational({HalfInt(5)}, {HalfInt(2)}) == Rational(24));
    CHECK(gamma_ratio_rational({HalfInt(2)}, {HalfInt(0)}).is_zero());
}

TEST_CASE("eval_rf examples") {
    CHECK(eval_rf(RationalFunction(LaurentPoly(1) - LaurentPoly::t_power(2),
                                   LaurentPoly(1) - LaurentPoly::t_power(1)),
                  Rational(1)) == Rational(2));
    CHECK(eval_rf(rf(q_binomial(4, 2, 2)), Rational(1)) == Rational(6));
    RationalFunction pole(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t_power(1));
    CHECK_THROWS_AS(pole.eval(Rational(1)), std::domain_error);
}
