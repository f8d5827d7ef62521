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

#include <random>

#include "mmsum/characters.hpp"
#include "mmsum/tableaux.hpp"

using namespace mmsum;

namespace {

std::mt19937_64 rng(20260810);

Rational rand_rat() {
    std::uniform_int_distribution<int> num(2, 9), den(1, 4);
    return Rational(num(rng), den(rng));
}

// y values with distinct generic x = y^2 (retry limit per the module contract)
std::vector<Rational> random_y(size_t n) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Rational> y;
        for (size_t i = 0; i < n; ++i) y.push_back(rand_rat());
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                if (i != j && y[i].pow(2) == y[j].pow(2)) ok = false;
                if (y[i].pow(2) * y[j].pow(2) == Rational(1)) ok = false;
                if (y[i].pow(2) == Rational(1)) ok = false;
            }
        if (ok) return y;
    }
    throw std::runtime_error("random_y: no generic point found");
}

RationalFunction rf_at(const LaurentPoly& p) { return RationalFunction(p); }

} // namespace

TEST_CASE("bialternant spot values") {
    // s_(1)(x1, x2) = x1 + x2 at x = (1, 4)
    CHECK(char_eval(CharFamily::Schur, GPartition::ints({1}), {Rational(1), Rational(2)}) == Rational(5));
    // odd-orthogonal rank 1: x + 1 + 1/x at x = 4
    CHECK(char_eval(CharFamily::SoOdd, GPartition::ints({1}), {Rational(2)}) == Rational(21, 4));
    // symplectic rank 1: x + 1/x at x = 4
    CHECK(char_eval(CharFamily::Sp, GPartition::ints({1}), {Rational(2)}) == Rational(17, 4));
    // empty shapes give 1
    CHECK(char_eval(CharFamily::SoEven, GPartition(), random_y(2)) == Rational(1));
}

TEST_CASE("tableau sums agree with the bialternants") {
    for (auto& y : {random_y(2), random_y(2), random_y(2)}) {
        for (auto& lam : partitions_in_box(2, 2)) {
            CAPTURE(lam.str());
            CHECK(tableau_weight_sum(TabKind::Sundaram, lam, y) ==
                  char_eval(CharFamily::SoOdd, lam, y));
            CHECK(tableau_weight_sum(TabKind::King, lam, y) == char_eval(CharFamily::Sp, lam, y));
        }
    }
    // Schur via its own tableau model: s_(2,1)(1,2,3) = 60 needs integer x;
    // x = y^2 with y = (1, 2, 3) gives x = (1, 4, 9)
    Rational v = char_eval(CharFamily::Schur, GPartition::ints({2, 1}),
                           {Rational(1), Rational(2), Rational(3)});
    // s_(2,1) = e1 e2 - e3 at x = (1, 4, 9): 14 * 49 - 36
    CHECK(v == Rational(1 + 4 + 9) * Rational(1 * 4 + 1 * 9 + 4 * 9) - Rational(1 * 4 * 9));
}

TEST_CASE("even-orthogonal relations at random points") {
    for (int n = 1; n <= 3; ++n) {
        auto y = random_y(static_cast<size_t>(n));
        for (auto& lam : partitions_in_box(2, n)) {
            Rational o = char_eval(CharFamily::OEven, lam, y);
            if (lam.length() < static_cast<size_t>(n)) {
                CHECK(o == char_eval(CharFamily::SoEven, lam, y));
            } else {
                std::vector<HalfInt> bar(lam.parts());
                bar.back() = -bar.back();
                Rational so = char_eval(CharFamily::SoEven, lam, y);
                Rational sob = char_eval(CharFamily::SoEven, GPartition(bar), y);
                CHECK(o == so + sob);
                // bar symmetry: negating the last part inverts the last variable
                auto yb = y;
                yb.back() = Rational(1) / yb.back();
                CHECK(sob == char_eval(CharFamily::SoEven, lam, yb));
            }
        }
    }
}

TEST_CASE("principal specialisations match character evaluations") {
    // x_i = t^(2i) (integer points) and x_i = t^(2i-1) (half points), t = s^2
    Rational s(3, 4);
    Rational t = s * s;
    const int n = 3;
    const long r = 3;
    std::vector<Rational> y_int, y_half, y_sch, y_schh;
    for (int i = 1; i <= n; ++i) {
        y_int.push_back(s.pow(2 * i));
        y_half.push_back(s.pow(2 * i - 1));
        y_sch.push_back(s.pow(2 * (i - 1)));
        y_schh.push_back(s.pow(2 * i - 1));
    }
    auto at_t = [&](const RationalFunction& f) { return f.eval(t); };
    for (auto& lam : partitions_in_box(r, n)) {
        CAPTURE(lam.str());
        CHECK(at_t(char_principal_spec(PSKind::SchurInt, lam, n)) ==
              char_eval(CharFamily::Schur, lam, y_sch));
        CHECK(at_t(char_principal_spec(PSKind::SchurDual, lam, n, r)) ==
              char_eval(CharFamily::Schur, lam, y_sch));
        CHECK(at_t(char_principal_spec(PSKind::SchurHalf, lam, n)) ==
              char_eval(CharFamily::Schur, lam, y_schh));
        CHECK(at_t(char_principal_spec(PSKind::SoOddInt, lam, n)) ==
              char_eval(CharFamily::SoOdd, lam, y_int));
        CHECK(at_t(char_principal_spec(PSKind::SoOddDualInt, lam, n, r)) ==
              char_eval(CharFamily::SoOdd, lam, y_int));
        CHECK(at_t(char_principal_spec(PSKind::SoOddHalf, lam, n)) ==
              char_eval(CharFamily::SoOdd, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::SoOddDualHalf, lam, n, r)) ==
              char_eval(CharFamily::SoOdd, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::SoPlusHalf, lam, n)) ==
              char_eval(CharFamily::SoOddPlus, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::SpInt, lam, n)) == char_eval(CharFamily::Sp, lam, y_int));
        CHECK(at_t(char_principal_spec(PSKind::SpDualInt, lam, n, r)) ==
              char_eval(CharFamily::Sp, lam, y_int));
        CHECK(at_t(char_principal_spec(PSKind::SpHalf, lam, n)) == char_eval(CharFamily::Sp, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::SpDualHalf, lam, n, r)) ==
              char_eval(CharFamily::Sp, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::OHalf, lam, n)) == char_eval(CharFamily::OEven, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::ODualHalf, lam, n, r)) ==
              char_eval(CharFamily::OEven, lam, y_half));
        CHECK(at_t(char_principal_spec(PSKind::SoEvenHalf, lam, n)) ==
              char_eval(CharFamily::SoEven, lam, y_half));
    }
    // half-partition shapes for the odd-orthogonal pair; with an odd number
    // of half-integer parts these specialisations leave the t-lattice (they
    // are rational in q^(1/4)), so the product form is exercised at even n
    {
        const int n2 = 2;
        std::vector<Rational> y2;
        for (int i = 1; i <= n2; ++i) y2.push_back(s.pow(2 * i - 1));
        for (auto twice_parts : {std::vector<long>{1, 1}, std::vector<long>{3, 1}, std::vector<long>{5, 3}}) {
            std::vector<HalfInt> parts;
            for (long tw : twice_parts) parts.push_back(HalfInt::from_twice(tw));
            GPartition lam(parts);
            CHECK(at_t(char_principal_spec(PSKind::SoOddHalf, lam, n2)) ==
                  char_eval(CharFamily::SoOdd, lam, y2));
            CHECK(at_t(char_principal_spec(PSKind::SoPlusHalf, lam, n2)) ==
                  char_eval(CharFamily::SoOddPlus, lam, y2));
        }
        std::vector<HalfInt> p3{HalfInt::parse("1/2"), HalfInt::parse("1/2"), HalfInt::parse("1/2")};
        CHECK_THROWS_AS(char_principal_spec(PSKind::SoOddHalf, GPartition(p3), 3), std::domain_error);
    }
    // spec examples
    CHECK(char_principal_spec(PSKind::SchurInt, GPartition::ints({1}), 2) ==
          rf_at(LaurentPoly(1) + LaurentPoly::t_power(2)));
    CHECK(char_principal_spec(PSKind::SchurDual, GPartition::ints({1}), 2, 1) ==
          char_principal_spec(PSKind::SchurInt, GPartition::ints({1}), 2));
    CHECK(char_principal_spec(PSKind::SpDualInt, GPartition(), 3, 2) ==
          RationalFunction(Rational(1)));
}

TEST_CASE("rectangular character-sum identities at random points") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 1; n <= 2; ++n)
            for (int trial = 0; trial < 3; ++trial) {
                auto y = random_y(static_cast<size_t>(n));
                CAPTURE(r);
                CAPTURE(n);
                for (int eps : {1, -1}) {
                    auto rep = okada_sum_check("sososo", r, n, y, eps);
                    CAPTURE(eps);
                    CAPTURE(rep.message);
                    CHECK(rep.equal);
                }
                auto rep = okada_sum_check("spspso", r, n, y);
                CAPTURE(rep.message);
                CHECK(rep.equal);
                if (r >= 1) {
                    rep = okada_sum_check("sososo2", r, n, y);
                    CHECK(rep.equal);
                    rep = okada_sum_check("ooso", r, n, y);
                    CHECK(rep.equal);
                }
            }
}

TEST_CASE("principally specialised corollaries as symbolic identities") {
    for (long r = 0; r <= 3; ++r)
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            for (const char* cor : {"B-sum-a", "B-sum-b+", "B-sum-b-", "Sp-heel", "Sp-half"}) {
                auto rep = corollary_spec_check(cor, r, n);
                CAPTURE(cor);
                CAPTURE(rep.message);
                CHECK(rep.equal);
            }
            if (r >= 1)
                for (const char* cor : {"D-spec-1", "D-spec-2"}) {
                    auto rep = corollary_spec_check(cor, r, n);
                    CAPTURE(cor);
                    CAPTURE(rep.message);
                    CHECK(rep.equal);
                }
        }
}

TEST_CASE("x_n -> 0 reduction") {
    // so(5), lambda = (1,1), r = 1: reduces to so(3) at shape (1)
    auto rep = char_reduce_check(CharFamily::SoOdd, GPartition::ints({1, 1}), {Rational(2)}, 1);
    CHECK(rep.equal);
    CHECK(rep.rhs == Rational(21, 4).str());
    // r > lambda_1 gives zero
    rep = char_reduce_check(CharFamily::SoOdd, GPartition::ints({1}), {Rational(2)}, 2);
    CHECK(rep.equal);
    CHECK(rep.lhs == "0");
    // Schur stability
    rep = char_reduce_check(CharFamily::Schur, GPartition::ints({2, 1}), {Rational(2), Rational(3)}, 0);
    CHECK(rep.equal);
    // oddball inputs propagate as errors
    rep = char_reduce_check(CharFamily::SoOdd, GPartition::ints({3}), {Rational(2)}, 1);
    CHECK(rep.error);
}

TEST_CASE("partition weight factors: definition, explicit form, conjugation") {
    Rational a(3, 7), q(2, 5);
    for (auto& lam : partitions_in_box(3, 3)) {
        CAPTURE(lam.str());
        for (char kind : {'-', '+', '0'})
            CHECK(c_weight(kind, lam, a, q) == c_weight_explicit(kind, lam, a, q, 3));
        GPartition lc = lam.conjugate(3);
        long sz = static_cast<long>(lam.size().num().convert_to<long long>());
        long nl = static_cast<long>(lam.nstat().num().convert_to<long long>());
        long nlc = static_cast<long>(lc.nstat().num().convert_to<long long>());
        CHECK(c_weight('-', lc, a, q) == c_weight('-', lam, a, q));
        Rational lhs = c_weight('+', lc, a, q);
        Rational rhs = (-(a * q)).pow(sz) * q.pow(3 * nl - 3 * nlc) *
                       c_weight('+', lam, Rational(1) / (a * q * q), q);
        CHECK(lhs == rhs);
        lhs = c_weight('0', lc, a, q);
        rhs = (-a).pow(sz) * q.pow(nl - nlc) * c_weight('0', lam, Rational(1) / a, q);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("denominator identities") {
    for (size_t n = 1; n <= 4; ++n) {
        auto y = random_y(n);
        CAPTURE(n);
        CHECK(bn_denominator_check(y));
        CHECK(bn_denominator_plus_check(y));
    }
}

TEST_CASE("non-generic points raise") {
    CHECK_THROWS_AS(char_eval(CharFamily::Schur, GPartition::ints({1}), {Rational(2), Rational(2)}),
                    std::domain_error);
}
