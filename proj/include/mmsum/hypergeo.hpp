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

#pragma once

#include "mmsum/qweight.hpp"

namespace mmsum {

// Terminating ordinary hypergeometric series with exact rational parameters.
struct HyperSeries {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational z = Rational(1);
};

// Exact finite sum; termination comes from a nonpositive-integer upper
// parameter. Throws when no upper parameter terminates the series or a lower
// parameter hits a zero factorial first.
Rational hyper_terminating(const HyperSeries& s);

// Signed monomial sign * t^e, the parameter domain of all q-series here.
struct QMono {
    int sign = 1;
    long e = 0;

    static QMono q(long k) { return QMono{1, 2 * k}; }  // q^k = t^(2k)
    friend QMono operator*(const QMono& a, const QMono& b) { return QMono{a.sign * b.sign, a.e + b.e}; }
    friend QMono operator/(const QMono& a, const QMono& b) { return QMono{a.sign * b.sign, a.e - b.e}; }
    QV value(const QEnv& env) const {
        QV v = env.tpow(Rational(e));
        return sign < 0 ? env.zero() - v : v;
    }
    // (this; q)_k
    QV poch(const QEnv& env, long k) const { return env.qpoch(sign, e, 2, k); }
};

// Basic hypergeometric series r_phi_s with monomial parameters, terminating
// after N + 1 terms (the caller supplies the cutoff; a vanishing upper
// Pochhammer simply truncates earlier). Includes the balancing factor
// ((-1)^l q^binom(l,2))^(s - r + 1).
QV qhyper_terminating(const QEnv& env, const std::vector<QMono>& upper, const std::vector<QMono>& lower,
                      const QMono& z, long N);

struct HGReport {
    bool equal = false;
    bool error = false;
    std::string message;
    std::string lhs, rhs;
};

// Classical summation/transformation checks, all terminating and exact:
//   dixon:   3F2[a, b, -N; 1+a-b, 1+a+N] at 1
//   f43sum:  4F3[a, a/2+1, b, -N; a/2, 1+a-b, 1+a+N] at 1
//   whipple: balanced 4F3 transformation
HGReport dixon_check(const Rational& a, const Rational& b, long N);
HGReport f43sum_check(const Rational& a, const Rational& b, long N);
HGReport whipple_check(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                       const Rational& f, long N);

// Very-well-poised 8phi7 against the balanced 4phi3; terminating through
// f = q^(-N). The infinite-product ratio of the classical statement
// telescopes to finite products for this family.
HGReport watson_check(const QEnv& env, const QMono& a, const QMono& b, const QMono& c, const QMono& d,
                      const QMono& e, long N);

// The discrete multiple-series transformation: both sides are sums over
// 0 <= k_1 < ... < k_r <= m; lambda = a^2 q^(2-r) / (b c d).
HGReport multiple_series_transform_check(const QEnv& env, const QMono& a, const QMono& b, const QMono& c,
                                         const QMono& d, const QMono& e, const QMono& f, long m, int r);

// Truncated infinite product (sign t^m ; t^beta)_inf at 0 < t0 < 1 with a
// rigorous tail bound.
struct TruncatedProduct {
    double value = 1.0;
    double bound = 0.0;  // |true - value| <= bound
};
TruncatedProduct qpochhammer_inf_trunc(int sign, long m, int beta, const Rational& t0, long terms);

// Numeric residual check of the one-sided (m -> infinity) transformation at a
// sample point; reports |lhs - rhs| and the combined truncation bound.
struct NumericReport {
    double lhs = 0, rhs = 0, residual = 0, bound = 0;
    bool pass = false;
};
NumericReport rains3_numeric_check(const QMono& a, const QMono& d, const QMono& e, const QMono& f, int r,
                                   const Rational& t0);

// Same for the variant carrying the extra parameter c and a terminating
// correction sum on the right.
NumericReport rains4_numeric_check(const QMono& a, const QMono& c, const QMono& d, const QMono& e,
                                   const QMono& f, int r, const Rational& t0);

} // namespace mmsum
