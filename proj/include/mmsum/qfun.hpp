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

#include <vector>

#include "mmsum/halfint.hpp"
#include "mmsum/ratfun.hpp"

namespace mmsum {

// Everything is expressed in the global variable t = q^(1/2). A base exponent
// beta in {1,2,4} selects the base t^beta, i.e. q^(1/2), q, q^2.

// [k]_{t^beta} = (1 - t^(beta k)) / (1 - t^beta). Requires beta*k integral.
RationalFunction q_bracket(const HalfInt& k, int beta);

// sign(k) * [k]_{t^beta}; the absolute value of the bracket for 0 < q < 1.
RationalFunction q_abs_bracket(const HalfInt& k, int beta);

// (sign t^m ; t^beta)_n = prod_{j=0}^{n-1} (1 - sign t^(m+beta j)), n >= 0.
LaurentPoly q_shifted_factorial(int sign, long m, int beta, long n);

// Same with the standard extension to negative length:
// (a;Q)_{-n} = 1 / prod_{j=1}^{n} (1 - a Q^(-j)).
RationalFunction q_shifted_factorial_gen(int sign, long m, int beta, long n);

// Gaussian binomial coefficient in base t^beta. Zero outside 0 <= m <= n.
LaurentPoly q_binomial(long n, long m, int beta);

// [n]! in base t^beta.
LaurentPoly q_factorial(long n, int beta);

// A factor Gamma_{t^beta}(arg).
struct GammaFactor {
    int beta;     // base exponent: 1, 2 or 4
    HalfInt arg;
};

// Exact ratio prod Gamma(nums) / prod Gamma(dens).
//
// Factors are grouped by (base, fractional part of the argument). Groups with
// fractional arguments must have equal numerator/denominator counts (otherwise
// the ratio has a transcendental residue); matched factors reduce to finite
// bracket products via Gamma_Q(a)/Gamma_Q(c) = prod_{j=0}^{a-c-1} [c+j]_Q.
// Integer-argument groups may be unbalanced: a leftover Gamma_Q(x) with x >= 1
// evaluates directly as (1-Q)^(1-x) (Q;Q)_{x-1}.
//
// A zero bracket met in numerator position makes the ratio 0; in denominator
// position (or a leftover Gamma at a nonpositive argument in the numerator) it
// is a pole and throws.
RationalFunction gamma_ratio_product(const std::vector<GammaFactor>& nums,
                                     const std::vector<GammaFactor>& dens);

// Classical (q = 1) analogue over exact rationals; same grouping, pairing and
// zero/pole rules with [x] = x and leftover Gamma(x) = (x-1)!.
Rational gamma_ratio_rational(const std::vector<HalfInt>& nums,
                              const std::vector<HalfInt>& dens);

// Exact value c * 2^(a/2) * pi^(b/2). Addition only between like powers.
struct SqrtPiNumber {
    Rational coeff;
    long pi_half_power = 0;
    long two_half_power = 0;

    SqrtPiNumber() : coeff(0) {}
    explicit SqrtPiNumber(Rational c, long pi_half = 0, long two_half = 0)
        : coeff(std::move(c)), pi_half_power(pi_half), two_half_power(two_half) {
        canonicalize();
    }

    // even powers of sqrt(2) fold into the coefficient
    void canonicalize() {
        while (two_half_power >= 2) {
            coeff *= Rational(2);
            two_half_power -= 2;
        }
        while (two_half_power <= -2) {
            coeff /= Rational(2);
            two_half_power += 2;
        }
    }

    friend SqrtPiNumber operator*(const SqrtPiNumber& x, const SqrtPiNumber& y) {
        return SqrtPiNumber(x.coeff * y.coeff, x.pi_half_power + y.pi_half_power,
                            x.two_half_power + y.two_half_power);
    }
    friend SqrtPiNumber operator/(const SqrtPiNumber& x, const SqrtPiNumber& y) {
        return SqrtPiNumber(x.coeff / y.coeff, x.pi_half_power - y.pi_half_power,
                            x.two_half_power - y.two_half_power);
    }
    friend SqrtPiNumber operator+(const SqrtPiNumber& x, const SqrtPiNumber& y) {
        if (x.coeff.is_zero()) return y;
        if (y.coeff.is_zero()) return x;
        if (x.pi_half_power != y.pi_half_power || x.two_half_power != y.two_half_power)
            throw std::domain_error("SqrtPiNumber: addition of unlike powers");
        return SqrtPiNumber(x.coeff + y.coeff, x.pi_half_power, x.two_half_power);
    }

    double to_double() const;
    std::string str() const;
};

// Classical Gamma at a positive integer or half-integer argument, exactly:
// Gamma(m) = (m-1)!, Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!).
SqrtPiNumber gamma_halfint(const HalfInt& x);

// Exact evaluation of f at rational t0 (pole -> error).
inline Rational eval_rf(const RationalFunction& f, const Rational& t0) { return f.eval(t0); }

} // namespace mmsum
