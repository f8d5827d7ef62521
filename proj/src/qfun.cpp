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

#include "mmsum/qfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace mmsum {

namespace {

// t-exponent of t^(beta*k); throws when fractional.
long beta_texp(const HalfInt& k, int beta) {
    BigInt t = BigInt(beta) * k.twice();
    if (t % 2 != 0)
        throw std::domain_error("q_bracket: exponent " + k.str() + " not representable in base beta=" +
                                std::to_string(beta));
    return static_cast<long>(BigInt(t / 2).convert_to<long long>());
}

} // namespace

RationalFunction q_bracket(const HalfInt& k, int beta) {
    long e = beta_texp(k, beta);
    LaurentPoly num = LaurentPoly(1) - LaurentPoly::t_power(e);
    LaurentPoly den = LaurentPoly(1) - LaurentPoly::t_power(beta);
    return RationalFunction(num, den);
}

RationalFunction q_abs_bracket(const HalfInt& k, int beta) {
    if (k.is_zero()) return RationalFunction(0);
    RationalFunction b = q_bracket(k, beta);
    return k.sgn() < 0 ? -b : b;
}

LaurentPoly q_shifted_factorial(int sign, long m, int beta, long n) {
    if (n < 0) throw std::domain_error("q_shifted_factorial: negative length");
    LaurentPoly p(1);
    Rational s(sign);
    for (long j = 0; j < n; ++j)
        p *= LaurentPoly(1) - LaurentPoly::monomial(s, m + beta * j);
    return p;
}

RationalFunction q_shifted_factorial_gen(int sign, long m, int beta, long n) {
    if (n >= 0) return RationalFunction(q_shifted_factorial(sign, m, beta, n));
    LaurentPoly p(1);
    Rational s(sign);
    for (long j = 1; j <= -n; ++j)
        p *= LaurentPoly(1) - LaurentPoly::monomial(s, m - beta * j);
    return RationalFunction(LaurentPoly(1), p);
}

LaurentPoly q_binomial(long n, long m, int beta) {
    if (m < 0 || m > n) return LaurentPoly();
    if (m > n - m) m = n - m;
    LaurentPoly num = q_shifted_factorial(+1, beta * (n - m + 1), beta, m);
    LaurentPoly den = q_shifted_factorial(+1, beta, beta, m);
    return laurent_div_exact(num, den);
}

LaurentPoly q_factorial(long n, int beta) {
    LaurentPoly p(1);
    for (long j = 1; j <= n; ++j) {
        LaurentPoly br;
        for (long i = 0; i < j; ++i) br.add_term(beta * i, Rational(1));
        p *= br;  // [j] = 1 + Q + ... + Q^(j-1)
    }
    return p;
}

namespace {

// Shared pairing engine. Bracket and leftover-gamma evaluation are supplied by
// the caller; V needs ring ops and an is_zero test.
template <typename V, typename BracketFn, typename GammaFn>
V gamma_pairing(const std::map<std::pair<int, int>, std::pair<std::vector<Rational>, std::vector<Rational>>>& groups,
                V one, BracketFn bracket, GammaFn gamma_whole) {
    V val = one;
    bool zero = false;
    for (auto& [key, nd] : groups) {
        auto [beta, frac] = key;
        auto ns = nd.first;
        auto ds = nd.second;
        if (frac != 0 && ns.size() != ds.size())
            throw std::domain_error("gamma_ratio_product: transcendental residue (unbalanced fractional group)");
        std::sort(ns.begin(), ns.end());
        std::sort(ds.begin(), ds.end());
        size_t npair = std::min(ns.size(), ds.size());
        for (size_t idx = 0; idx < npair; ++idx) {
            Rational a = ns[idx], c = ds[idx];
            bool inv = a < c;
            if (inv) std::swap(a, c);
            for (Rational x = c; x < a; x += Rational(1)) {
                V b = bracket(x, beta);
                if (b.is_zero()) {
                    if (inv) throw std::domain_error("gamma_ratio_product: pole (zero bracket in denominator)");
                    zero = true;
                    continue;
                }
                if (inv) val /= b; else val *= b;
            }
        }
        // Integer-argument leftovers: whole Gamma values.
        for (size_t idx = npair; idx < ns.size(); ++idx) {
            if (ns[idx] <= Rational(0))
                throw std::domain_error("gamma_ratio_product: pole (Gamma at nonpositive argument)");
            val *= gamma_whole(ns[idx], beta);
        }
        for (size_t idx = npair; idx < ds.size(); ++idx) {
            if (ds[idx] <= Rational(0)) { zero = true; continue; }  // 1/Gamma(pole) = 0
            val /= gamma_whole(ds[idx], beta);
        }
    }
    if (zero) return V(0);
    return val;
}

std::map<std::pair<int, int>, std::pair<std::vector<Rational>, std::vector<Rational>>>
group_factors(const std::vector<GammaFactor>& nums, const std::vector<GammaFactor>& dens) {
    std::map<std::pair<int, int>, std::pair<std::vector<Rational>, std::vector<Rational>>> g;
    auto key = [](const GammaFactor& f) {
        int frac = f.arg.is_integer() ? 0 : 1;
        return std::make_pair(f.beta, frac);
    };
    for (auto& f : nums) g[key(f)].first.push_back(f.arg.to_rational());
    for (auto& f : dens) g[key(f)].second.push_back(f.arg.to_rational());
    return g;
}

} // namespace

RationalFunction gamma_ratio_product(const std::vector<GammaFactor>& nums,
                                     const std::vector<GammaFactor>& dens) {
    auto groups = group_factors(nums, dens);
    auto bracket = [](const Rational& x, int beta) {
        // [x]_{t^beta}; x integral or half-integral, beta*x must be integral.
        HalfInt h = HalfInt::from_twice(x.num() * (2 / x.den()));
        return q_bracket(h, beta);
    };
    auto gamma_whole = [](const Rational& x, int beta) {
        long xi = static_cast<long>(x.num().convert_to<long long>());
        // (1-Q)^(1-x) (Q;Q)_{x-1}  ==  [x-1]!_Q
        return RationalFunction(q_factorial(xi - 1, beta));
    };
    return gamma_pairing(groups, RationalFunction(Rational(1)), bracket, gamma_whole);
}

Rational gamma_ratio_rational(const std::vector<HalfInt>& nums, const std::vector<HalfInt>& dens) {
    std::vector<GammaFactor> nf, df;
    for (auto& a : nums) nf.push_back({2, a});
    for (auto& a : dens) df.push_back({2, a});
    auto groups = group_factors(nf, df);
    auto bracket = [](const Rational& x, int) { return x; };
    auto gamma_whole = [](const Rational& x, int) {
        long xi = static_cast<long>(x.num().convert_to<long long>());
        return Rational(big_factorial(xi - 1));
    };
    return gamma_pairing(groups, Rational(1), bracket, gamma_whole);
}

double SqrtPiNumber::to_double() const {
    return coeff.to_double() * std::pow(std::numbers::pi, pi_half_power / 2.0) *
           std::pow(2.0, two_half_power / 2.0);
}

std::string SqrtPiNumber::str() const {
    std::string s = coeff.str();
    if (two_half_power != 0) s += " * 2^(" + std::to_string(two_half_power) + "/2)";
    if (pi_half_power != 0) s += " * pi^(" + std::to_string(pi_half_power) + "/2)";
    return s;
}

SqrtPiNumber gamma_halfint(const HalfInt& x) {
    if (x.sgn() <= 0) throw std::domain_error("gamma_halfint: argument must be positive");
    if (x.is_integer()) return SqrtPiNumber(Rational(big_factorial(x.to_long() - 1)));
    // x = m + 1/2 with m >= 0
    long m = (x - HalfInt::half()).to_long();
    Rational c(big_factorial(2 * m), big_pow(BigInt(4), m) * big_factorial(m));
    return SqrtPiNumber(c, /*pi_half=*/1);
}

} // namespace mmsum
