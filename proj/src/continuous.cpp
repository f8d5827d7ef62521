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

#include "mmsum/continuous.hpp"

#include <cmath>

namespace mmsum {

SqrtPiNumber mm_continuous(int alpha, const HalfInt& gamma, long delta, int r) {
    const HalfInt half = HalfInt::half();
    const bool g_half = gamma == half;
    const bool g_one = gamma == HalfInt(1);
    if (!g_half && !g_one) throw std::domain_error("mm_continuous: gamma must be 1/2 or 1");
    SqrtPiNumber v(Rational(1));
    if (alpha == 1 && delta == 0) {
        // prod Gamma(1 + i gamma) / Gamma(1 + gamma)
        for (int i = 1; i <= r; ++i)
            v = v * gamma_halfint(HalfInt(1) + i * gamma) / gamma_halfint(HalfInt(1) + gamma);
        return v;
    }
    if (alpha == 1 && delta == 1 && g_one) {
        // 2^(r^2/2) Gamma(1+r)/Gamma(1/2) prod Gamma(i)Gamma(1+i)/Gamma(1/2)
        //                                prod Gamma^2(1+i)/Gamma(1/2)
        v.two_half_power = static_cast<long>(r) * r;
        v.canonicalize();
        v = v * gamma_halfint(HalfInt(1 + r)) / gamma_halfint(half);
        for (int i = 1; i <= r / 2; ++i)
            v = v * gamma_halfint(HalfInt(i)) * gamma_halfint(HalfInt(1 + i)) / gamma_halfint(half);
        for (int i = 1; i <= (r + 1) / 2 - 1; ++i)
            v = v * gamma_halfint(HalfInt(1 + i)) * gamma_halfint(HalfInt(1 + i)) / gamma_halfint(half);
        return v;
    }
    if (alpha == 2) {
        // 2^(2 gamma binom(r,2) + delta r/2) prod Gamma(1+i gamma)/Gamma(1+gamma)
        //   * Gamma(1/2 + (i-1) gamma + delta/2) / Gamma(1/2)
        long pairs = static_cast<long>(r) * (r - 1) / 2;
        // exponent of 2 is 2 gamma binom(r,2) + delta r / 2, stored in halves
        v.two_half_power = 2 * gamma.twice_long() * pairs + delta * r;
        v.canonicalize();
        for (int i = 1; i <= r; ++i) {
            v = v * gamma_halfint(HalfInt(1) + i * gamma) / gamma_halfint(HalfInt(1) + gamma);
            v = v * gamma_halfint(half + (i - 1) * gamma + HalfInt::from_twice(delta)) / gamma_halfint(half);
        }
        return v;
    }
    throw std::domain_error("mm_continuous: unsupported (alpha, gamma, delta) combination");
}

LimitReport limit_check(int alpha, const HalfInt& gamma, long delta, int r,
                        const std::vector<HalfInt>& ns, double tolerance) {
    LimitReport rep;
    rep.target = mm_continuous(alpha, gamma, delta, r).to_double();
    int two_gamma = static_cast<int>(gamma.twice_long());
    for (auto& n : ns) {
        SumSpec s;
        s.alpha = alpha;
        s.two_gamma = two_gamma;
        s.delta = delta;
        s.r = r;
        s.n = n;
        double sum = discrete_mm_sum_exact(s).to_double();
        double nn = n.to_rational().to_double();
        double expo = alpha * (two_gamma / 2.0) * (static_cast<double>(r) * (r - 1) / 2.0) +
                      delta * r / 2.0;
        double scaled = sum * std::pow(2.0, -2.0 * r * nn) * std::pow(nn / 2.0, -expo);
        rep.scaled.push_back(scaled);
        rep.rel_err.push_back(std::abs(scaled - rep.target) / std::abs(rep.target));
    }
    rep.decreasing = true;
    for (size_t i = 1; i < rep.rel_err.size(); ++i)
        if (!(rep.rel_err[i] < rep.rel_err[i - 1] || rep.rel_err[i] == 0.0)) rep.decreasing = false;
    rep.final_rel_err = rep.rel_err.empty() ? 1.0 : rep.rel_err.back();
    rep.pass = rep.decreasing && rep.final_rel_err < tolerance;
    return rep;
}

} // namespace mmsum
