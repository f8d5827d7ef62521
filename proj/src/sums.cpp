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

#include "mmsum/sums.hpp"

#include <stdexcept>
#include <vector>

namespace mmsum {
namespace {

// All k-values are carried doubled (exact half-integer support); the summand
// is computed over doubled values and the final result is rescaled by the
// constant power of two this introduces.
struct Grid {
    std::vector<long> twice_k;            // -2n, -2n+2, ..., 2n
    std::vector<BigInt> binom;            // binom(2n, n+k) aligned with twice_k
    std::vector<BigInt> binom_m;          // binom(2m, m+k), when a second box is present
    long twice_n;

    explicit Grid(const HalfInt& n, const std::optional<HalfInt>& m) {
        twice_n = n.twice_long();
        for (long tk = -twice_n; tk <= twice_n; tk += 2) {
            twice_k.push_back(tk);
            binom.push_back(big_binomial(twice_n, (twice_n + tk) / 2));
            if (m) {
                long twice_m = m->twice_long();
                // m + k must be an integer for the box to contribute
                if ((twice_m + tk) % 2 != 0)
                    binom_m.push_back(0);
                else
                    binom_m.push_back(big_binomial(twice_m, (twice_m + tk) / 2));
            }
        }
    }
    const BigInt& binom_for(long tk) const { return binom[static_cast<size_t>((tk + twice_n) / 2)]; }
    const BigInt& binom_m_for(long tk) const { return binom_m[static_cast<size_t>((tk + twice_n) / 2)]; }
};

// Summand over doubled k-values: value * 2^(-scale_pow) is the true summand.
BigInt summand_scaled(const SumSpec& s, const std::vector<long>& tk, const Grid& g) {
    BigInt w = 1;
    for (size_t i = 0; i < tk.size() && w != 0; ++i) {
        for (size_t j = i + 1; j < tk.size(); ++j) {
            BigInt d;
            if (s.alpha == 1) {
                d = BigInt(tk[i]) - tk[j];
            } else {
                d = BigInt(tk[i]) * tk[i] - BigInt(tk[j]) * tk[j];
            }
            if (d < 0) d = -d;
            if (d == 0) { w = 0; break; }
            w *= big_pow(d, s.two_gamma);
        }
    }
    if (w == 0) return w;
    for (size_t i = 0; i < tk.size(); ++i) {
        long a = tk[i] < 0 ? -tk[i] : tk[i];
        if (s.delta > 0) {
            if (a == 0) return BigInt(0);
            w *= big_pow(BigInt(a), s.delta);
        }
        if (s.is_signed && ((tk[i] / 2) % 2 != 0)) w = -w;
        w *= g.binom_for(tk[i]);
        if (s.m) {
            w *= g.binom_m_for(tk[i]);
            if (w == 0) return w;
        }
    }
    return w;
}

long scale_pow(const SumSpec& s) {
    long pairs = static_cast<long>(s.r) * (s.r - 1) / 2;
    // alpha=1: doubled difference contributes 2^1 per bracket; alpha=2: squares
    // of doubled values contribute 2^2 per bracket.
    return s.alpha * s.two_gamma * pairs + s.delta * s.r;
}

void check_spec(const SumSpec& s) {
    if (s.alpha != 1 && s.alpha != 2) throw std::domain_error("SumSpec: alpha must be 1 or 2");
    if (s.r < 1) throw std::domain_error("SumSpec: r must be positive");
    if (s.n.sgn() < 0) throw std::domain_error("SumSpec: n must be nonnegative");
    if (s.is_signed && !s.n.is_integer())
        throw std::domain_error("SumSpec: signed sums are defined for integer summation ranges only");
}

Rational rescale(const SumSpec& s, const BigInt& total) {
    return Rational(total, big_pow(BigInt(2), scale_pow(s)));
}

} // namespace

Rational discrete_mm_sum_naive(const SumSpec& spec) {
    check_spec(spec);
    Grid g(spec.n, spec.m);
    std::vector<long> tk(static_cast<size_t>(spec.r), -g.twice_n);
    BigInt total = 0;
    while (true) {
        total += summand_scaled(spec, tk, g);
        int pos = spec.r - 1;
        while (pos >= 0) {
            tk[static_cast<size_t>(pos)] += 2;
            if (tk[static_cast<size_t>(pos)] <= g.twice_n) break;
            tk[static_cast<size_t>(pos)] = -g.twice_n;
            --pos;
        }
        if (pos < 0) break;
    }
    return rescale(spec, total);
}

namespace {

// Sum over strictly decreasing tails tk[d..r) with tk[d] < upper, down to min.
BigInt cone_sum(const SumSpec& s, const Grid& g, std::vector<long>& tk, size_t d, long upper, long lo,
                bool hyper) {
    if (d == tk.size()) {
        BigInt w = summand_scaled(s, tk, g);
        if (hyper) {
            int pos = 0;
            for (long v : tk)
                if (v > 0) ++pos;
            w <<= pos;  // 2^{#positive} orbit size under sign flips
        }
        return w;
    }
    BigInt acc = 0;
    for (long v = upper - 2; v >= lo; v -= 2) {
        tk[d] = v;
        acc += cone_sum(s, g, tk, d + 1, v, lo, hyper);
    }
    return acc;
}

} // namespace

Rational discrete_mm_sum_exact(const SumSpec& spec) {
    check_spec(spec);
    if (spec.two_gamma == 0) return discrete_mm_sum_naive(spec);
    Grid g(spec.n, spec.m);
    const long lo = spec.alpha == 2 ? (spec.delta > 0 ? (spec.n.is_integer() ? 2 : 1) : (spec.n.is_integer() ? 0 : 1))
                                    : -g.twice_n;
    const bool hyper = spec.alpha == 2;
    // Top-level values k_1, largest index of the decreasing cone.
    std::vector<long> tops;
    for (long v = g.twice_n; v >= lo; v -= 2) tops.push_back(v);

    BigInt total = 0;
#pragma omp parallel
    {
        BigInt local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long ti = 0; ti < static_cast<long>(tops.size()); ++ti) {
            std::vector<long> tk(static_cast<size_t>(spec.r), 0);
            tk[0] = tops[static_cast<size_t>(ti)];
            local += cone_sum(spec, g, tk, 1, tk[0], lo, hyper);
        }
#pragma omp critical
        total += local;
    }
    total *= big_factorial(spec.r);
    return rescale(spec, total);
}

BigInt discrete_mm_sum(const SumSpec& spec) {
    Rational v = discrete_mm_sum_exact(spec);
    if (!v.is_integer()) throw std::logic_error("discrete_mm_sum: non-integer total " + v.str());
    return v.num();
}

namespace {

BigInt poch_rising(long x, long m) {
    BigInt v = 1;
    for (long j = 0; j < m; ++j) v *= (x + j);
    return v;
}

BigInt poch_summand(long gamma, const std::vector<long>& k, const std::vector<BigInt>& binom, long n) {
    BigInt w = 1;
    for (size_t i = 0; i < k.size() && w != 0; ++i)
        for (size_t j = i + 1; j < k.size(); ++j) {
            BigInt p = poch_rising(k[i] - k[j], gamma) * poch_rising(k[j] - k[i], gamma);
            if (p == 0) { w = 0; break; }
            w *= (p < 0 ? -p : p);
        }
    if (w == 0) return w;
    for (long v : k) w *= binom[static_cast<size_t>(v + n)];
    return w;
}

} // namespace

BigInt pochhammer_mm_sum_naive(long gamma, int r, long n) {
    std::vector<BigInt> binom;
    for (long v = -n; v <= n; ++v) binom.push_back(big_binomial(2 * n, n + v));
    std::vector<long> k(static_cast<size_t>(r), -n);
    BigInt total = 0;
    while (true) {
        total += poch_summand(gamma, k, binom, n);
        int pos = r - 1;
        while (pos >= 0) {
            if (++k[static_cast<size_t>(pos)] <= n) break;
            k[static_cast<size_t>(pos)] = -n;
            --pos;
        }
        if (pos < 0) break;
    }
    return total;
}

namespace {

BigInt poch_cone(long gamma, std::vector<long>& k, size_t d, long upper, long n,
                 const std::vector<BigInt>& binom) {
    if (d == k.size()) return poch_summand(gamma, k, binom, n);
    BigInt acc = 0;
    for (long v = upper - 1; v >= -n; --v) {
        k[d] = v;
        acc += poch_cone(gamma, k, d + 1, v, n, binom);
    }
    return acc;
}

} // namespace

BigInt pochhammer_mm_sum(long gamma, int r, long n) {
    if (gamma == 0) return pochhammer_mm_sum_naive(gamma, r, n);
    std::vector<BigInt> binom;
    for (long v = -n; v <= n; ++v) binom.push_back(big_binomial(2 * n, n + v));
    BigInt total = 0;
#pragma omp parallel
    {
        BigInt local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long top = -n; top <= n; ++top) {
            std::vector<long> k(static_cast<size_t>(r), 0);
            k[0] = top;
            local += (r == 1) ? poch_summand(gamma, k, binom, n) : poch_cone(gamma, k, 1, top, n, binom);
        }
#pragma omp critical
        total += local;
    }
    return total * big_factorial(r);
}

} // namespace mmsum
