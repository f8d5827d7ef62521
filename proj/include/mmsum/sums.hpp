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

#include <optional>

#include "mmsum/halfint.hpp"

namespace mmsum {

// The plain multi-sum: sum over k in [-n,n]^r of
//   |Delta(k^alpha)|^(2 gamma) * prod |k_i|^delta * (-1)^(k_i)[signed] * binom(2n, n+k_i),
// with k_i running over integers (half-integers when n is a half-integer).
struct SumSpec {
    int alpha = 2;        // 1 or 2
    int two_gamma = 1;    // 2*gamma > 0 for the cataloged sums
    long delta = 0;
    int r = 1;
    HalfInt n;
    bool is_signed = false;
    // Optional second binomial column binom(2m, m+k) per index.
    std::optional<HalfInt> m;
};

// OpenMP-parallel evaluator using the symmetry-reduced cone (S_r for alpha=1,
// the hyperoctahedral group for alpha=2). Falls back to full enumeration when
// the reduction is not licensed (2 gamma = 0).
Rational discrete_mm_sum_exact(const SumSpec& spec);

// Serial reference: full enumeration over [-n,n]^r, no reductions.
Rational discrete_mm_sum_naive(const SumSpec& spec);

// Integer-valued front end (every cataloged sum is an integer).
BigInt discrete_mm_sum(const SumSpec& spec);

// General-gamma variant: pairwise weight |(k_i-k_j)_gamma (k_j-k_i)_gamma|
// with Pochhammer symbols, times the binomials. gamma >= 0.
BigInt pochhammer_mm_sum(long gamma, int r, long n);
BigInt pochhammer_mm_sum_naive(long gamma, int r, long n);

} // namespace mmsum
