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

#include "mmsum/qfun.hpp"
#include "mmsum/sums.hpp"

namespace mmsum {

// Gaussian-measure moment of |Delta(x^alpha)|^(2 gamma) prod |x_i|^delta,
// exactly as c * 2^(j/2) * pi^(k/2). Supported shapes: (alpha, delta) with
// gamma in {1/2, 1} plus (1,1,1); others throw.
SqrtPiNumber mm_continuous(int alpha, const HalfInt& gamma, long delta, int r);

struct LimitReport {
    std::vector<double> scaled;   // scaled discrete values, one per n
    std::vector<double> rel_err;  // relative errors against the target
    double target = 0;
    bool decreasing = false;      // relative errors strictly decrease
    double final_rel_err = 0;
    bool pass = false;
};

// Checks that 2^(-2rn) (n/2)^(-alpha gamma binom(r,2) - delta r / 2) S_{r,n}
// approaches the continuous value along the given n's.
LimitReport limit_check(int alpha, const HalfInt& gamma, long delta, int r,
                        const std::vector<HalfInt>& ns, double tolerance);

} // namespace mmsum
