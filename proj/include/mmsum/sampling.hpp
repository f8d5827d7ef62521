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

#include <random>

#include "mmsum/rational.hpp"

namespace mmsum {

// Small-height random rationals with rejection of degenerate tuples; the
// retry limit is part of the contract (bad points have measure zero).
inline Rational random_rational(std::mt19937_64& rng, int lo = 2, int hi = 9, int den_hi = 4) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, den_hi);
    return Rational(num(rng), den(rng));
}

inline std::vector<Rational> random_generic_y(std::mt19937_64& rng, size_t n, int retries = 5) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<Rational> y;
        for (size_t i = 0; i < n; ++i) y.push_back(random_rational(rng));
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            if (y[i].pow(2) == Rational(1)) ok = false;
            for (size_t j = i + 1; j < n && ok; ++j) {
                if (y[i].pow(2) == y[j].pow(2)) ok = false;
                if (y[i].pow(2) * y[j].pow(2) == Rational(1)) ok = false;
            }
        }
        if (ok) return y;
    }
    throw std::runtime_error("random_generic_y: retry limit exceeded");
}

} // namespace mmsum
