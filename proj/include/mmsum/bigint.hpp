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

#include <boost/multiprecision/cpp_int.hpp>

namespace mmsum {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& b, long e) {
    BigInt r = 1, x = b;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= x;
        if (k > 1) x *= x;
    }
    return r;
}

inline BigInt big_factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace mmsum
