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

#include "mmsum/laurent.hpp"

#include <algorithm>

namespace mmsum {
namespace {

// Dense integer polynomial, index = exponent, primitive (content 1).
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Strips the monomial unit and clears denominators; result is primitive with
// nonzero constant term.
ZPoly to_primitive(const LaurentPoly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    long lo = p.low_exp();
    BigInt lcm = 1;
    for (auto& [e, c] : p.terms()) lcm = lcm / big_gcd(lcm, c.den()) * c.den();
    out.assign(static_cast<size_t>(p.high_exp() - lo + 1), BigInt(0));
    for (auto& [e, c] : p.terms()) out[static_cast<size_t>(e - lo)] = c.num() * (lcm / c.den());
    BigInt content = 0;
    for (auto& c : out) content = big_gcd(content, c < 0 ? BigInt(-c) : c);
    if (content > 1)
        for (auto& c : out) c /= content;
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

LaurentPoly from_primitive(const ZPoly& p) {
    LaurentPoly out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.add_term(static_cast<long>(i), Rational(p[i]));
    return out;
}

void make_primitive(ZPoly& p) {
    trim(p);
    BigInt content = 0;
    for (auto& c : p) content = big_gcd(content, c < 0 ? BigInt(-c) : c);
    if (content > 1)
        for (auto& c : p) c /= content;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

// Pseudo-remainder of a by b (deg a >= deg b > 0), made primitive.
ZPoly prem(ZPoly a, const ZPoly& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim(a);
        make_primitive(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero() ? LaurentPoly() : from_primitive(to_primitive(b));
    if (b.is_zero()) return from_primitive(to_primitive(a));
    ZPoly u = to_primitive(a), v = to_primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = prem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return from_primitive(u);
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (a.is_zero()) return LaurentPoly();
    // Work with ordinary polynomials; remember the monomial offset.
    long offset = a.low_exp() - b.low_exp();
    LaurentPoly num = a.shifted(-a.low_exp());
    LaurentPoly den = b.shifted(-b.low_exp());
    LaurentPoly quot;
    while (!num.is_zero()) {
        if (num.high_exp() < den.high_exp()) throw std::domain_error("LaurentPoly: inexact division");
        long de = num.high_exp() - den.high_exp();
        Rational dc = num.coeff(num.high_exp()) / den.coeff(den.high_exp());
        LaurentPoly term = LaurentPoly::monomial(dc, de);
        quot += term;
        num -= term * den;
    }
    return quot.shifted(offset);
}

} // namespace mmsum
