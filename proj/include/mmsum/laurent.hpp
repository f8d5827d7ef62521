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

#include <map>
#include <string>
#include <vector>

#include "mmsum/rational.hpp"

namespace mmsum {

// Laurent polynomial in the global variable t = q^(1/2), exact rational
// coefficients. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (!c.is_zero()) coef_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, long exp) {
        LaurentPoly p;
        if (!c.is_zero()) p.coef_[exp] = c;
        return p;
    }
    static LaurentPoly t_power(long exp) { return monomial(Rational(1), exp); }

    bool is_zero() const { return coef_.empty(); }
    bool is_one() const {
        return coef_.size() == 1 && coef_.begin()->first == 0 && coef_.begin()->second == Rational(1);
    }
    long low_exp() const { return coef_.begin()->first; }    // requires nonzero
    long high_exp() const { return coef_.rbegin()->first; }  // requires nonzero
    size_t term_count() const { return coef_.size(); }
    const std::map<long, Rational>& terms() const { return coef_; }

    Rational coeff(long exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Rational(0) : it->second;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (auto& [e, c] : a.coef_) r.coef_[e] = -c;
        return r;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.coef_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.coef_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.coef_)
            for (auto& [eb, cb] : b.coef_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    void add_term(long exp, const Rational& c) {
        if (c.is_zero()) return;
        auto it = coef_.find(exp);
        if (it == coef_.end()) {
            coef_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coef_.erase(it);
        }
    }

    LaurentPoly shifted(long dexp) const {
        LaurentPoly r;
        for (auto& [e, c] : coef_) r.coef_[e + dexp] = c;
        return r;
    }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (auto& [e, cc] : coef_) r.coef_[e] = cc * c;
        return r;
    }

    // Formal substitution t -> -t.
    LaurentPoly negate_var() const {
        LaurentPoly r;
        for (auto& [e, c] : coef_) r.coef_[e] = (e % 2 != 0) ? -c : c;
        return r;
    }

    Rational eval(const Rational& t0) const {
        if (coef_.empty()) return Rational(0);
        if (t0.is_zero()) {
            if (low_exp() < 0) throw std::domain_error("LaurentPoly: pole at t=0");
            return coeff(0);
        }
        // Horner over the nonneg part plus direct powers for the principal part.
        Rational acc(0);
        long prev = 0;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            if (first) {
                acc = it->second;
                prev = it->first;
                first = false;
                continue;
            }
            acc = acc * t0.pow(prev - it->first) + it->second;
            prev = it->first;
        }
        return acc * t0.pow(prev);
    }

    std::string str() const {
        if (coef_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : coef_) {
            if (!s.empty()) s += " + ";
            if (e == 0) {
                s += c.str();
            } else {
                s += c.str() + "*t^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<long, Rational> coef_;
};

// --- dense helpers used by the polynomial gcd ---

// Content-normalized Euclidean gcd of two Laurent polynomials, up to units
// (monomial times rational). Result is a primitive ordinary polynomial with
// lowest exponent 0 and positive integer coefficients content 1.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws when the division is not exact.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace mmsum
