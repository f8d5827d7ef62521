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

#include "mmsum/laurent.hpp"

namespace mmsum {

// Ratio of Laurent polynomials in t, kept in canonical form: numerator and
// denominator share no polynomial factor, the denominator is an ordinary
// polynomial with lowest exponent 0, nonzero constant term and leading
// coefficient 1. Equality of canonical forms is the verification predicate.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(Rational(c)), den_(1) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(long e) const {
        if (e < 0) return RationalFunction(Rational(1)) / pow(-e);
        RationalFunction r(Rational(1)), x = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r *= x;
            if (k > 1) x *= x;
        }
        return r;
    }

    RationalFunction negate_var() const {
        RationalFunction r;
        r.num_ = num_.negate_var();
        r.den_ = den_.negate_var();
        r.normalize();
        return r;
    }

    // Exact evaluation at rational t0; throws on a pole.
    Rational eval(const Rational& t0) const {
        Rational d = den_.eval(t0);
        if (d.is_zero()) throw std::domain_error("RationalFunction: pole at t0=" + t0.str());
        return num_.eval(t0) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = laurent_div_exact(num_, g);
            den_ = laurent_div_exact(den_, g);
        }
        // Denominator unit: monomial shift to lowest exponent 0, then make the
        // leading coefficient 1.
        long lo = den_.low_exp();
        if (lo != 0) {
            den_ = den_.shifted(-lo);
            num_ = num_.shifted(-lo);
        }
        Rational lead = den_.coeff(den_.high_exp());
        if (lead != Rational(1)) {
            Rational inv = Rational(1) / lead;
            den_ = den_.scaled(inv);
            num_ = num_.scaled(inv);
        }
    }
};

} // namespace mmsum
