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

#include <stdexcept>
#include <string>
#include <ostream>

#include "mmsum/bigint.hpp"

namespace mmsum {

// Exact rational number. Always in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(const BigInt& v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Integer exponent; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) {
            if (num_ == 0) throw std::domain_error("Rational: 0^negative");
            Rational inv;
            inv.num_ = den_;
            inv.den_ = num_;
            if (inv.den_ < 0) { inv.num_ = -inv.num_; inv.den_ = -inv.den_; }
            return inv.pow(-e);
        }
        Rational r;
        r.num_ = big_pow(num_, e);
        r.den_ = big_pow(den_, e);
        return r;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "p" or "p/q".
    static Rational parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    BigInt num_;
    BigInt den_;

    void canonicalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) { num_ /= g; den_ /= g; }
    }
};

} // namespace mmsum
