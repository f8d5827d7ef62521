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

#include "mmsum/rational.hpp"

namespace mmsum {

// An exact integer or half-integer, stored as twice its value.
class HalfInt {
public:
    HalfInt() : twice_(0) {}
    HalfInt(long v) : twice_(2 * BigInt(v)) {}
    HalfInt(int v) : twice_(2 * BigInt(v)) {}
    static HalfInt from_twice(BigInt t) {
        HalfInt h;
        h.twice_ = std::move(t);
        return h;
    }
    static HalfInt half() { return from_twice(1); }

    const BigInt& twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    bool is_zero() const { return twice_ == 0; }
    int sgn() const { return twice_ == 0 ? 0 : (twice_ < 0 ? -1 : 1); }

    // Exact long value; throws when not an integer.
    long to_long() const {
        if (!is_integer()) throw std::domain_error("HalfInt: not an integer: " + str());
        return static_cast<long>(BigInt(twice_ / 2).convert_to<long long>());
    }
    long twice_long() const { return static_cast<long>(twice_.convert_to<long long>()); }

    HalfInt floor() const {
        if (is_integer()) return *this;
        return from_twice(twice_ - 1);
    }
    HalfInt ceil() const {
        if (is_integer()) return *this;
        return from_twice(twice_ + 1);
    }

    Rational to_rational() const { return Rational(twice_, BigInt(2)); }

    friend HalfInt operator-(const HalfInt& a) { return from_twice(-a.twice_); }
    friend HalfInt operator+(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice_ + b.twice_); }
    friend HalfInt operator-(const HalfInt& a, const HalfInt& b) { return from_twice(a.twice_ - b.twice_); }
    friend HalfInt operator*(long a, const HalfInt& b) { return from_twice(a * b.twice_); }
    // Product of two half-integers is a quarter-integer in general; only allow
    // when the result stays representable.
    friend HalfInt operator*(const HalfInt& a, const HalfInt& b) {
        BigInt t = a.twice_ * b.twice_;
        if (t % 2 != 0) throw std::domain_error("HalfInt: product is a quarter-integer");
        return from_twice(t / 2);
    }
    HalfInt& operator+=(const HalfInt& b) { twice_ += b.twice_; return *this; }
    HalfInt& operator-=(const HalfInt& b) { twice_ -= b.twice_; return *this; }

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice_ != b.twice_; }
    friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.twice_ < b.twice_; }
    friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.twice_ > b.twice_; }
    friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.twice_ <= b.twice_; }
    friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.twice_ >= b.twice_; }

    HalfInt abs() const { return twice_ < 0 ? -*this : *this; }

    std::string str() const {
        if (is_integer()) return BigInt(twice_ / 2).str();
        return twice_.str() + "/2";
    }

    // Parses "3", "-2", "3/2", "-1/2".
    static HalfInt parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return from_twice(2 * BigInt(s));
        BigInt num(s.substr(0, pos)), den(s.substr(pos + 1));
        if (den == 2) return from_twice(num);
        if (den == 1) return from_twice(2 * num);
        throw std::domain_error("HalfInt: denominator must be 1 or 2: " + s);
    }

    friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) {
        return os << h.str();
    }

private:
    BigInt twice_;
};

} // namespace mmsum
