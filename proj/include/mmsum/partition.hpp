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

#include <functional>
#include <vector>

#include "mmsum/halfint.hpp"

namespace mmsum {

// Partition, half-partition or D-type partition: weakly decreasing parts, all
// integers or all half-integers (stored doubled); the last part may be
// negative in the D-type case.
class GPartition {
public:
    GPartition() = default;
    explicit GPartition(std::vector<HalfInt> parts) : parts_(std::move(parts)) { validate(); }
    static GPartition ints(std::initializer_list<long> v) {
        std::vector<HalfInt> p;
        for (long x : v) p.emplace_back(x);
        return GPartition(std::move(p));
    }
    static GPartition rectangle(const HalfInt& s, int n) {
        return GPartition(std::vector<HalfInt>(static_cast<size_t>(n), s));
    }

    size_t rows() const { return parts_.size(); }  // stored entries (zeros included)
    size_t length() const {                        // number of nonzero parts
        size_t l = 0;
        for (auto& p : parts_)
            if (!p.is_zero()) ++l;
        return l;
    }
    HalfInt part(size_t i) const { return i < parts_.size() ? parts_[i] : HalfInt(0); }
    const std::vector<HalfInt>& parts() const { return parts_; }

    bool all_integer() const {
        for (auto& p : parts_)
            if (!p.is_integer()) return false;
        return true;
    }
    bool is_plain_partition() const {  // weakly decreasing nonnegative integers
        return all_integer() && (parts_.empty() || parts_.back().sgn() >= 0);
    }

    Rational size() const {
        Rational s(0);
        for (auto& p : parts_) s += p.to_rational();
        return s;
    }
    // n(lambda) = sum (i-1) lambda_i
    Rational nstat() const {
        Rational s(0);
        long i = 0;
        for (auto& p : parts_) s += Rational(i++) * p.to_rational();
        return s;
    }

    // Conjugate of a plain partition, padded to `width` columns.
    GPartition conjugate(long width) const;

    bool fits_in(const HalfInt& r, int n) const {
        if (parts_.size() > static_cast<size_t>(n)) {
            for (size_t i = static_cast<size_t>(n); i < parts_.size(); ++i)
                if (!parts_[i].is_zero()) return false;
        }
        return parts_.empty() || parts_.front() <= r;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += parts_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<HalfInt> parts_;

    void validate() const {
        for (size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i - 1] < parts_[i]) throw std::domain_error("GPartition: not weakly decreasing");
            if (parts_[i - 1].is_integer() != parts_[i].is_integer())
                throw std::domain_error("GPartition: mixed integer/half-integer parts");
        }
        // D-type rule: only the last part may be negative, bounded by its neighbour
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i].sgn() < 0) throw std::domain_error("GPartition: interior negative part");
        if (parts_.size() >= 2 && parts_.back().sgn() < 0 &&
            parts_[parts_.size() - 2] < parts_.back().abs())
            throw std::domain_error("GPartition: last part violates the D-type rule");
    }
};

// All plain partitions contained in the box (r^n), in lexicographic order.
std::vector<GPartition> partitions_in_box(long r, int n);

} // namespace mmsum
