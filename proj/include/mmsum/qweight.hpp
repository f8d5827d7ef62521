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
#include <map>
#include <optional>

#include "mmsum/qfun.hpp"

namespace mmsum {

// A value that is either a rational function of t (symbolic mode) or an exact
// rational (point mode). Both sides of an identity are computed in the same
// mode and compared with exact equality.
class QV {
public:
    QV() : sym_(false), num_(0) {}
    explicit QV(RationalFunction f) : sym_(true), num_(0), rf_(std::move(f)) {}
    explicit QV(Rational v) : sym_(false), num_(std::move(v)) {}

    bool symbolic() const { return sym_; }
    bool is_zero() const { return sym_ ? rf_.is_zero() : num_.is_zero(); }
    const RationalFunction& rf() const { return rf_; }
    const Rational& rat() const { return num_; }

    friend QV operator+(const QV& a, const QV& b) { return a.bin(b, 0); }
    friend QV operator-(const QV& a, const QV& b) { return a.bin(b, 1); }
    friend QV operator*(const QV& a, const QV& b) { return a.bin(b, 2); }
    friend QV operator/(const QV& a, const QV& b) { return a.bin(b, 3); }
    QV& operator+=(const QV& b) { return *this = *this + b; }
    QV& operator-=(const QV& b) { return *this = *this - b; }
    QV& operator*=(const QV& b) { return *this = *this * b; }
    QV& operator/=(const QV& b) { return *this = *this / b; }
    QV pow(long e) const {
        if (sym_) return QV(rf_.pow(e));
        return QV(num_.pow(e));
    }

    friend bool operator==(const QV& a, const QV& b) {
        if (a.sym_ != b.sym_) return false;
        return a.sym_ ? a.rf_ == b.rf_ : a.num_ == b.num_;
    }
    friend bool operator!=(const QV& a, const QV& b) { return !(a == b); }

    std::string str() const { return sym_ ? rf_.str() : num_.str(); }

private:
    bool sym_;
    Rational num_;
    RationalFunction rf_;

    QV bin(const QV& b, int op) const {
        if (sym_ != b.sym_) throw std::logic_error("QV: mixed symbolic/point arithmetic");
        QV r;
        r.sym_ = sym_;
        if (sym_) {
            switch (op) {
                case 0: r.rf_ = rf_ + b.rf_; break;
                case 1: r.rf_ = rf_ - b.rf_; break;
                case 2: r.rf_ = rf_ * b.rf_; break;
                default: r.rf_ = rf_ / b.rf_; break;
            }
        } else {
            switch (op) {
                case 0: r.num_ = num_ + b.num_; break;
                case 1: r.num_ = num_ - b.num_; break;
                case 2: r.num_ = num_ * b.num_; break;
                default: r.num_ = num_ / b.num_; break;
            }
        }
        return r;
    }
};

// Evaluation environment: symbolic when t0 is absent, otherwise exact
// evaluation at the given rational t0. All t-exponents must be integers;
// a fractional exponent reports a parity violation instead of guessing.
class QEnv {
public:
    QEnv() = default;                                // symbolic
    explicit QEnv(Rational t0) : t0_(std::move(t0)) {}

    bool symbolic() const { return !t0_.has_value(); }
    const std::optional<Rational>& t0() const { return t0_; }

    QV zero() const { return rat(Rational(0)); }
    QV one() const { return rat(Rational(1)); }
    QV rat(const Rational& c) const {
        if (symbolic()) return QV(RationalFunction(c));
        return QV(c);
    }
    QV tpow(const Rational& texp) const;
    QV binomial_poly(const LaurentPoly& p) const;    // inject a cached polynomial
    QV bracket(const HalfInt& k, int beta) const;
    QV abs_bracket(const HalfInt& k, int beta) const;
    // (sign t^m ; t^beta)_len with the negative-length extension
    QV qpoch(int sign, long m, int beta, long len) const;
    // Gaussian binomial, base q; K may be half-integral (then 0)
    QV qbin(long N, const HalfInt& K) const;
    QV qfactorial(long n, int beta) const;
    QV one_plus_tpow(long e) const;
    QV one_minus_tpow(long e) const;
    QV gamma_ratio(const std::vector<GammaFactor>& nums, const std::vector<GammaFactor>& dens) const;

private:
    std::optional<Rational> t0_;
    mutable std::map<std::pair<long, long>, LaurentPoly> qbin_cache_;
};

// Summand description of a q-deformed left-hand side: per-index monomial
// t-exponent, pairwise bracket factors, per-index bracket factors, binomial
// boxes, sign factor and the symmetry reduction its proof licenses.
struct QWeightSpec {
    enum class Pair { None, AbsDiff, AbsDiffSum, SqDiff, SqDiffSum };
    enum class Index { None, AbsQ, SqQ, HalfSum, AbsQ2, AbsQ2Q, AbsQ2QQ };
    enum class Reduction { Naive, Perm, HyperOct };

    Pair pair = Pair::None;
    Index index = Index::None;
    // t-exponent of the per-index monomial as a function of (k, i), 1-based i
    std::function<Rational(const HalfInt& k, int i)> texp;
    Rational norm_texp = Rational(0);  // identity-level normalizer, applied once
    bool binom_m = false;
    bool binom_p = false;
    bool sign_factor = false;
    Reduction reduction = Reduction::Naive;
};

// Evaluates the multi-sum over k in [-n,n]^r (k half-integers when n is).
// Reduced enumerations are used exactly as licensed by `w.reduction`; point
// mode parallelizes over the outer index.
QV q_sum_eval(const QEnv& env, const QWeightSpec& w, int r, const HalfInt& n,
              const HalfInt& m = HalfInt(0), const HalfInt& p = HalfInt(0));

// Reference path: full enumeration, no reduction.
QV q_sum_eval_naive(const QEnv& env, const QWeightSpec& w, int r, const HalfInt& n,
                    const HalfInt& m = HalfInt(0), const HalfInt& p = HalfInt(0));

} // namespace mmsum
