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

#include "mmsum/qweight.hpp"

#include <vector>

namespace mmsum {

namespace {

long as_int_exp(const Rational& texp) {
    if (!texp.is_integer())
        throw std::domain_error("non-integral t-exponent " + texp.str() + " (parity violation)");
    return static_cast<long>(texp.num().convert_to<long long>());
}

} // namespace

QV QEnv::tpow(const Rational& texp) const {
    long e = as_int_exp(texp);
    if (symbolic()) return QV(RationalFunction(LaurentPoly::t_power(e)));
    return QV(t0_->pow(e));
}

QV QEnv::binomial_poly(const LaurentPoly& p) const {
    if (symbolic()) return QV(RationalFunction(p));
    return QV(p.eval(*t0_));
}

QV QEnv::bracket(const HalfInt& k, int beta) const {
    if (symbolic()) return QV(q_bracket(k, beta));
    // (1 - t0^(beta k)) / (1 - t0^beta)
    Rational e = k.to_rational() * Rational(beta);
    long ee = as_int_exp(e);
    return QV((Rational(1) - t0_->pow(ee)) / (Rational(1) - t0_->pow(beta)));
}

QV QEnv::abs_bracket(const HalfInt& k, int beta) const {
    if (k.is_zero()) return zero();
    QV b = bracket(k, beta);
    return k.sgn() < 0 ? zero() - b : b;
}

QV QEnv::qpoch(int sign, long m, int beta, long len) const {
    if (symbolic()) return QV(q_shifted_factorial_gen(sign, m, beta, len));
    Rational v(1), s(sign);
    if (len >= 0) {
        for (long j = 0; j < len; ++j) v *= Rational(1) - s * t0_->pow(m + beta * j);
    } else {
        for (long j = 1; j <= -len; ++j) v /= Rational(1) - s * t0_->pow(m - beta * j);
    }
    return QV(v);
}

QV QEnv::qbin(long N, const HalfInt& K) const {
    if (!K.is_integer()) return zero();
    long k = K.to_long();
    if (k < 0 || k > N) return zero();
    if (symbolic()) {
        auto it = qbin_cache_.find({N, k});
        if (it == qbin_cache_.end())
            it = qbin_cache_.emplace(std::make_pair(N, k), q_binomial(N, k, 2)).first;
        return QV(RationalFunction(it->second));
    }
    Rational num(1), den(1), q = t0_->pow(2);
    if (k > N - k) k = N - k;
    for (long j = 0; j < k; ++j) {
        num *= Rational(1) - q.pow(N - j);
        den *= Rational(1) - q.pow(j + 1);
    }
    return QV(num / den);
}

QV QEnv::qfactorial(long n, int beta) const {
    if (symbolic()) return QV(RationalFunction(q_factorial(n, beta)));
    Rational v(1), Q = t0_->pow(beta);
    for (long j = 1; j <= n; ++j) {
        Rational br(0);
        for (long i = 0; i < j; ++i) br += Q.pow(i);
        v *= br;
    }
    return QV(v);
}

QV QEnv::one_plus_tpow(long e) const {
    if (symbolic()) return QV(RationalFunction(LaurentPoly(1) + LaurentPoly::t_power(e)));
    return QV(Rational(1) + t0_->pow(e));
}

QV QEnv::one_minus_tpow(long e) const {
    if (symbolic()) return QV(RationalFunction(LaurentPoly(1) - LaurentPoly::t_power(e)));
    return QV(Rational(1) - t0_->pow(e));
}

QV QEnv::gamma_ratio(const std::vector<GammaFactor>& nums, const std::vector<GammaFactor>& dens) const {
    RationalFunction v = gamma_ratio_product(nums, dens);
    if (symbolic()) return QV(v);
    return QV(v.eval(*t0_));
}

namespace {

struct LhsCtx {
    const QEnv& env;
    const QWeightSpec& w;
    int r;
    HalfInt n, m, p;
    long two_n, two_m, two_p;
    std::vector<QV> binom_n, binom_mv, binom_pv;  // indexed by (twice_k + 2n)/2 etc.

    LhsCtx(const QEnv& e, const QWeightSpec& ws, int rr, const HalfInt& nn, const HalfInt& mm,
           const HalfInt& pp)
        : env(e), w(ws), r(rr), n(nn), m(mm), p(pp) {
        two_n = n.twice_long();
        two_m = m.twice_long();
        two_p = p.twice_long();
        for (long tk = -two_n; tk <= two_n; tk += 2) {
            HalfInt k = HalfInt::from_twice(tk);
            binom_n.push_back(env.qbin(two_n, n + k));
            if (w.binom_m) binom_mv.push_back(env.qbin(two_m, m + k));
            if (w.binom_p) binom_pv.push_back(env.qbin(two_p, p + k));
        }
    }

    size_t slot(long tk) const { return static_cast<size_t>((tk + two_n) / 2); }

    // Per-index factor for k at position i (1-based); the monomial exponent is
    // accumulated by the caller (only the summand total need be integral).
    QV index_factor(const HalfInt& k, int i) const {
        (void)i;
        QV v = env.one();
        switch (w.index) {
            case QWeightSpec::Index::None: break;
            case QWeightSpec::Index::AbsQ: v *= env.abs_bracket(k, 2); break;
            case QWeightSpec::Index::SqQ: v *= env.bracket(k, 2).pow(2); break;
            case QWeightSpec::Index::HalfSum: {
                Rational e = k.to_rational() * Rational(2);  // t-exponent of q^k
                v *= env.one_plus_tpow(as_int_exp(e)) / env.one_plus_tpow(2);
                break;
            }
            case QWeightSpec::Index::AbsQ2: v *= env.abs_bracket(k, 4); break;
            case QWeightSpec::Index::AbsQ2Q: {
                // both bracket factors carry sign(k), so their product is the
                // absolute value already
                if (k.is_zero()) { v = env.zero(); break; }
                v *= env.bracket(k, 4) * env.bracket(k, 2);
                break;
            }
            case QWeightSpec::Index::AbsQ2QQ: {
                QV prod = env.bracket(k, 4) * env.bracket(k, 2).pow(2);
                v *= (k.sgn() < 0) ? env.zero() - prod : prod;
                if (k.is_zero()) v = env.zero();
                break;
            }
        }
        if (w.sign_factor) {
            if (!k.is_integer()) throw std::domain_error("(-1)^k undefined for half-integer k");
            if (k.to_long() % 2 != 0) v = env.zero() - v;
        }
        const LhsCtx& self = *this;
        long tk = k.twice_long();
        v *= self.binom_n[self.slot(tk)];
        if (w.binom_m) v *= self.binom_mv[self.slot(tk)];
        if (w.binom_p) v *= self.binom_pv[self.slot(tk)];
        return v;
    }

    QV pair_factor(const HalfInt& ki, const HalfInt& kj) const {
        switch (w.pair) {
            case QWeightSpec::Pair::None: return env.one();
            case QWeightSpec::Pair::AbsDiff: return env.abs_bracket(ki - kj, 2);
            case QWeightSpec::Pair::AbsDiffSum:
                return env.abs_bracket(ki - kj, 2) * env.abs_bracket(ki + kj, 2);
            case QWeightSpec::Pair::SqDiff: return env.bracket(kj - ki, 2).pow(2);
            case QWeightSpec::Pair::SqDiffSum:
                return env.bracket(kj - ki, 2).pow(2) * env.bracket(ki + kj, 2).pow(2);
        }
        return env.one();
    }

    QV summand(const std::vector<long>& tk) const {
        QV v = env.one();
        for (size_t i = 0; i < tk.size() && !v.is_zero(); ++i) {
            for (size_t j = i + 1; j < tk.size(); ++j) {
                v *= pair_factor(HalfInt::from_twice(tk[i]), HalfInt::from_twice(tk[j]));
                if (v.is_zero()) break;
            }
        }
        if (v.is_zero()) return v;
        Rational exp = w.norm_texp;
        for (size_t i = 0; i < tk.size(); ++i) {
            HalfInt k = HalfInt::from_twice(tk[i]);
            exp += w.texp(k, static_cast<int>(i) + 1);
            v *= index_factor(k, static_cast<int>(i) + 1);
            if (v.is_zero()) return v;
        }
        return v * env.tpow(exp);  // asserts summand-level integrality
    }
};

QV sum_cone(const LhsCtx& c, std::vector<long>& tk, size_t d, long upper, long lo) {
    if (d == tk.size()) return c.summand(tk);
    QV acc = c.env.zero();
    for (long v = upper - 2; v >= lo; v -= 2) {
        tk[d] = v;
        acc += sum_cone(c, tk, d + 1, v, lo);
    }
    return acc;
}

} // namespace

QV q_sum_eval_naive(const QEnv& env, const QWeightSpec& w, int r, const HalfInt& n, const HalfInt& m,
                    const HalfInt& p) {
    LhsCtx c(env, w, r, n, m, p);
    std::vector<long> tk(static_cast<size_t>(r), -c.two_n);
    QV total = env.zero();
    if (n.sgn() < 0) return total;
    while (true) {
        total += c.summand(tk);
        int pos = r - 1;
        while (pos >= 0) {
            tk[static_cast<size_t>(pos)] += 2;
            if (tk[static_cast<size_t>(pos)] <= c.two_n) break;
            tk[static_cast<size_t>(pos)] = -c.two_n;
            --pos;
        }
        if (pos < 0) break;
    }
    return total;
}

QV q_sum_eval(const QEnv& env, const QWeightSpec& w, int r, const HalfInt& n, const HalfInt& m,
              const HalfInt& p) {
    if (w.reduction == QWeightSpec::Reduction::Naive) return q_sum_eval_naive(env, w, r, n, m, p);
    LhsCtx c(env, w, r, n, m, p);
    if (n.sgn() < 0) return env.zero();
    const bool hyper = w.reduction == QWeightSpec::Reduction::HyperOct;
    // HyperOct is licensed only for summands that vanish at k = 0, so the cone
    // starts at the smallest positive k.
    const long lo = hyper ? (n.is_integer() ? 2 : 1) : -c.two_n;
    std::vector<long> tops;
    for (long v = c.two_n; v >= lo; v -= 2) tops.push_back(v);

    QV total = env.zero();
    if (env.symbolic()) {
        std::vector<long> tk(static_cast<size_t>(r), 0);
        for (long top : tops) {
            tk[0] = top;
            total += sum_cone(c, tk, 1, top, lo);
        }
    } else {
        std::exception_ptr err;
#pragma omp parallel
        {
            QV local = env.zero();
#pragma omp for schedule(dynamic) nowait
            for (long ti = 0; ti < static_cast<long>(tops.size()); ++ti) {
                try {
                    std::vector<long> tk(static_cast<size_t>(r), 0);
                    tk[0] = tops[static_cast<size_t>(ti)];
                    local += sum_cone(c, tk, 1, tk[0], lo);
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
#pragma omp critical
            total += local;
        }
        if (err) std::rethrow_exception(err);
    }
    Rational mult(big_factorial(r));
    if (hyper) mult *= Rational(big_pow(BigInt(2), r));
    return total * env.rat(mult);
}

} // namespace mmsum
