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

#include "mmsum/catalog.hpp"

#include <chrono>
#include <map>
#include <sstream>

namespace mmsum {

namespace {

using Par = IdentityDescriptor::Parity;
using Red = QWeightSpec::Reduction;

Rational RQ(long a, long b = 1) { return Rational(a, b); }

long C2(long x) { return x * (x - 1) / 2; }
long C3(long x) { return x * (x - 1) * (x - 2) / 6; }

Rational rfact(long r) { return Rational(big_factorial(r)); }

Rational pow2(long e) {
    if (e >= 0) return Rational(big_pow(BigInt(2), e));
    return Rational(BigInt(1), big_pow(BigInt(2), -e));
}

long as_long(const Rational& x) {
    if (!x.is_integer()) throw std::domain_error("expected integer, got " + x.str());
    return static_cast<long>(x.num().convert_to<long long>());
}

// ---- small builders for gamma-factor lists ----

struct GammaList {
    std::vector<GammaFactor> nums, dens;
    GammaList& num(int beta, const HalfInt& a) { nums.push_back({beta, a}); return *this; }
    GammaList& den(int beta, const HalfInt& a) { dens.push_back({beta, a}); return *this; }
    QV eval(const QEnv& e) const { return e.gamma_ratio(nums, dens); }
};

struct ClassicalList {
    std::vector<HalfInt> nums, dens;
    ClassicalList& num(const HalfInt& a) { nums.push_back(a); return *this; }
    ClassicalList& den(const HalfInt& a) { dens.push_back(a); return *this; }
    Rational eval() const { return gamma_ratio_rational(nums, dens); }
};

HalfInt HF(long twice) { return HalfInt::from_twice(twice); }
const HalfInt half = HalfInt::half();

// ---- left-hand sides of the ten plain sums ----

SumSpec plain_spec(int alpha, int two_gamma, long delta, const Params& q, bool sgn = false) {
    SumSpec s;
    s.alpha = alpha;
    s.two_gamma = two_gamma;
    s.delta = delta;
    s.r = q.r;
    s.n = q.n;
    s.is_signed = sgn;
    s.m = q.m;
    return s;
}

// ---- the uniform closed forms used as cross-check programs ----

Rational sec2_rhs(int alpha, const Rational& gamma, long delta, const Params& q) {
    long r = q.r;
    Rational n = q.n.to_rational();
    auto HI = [](const Rational& x) {
        Rational tw = x * Rational(2);
        return HalfInt::from_twice(tw.num());
    };
    ClassicalList g;
    if (alpha == 2) {
        long chi = delta == 0 ? 1 : 0;
        for (long i = 1; i <= r; ++i) {
            g.num(HI(Rational(1) + Rational(i) * gamma));
            g.num(HI(n * 2 + 1));
            g.num(HI(n - i - gamma + chi + 2));
            g.num(HI(Rational(i - 1) * gamma + Rational(delta + 1, 2)));
            g.den(HI(Rational(1) + gamma));
            g.den(HI(n - i + chi + 1));
            g.den(HI(n - Rational(i) * gamma + chi + 1));
            g.den(HI(n - Rational(i - 1) * gamma - Rational(delta - 3, 2) - chi));
        }
        return g.eval();
    }
    if (alpha == 1 && delta == 0) {
        for (long i = 1; i <= r; ++i) {
            g.num(HI(Rational(1) + Rational(i) * gamma));
            g.num(HI(n * 2 + 1));
            g.num(HI(n * 2 - i + gamma + 2));
            g.den(HI(Rational(1) + gamma));
            g.den(HI(n * 2 - Rational(i - 2) * gamma + 1));
            g.den(HI(n * 2 - i + 2));
        }
        return pow2(as_long(n * Rational(2 * r) - gamma * Rational(r * (r - 1)))) * g.eval();
    }
    throw std::domain_error("sec2_rhs: unsupported case");
}

// ---- the ten plain closed forms (one per (alpha,gamma,delta)) ----

Rational plain_rhs(const std::string& id, const Params& q) {
    long r = q.r;
    const HalfInt& n = q.n;
    HalfInt two_n = 2 * n;
    ClassicalList g;
    if (id == "S1h0") {
        for (long i = 1; i <= r; ++i) {
            g.num(HF(2 + i)).num(two_n + 1).num(two_n - HalfInt(i) + HF(5));
            g.den(HF(3)).den(two_n - HalfInt(i) + 2).den(two_n - HF(i) + 2);
        }
        return pow2(n.twice_long() * r - C2(r)) * g.eval();
    }
    if (id == "S110") {
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(i + 1)).num(two_n + 1);
            g.den(two_n - HalfInt(i) + 2);
        }
        return pow2(n.twice_long() * r - r * (r - 1)) * g.eval();
    }
    if (id == "S111") {
        for (long i = 1; i <= (r + 1) / 2; ++i) {
            g.num(HalfInt(i)).num(HalfInt(i)).num(two_n + 1);
            g.den(n - HalfInt(i) + 2).den(n - HalfInt(i) + 1);
        }
        for (long i = 1; i <= r / 2; ++i) {
            g.num(HalfInt(i)).num(HalfInt(i + 1)).num(two_n + 1);
            g.den(n - HalfInt(i) + 1).den(n - HalfInt(i) + 1);
        }
        return rfact(r) * g.eval();
    }
    if (id == "S2h0") {
        HalfInt fl = n.floor();
        g.num(HF(2 + r)).num(fl - HF(r) + HF(3));
        g.den(HF(3)).den(fl + 1);
        for (long i = 1; i <= r - 1; ++i) {
            g.num(HalfInt(i + 1)).num(two_n + 1).num(fl - HalfInt(i) + HF(3));
            g.den(HF(3)).den(two_n - HalfInt(i) + 1).den(fl - HalfInt(i) + 1);
        }
        return pow2(n.twice_long() * r - r * (r - 1)) * g.eval();
    }
    if (id == "S2h1") {
        HalfInt ce = n.ceil();
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(i + 1)).num(two_n + 1).num(ce - HalfInt(i) + HF(3));
            g.den(HF(3)).den(two_n - HalfInt(i) + 2).den(ce - HalfInt(i) + 1);
        }
        return pow2(n.twice_long() * r - r * r) * g.eval();
    }
    if (id == "S2h2") {
        for (long i = 1; i <= r; ++i) {
            g.num(HF(2 + i)).num(HF(2 + i)).num(two_n + 1).num(n - HalfInt(i) + HF(3));
            g.den(HF(1)).den(n - HalfInt(i) + 1).den(n - HF(i) + 1).den(n - HF(i) + 1);
        }
        return pow2(r) * g.eval();
    }
    if (id == "S210") {
        g.num(HalfInt(r + 1)).den(HalfInt(1));
        for (long i = 1; i <= r - 1; ++i) {
            g.num(HalfInt(2 * i + 1)).num(two_n + 1);
            g.den(two_n - HalfInt(2 * i) + 1).den(HalfInt(1));
        }
        return pow2(r * (n.twice_long() - 2 * r + 2)) * g.eval();
    }
    if (id == "S211") {
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(i)).num(HalfInt(i + 1)).num(two_n + 1);
            g.den(n - HalfInt(i) + 2).den(n - HalfInt(i) + 1).den(HalfInt(1));
        }
        return g.eval();
    }
    if (id == "S212") {
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(2 * i + 1)).num(two_n + 1);
            g.den(two_n - HalfInt(2 * i) + 2).den(HalfInt(1));
        }
        return pow2(r * (n.twice_long() - 2 * r - 1)) * g.eval();
    }
    if (id == "S213") {
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(i + 1)).num(HalfInt(i + 1)).num(two_n + 1);
            g.den(n - HalfInt(i) + 1).den(n - HalfInt(i) + 1).den(HalfInt(1));
        }
        return g.eval();
    }
    if (id == "S1g0") {
        long ga = *q.g;
        for (long i = 1; i <= r; ++i) {
            g.num(HalfInt(1 + i * ga)).num(two_n + 1);
            g.den(HalfInt(1 + ga)).den(two_n - HalfInt((i - 1) * ga) + 1);
        }
        return pow2(n.twice_long() * r - ga * r * (r - 1)) * g.eval();
    }
    if (id == "alt-S212") {
        if (n != HalfInt(r)) return Rational(0);
        Rational v = rfact(r) * Rational(big_factorial(2 * r)).pow(r);
        return (C2(r + 1) % 2 != 0) ? -v : v;
    }
    throw std::domain_error("plain_rhs: unknown id " + id);
}

// ---- weights of the q-deformed left-hand sides ----

QWeightSpec w_common(QWeightSpec::Pair pair, QWeightSpec::Index idx, Red red) {
    QWeightSpec w;
    w.pair = pair;
    w.index = idx;
    w.reduction = red;
    return w;
}

// ---- right-hand side programs of the q-identities ----

QV rhs_S1h0q(const QEnv& e, const Params& q) {
    long r = q.r, two_n = q.n.twice_long();
    HalfInt n = q.n, two_nh = 2 * n;
    QV v = e.rat(rfact(r)) / e.qfactorial(r, 1);
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        v *= e.qpoch(-1, 1, 1, i);                    // (-t ; t)_i
        v *= e.qpoch(-1, i + 2, 2, two_n - r);        // (-t^(i+2) ; q)_{2n-r}
        g.num(2, HF(2 + i)).num(2, two_nh + 1).num(2, two_nh - HalfInt(i) + HF(5));
        g.den(2, HF(3)).den(2, two_nh - HalfInt(i) + 2).den(2, two_nh - HF(i) + 2);
    }
    return v * g.eval(e);
}

QV rhs_S2h1q(const QEnv& e, const Params& q) {
    long r = q.r, two_n = q.n.twice_long();
    HalfInt two_nh = 2 * q.n, ce = q.n.ceil();
    QV v = e.rat(pow2(r) * rfact(r));
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        v *= e.qpoch(-1, 2, 1, two_n - 2 * i);        // (-q ; t)_{2n-2i}
        g.num(2, HalfInt(i)).num(2, two_nh + 1).num(2, ce - HalfInt(i) + HF(3));
        g.den(2, HF(3)).den(2, two_nh - HalfInt(i) + 2).den(2, ce - HalfInt(i) + 1);
    }
    return v * g.eval(e);
}

QV rhs_S2h0q(const QEnv& e, const Params& q) {
    long r = q.r;
    long nt = (q.n - HalfInt(r) + half).to_long();  // integral by the domain
    QV v = e.rat(pow2(r) * rfact(r)) / e.one_minus_tpow(2).pow(r * (static_cast<long>(r) - 1));
    v *= e.qpoch(+1, 2 * r + 2, 4, nt) / e.qpoch(+1, 2, 4, nt);
    for (long i = 1; i <= r; ++i) {
        v *= e.qpoch(+1, 2, 2, 2 * nt + 2 * r - 1) * e.qpoch(+1, 2, 2, 2 * nt + i - 1) *
             e.qpoch(+1, 2, 2, i - 1);
        v /= e.qpoch(+1, 2, 2, 2 * nt + 2 * r - 2 * i + 1) * e.qpoch(+1, 2, 2, nt + r - i).pow(2);
    }
    return v;
}

QV rhs_S2h2q(const QEnv& e, const Params& q) {
    long r = q.r, nl = q.n.to_long(), two_n = 2 * nl;
    HalfInt n = q.n, two_nh = 2 * n;
    QV v = e.rat(pow2(r) * rfact(r)) / e.qfactorial(r, 2);
    v *= e.qpoch(-1, 0, 1, r + 1);                    // (-1 ; t)_{r+1}
    v *= e.qpoch(-1, r + 2, 2, nl - r);               // (-q^(r/2+1) ; q)_{n-r}
    v /= e.qpoch(-1, 0, 2, nl - r);                   // (-1 ; q)_{n-r}
    for (long i = 1; i <= r + 1; ++i) {
        v *= e.qpoch(-1, 1, 1, i - 1) * e.qpoch(-1, 1, 1, two_n - i - r);
        v /= e.qpoch(-1, 1, 1, two_n - 2 * i + 2);
    }
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(2, HF(2 + i)).num(2, HF(2 + i)).num(2, two_nh + 1).num(2, n - HalfInt(i) + HF(3));
        g.den(2, HF(1)).den(2, n - HalfInt(i) + 1).den(2, n - HF(i) + 1).den(2, n - HF(i) + 1);
    }
    return v * g.eval(e);
}

QV rhs_S210q(const QEnv& e, const Params& q) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m, two_nh = 2 * n, two_mh = 2 * m;
    QV v = e.rat(rfact(r)) * (e.rat(RQ(2)) / e.one_plus_tpow(2)).pow(r);
    v *= e.tpow(RQ(-4 * C3(r + 1) + C2(r)));
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(1, HalfInt(2 * i - 1)).num(1, two_mh + two_nh - HalfInt(2 * i + 2 * r) + 5);
        g.den(1, two_nh - HalfInt(2 * i) + 3).den(1, two_mh - HalfInt(2 * i) + 3);
        g.num(2, two_nh + 1).num(2, two_mh + 1);
        g.den(2, m + n - HalfInt(i) + 2).den(2, m + n - HalfInt(i + r) + 3);
    }
    return v * g.eval(e);
}

QV rhs_S211q(const QEnv& e, const Params& q, bool half_case) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m, two_nh = 2 * n, two_mh = 2 * m;
    QV v = e.rat(rfact(r)) * (e.rat(RQ(2)) / e.one_plus_tpow(2)).pow(r);
    if (half_case) {
        // prefactor exponent carries the q^(r/4) normalizer applied to both sides
        v *= e.tpow(RQ(-C3(2 * r + 1), 2) + RQ(r, 2));
    } else {
        v *= e.tpow(RQ(-4 * C3(r + 1)));
    }
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(2, HalfInt(i)).num(2, HalfInt(i)).num(2, two_nh + 1).num(2, two_mh + 1);
        g.num(2, m + n - HalfInt(i + r) + 2);
        if (half_case) {
            g.den(2, n - HalfInt(i) + HF(3)).den(2, n - HalfInt(i) + HF(3));
            g.den(2, m - HalfInt(i) + HF(3)).den(2, m - HalfInt(i) + HF(3));
        } else {
            g.den(2, n - HalfInt(i) + 2).den(2, n - HalfInt(i) + 1);
            g.den(2, m - HalfInt(i) + 2).den(2, m - HalfInt(i) + 1);
        }
        g.den(2, m + n - HalfInt(i) + 2);
    }
    return v * g.eval(e);
}

QV rhs_S212q(const QEnv& e, const Params& q) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m, two_nh = 2 * n, two_mh = 2 * m;
    QV v = e.rat(rfact(r)) * (e.rat(RQ(2)) / e.one_plus_tpow(2)).pow(r);
    v /= e.one_plus_tpow(1).pow(r);
    v *= e.tpow(RQ(-4 * C3(r + 1) - C2(r + 1)));
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(1, HalfInt(2 * i)).num(1, two_mh + two_nh - HalfInt(2 * i + 2 * r) + 3);
        g.den(1, two_nh - HalfInt(2 * i) + 2).den(1, two_mh - HalfInt(2 * i) + 2);
        g.num(2, two_nh + 1).num(2, two_mh + 1);
        g.den(2, m + n - HalfInt(i) + 2).den(2, m + n - HalfInt(i + r) + 2);
    }
    return v * g.eval(e);
}

QV rhs_S213q(const QEnv& e, const Params& q, bool half_case) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m, two_nh = 2 * n, two_mh = 2 * m;
    QV v = e.rat(rfact(r)) * (e.rat(RQ(2)) / e.one_plus_tpow(2)).pow(r);
    if (half_case) {
        // -2 binom(r+1,3) - r^2/2 - r/4 in q plus the q^(r/4) normalizer
        v *= e.tpow(RQ(-4 * C3(r + 1) - r * static_cast<long>(r)));
    } else {
        v *= e.tpow(RQ(-4 * C3(r + 1) - 2 * C2(r + 1)));
    }
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(2, two_nh + 1).num(2, two_mh + 1).num(2, HalfInt(i)).num(2, HalfInt(i + 1));
        g.num(2, m + n - HalfInt(i + r) + 1);
        if (half_case) {
            g.den(2, n - HalfInt(i) + HF(3)).den(2, n - HalfInt(i) + HF(3));
            g.den(2, m - HalfInt(i) + HF(3)).den(2, m - HalfInt(i) + HF(3));
        } else {
            g.den(2, n - HalfInt(i) + 1).den(2, n - HalfInt(i) + 1);
            g.den(2, m - HalfInt(i) + 1).den(2, m - HalfInt(i) + 1);
        }
        g.den(2, m + n - HalfInt(i) + 2);
    }
    QV out = v * g.eval(e);
    if (!half_case) return out;
    // correction sum over s
    QV total = e.zero();
    long mn_r = (n + m - HalfInt(r)).to_long();
    for (long s = 0; s <= r; ++s) {
        QV term = e.qpoch(+1, 1, 2, s).pow(2) / e.one_minus_tpow(2).pow(2 * s);
        for (long j = 1; j <= r - s; ++j) {
            term *= e.bracket(n - HalfInt(r) - half + HalfInt(j), 2);
            term *= e.bracket(m - HalfInt(r) - half + HalfInt(j), 2);
        }
        term *= e.qbin(r, HalfInt(s)) * e.qbin(mn_r, HalfInt(s));
        total += term;
    }
    return out * total;
}

QV rhs_S110q(const QEnv& e, const Params& q) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m, two_nh = 2 * n, two_mh = 2 * m;
    Rational nr = n.to_rational(), mr = m.to_rational();
    // t-exponent -2rmn - (1/3) r(r-1)(2r-3m-3n-1), plus q^(r/4) both sides in
    // the half-integer case
    Rational ex = RQ(-2 * r) * mr * nr -
                  RQ(r * (static_cast<long>(r) - 1), 3) * (RQ(2 * r - 1) - RQ(3) * mr - RQ(3) * nr);
    if (!q.n.is_integer()) ex += RQ(r, 2);
    QV v = e.rat(rfact(r)) * e.tpow(ex);
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(2, HalfInt(i)).num(2, two_nh + 1).num(2, two_mh + 1);
        g.num(2, two_mh + two_nh - HalfInt(r + i) + 3);
        g.den(2, two_nh - HalfInt(i) + 2).den(2, two_mh - HalfInt(i) + 2);
        g.den(2, m + n - HalfInt(i) + 2).den(2, m + n - HalfInt(i) + 2);
    }
    return v * g.eval(e);
}

QV rhs_altS212q(const QEnv& e, const Params& q, bool with_p) {
    long r = q.r;
    HalfInt n = q.n, m = *q.m;
    QV v = e.rat(rfact(r)) * (e.rat(RQ(2)) / e.one_plus_tpow(2)).pow(r);
    v *= e.tpow(RQ(-2 * C3(r + 1)));
    if (C2(r + 1) % 2 != 0) v = e.zero() - v;
    GammaList g;
    for (long i = 1; i <= r; ++i) {
        g.num(2, 2 * n + 1).num(2, 2 * m + 1).num(2, HalfInt(i));
        g.den(2, n - HalfInt(i) + 1).den(2, m - HalfInt(i) + 1);
        if (with_p) {
            HalfInt p = *q.p;
            g.num(2, 2 * p + 1).num(2, n + m + p - HalfInt(i + r) + 2);
            g.den(2, p - HalfInt(i) + 1);
            g.den(2, n + m - HalfInt(i) + 2).den(2, m + p - HalfInt(i) + 2).den(2, p + n - HalfInt(i) + 2);
        } else {
            g.den(2, n + m - HalfInt(i) + 2);
        }
    }
    return v * g.eval(e);
}

// ---- plain two-binomial sums with the extra parameter m ----

Rational rhs_S111m(const Params& q, bool half_case) {
    long r = q.r;
    const HalfInt n = q.n, m = *q.m;
    HalfInt two_nh = 2 * n, two_mh = 2 * m;
    long cr = (r + 1) / 2, fr = r / 2;
    ClassicalList g;
    for (long i = 1; i <= cr; ++i) {
        g.num(HalfInt(i)).num(HalfInt(i)).num(two_nh + 1).num(two_mh + 1);
        g.num(m + n - HalfInt(i + cr) + 2);
        if (half_case) {
            g.den(n - HalfInt(i) + HF(3)).den(n - HalfInt(i) + HF(3));
            g.den(m - HalfInt(i) + HF(3)).den(m - HalfInt(i) + HF(3));
        } else {
            g.den(n - HalfInt(i) + 2).den(n - HalfInt(i) + 1);
            g.den(m - HalfInt(i) + 2).den(m - HalfInt(i) + 1);
        }
        g.den(m + n - HalfInt(i) + 2);
    }
    for (long i = 1; i <= fr; ++i) {
        g.num(HalfInt(i)).num(HalfInt(i + 1)).num(two_nh + 1).num(two_mh + 1);
        g.num(m + n - HalfInt(i + fr) + 1);
        if (half_case) {
            g.den(n - HalfInt(i) + HF(3)).den(n - HalfInt(i) + HF(3));
            g.den(m - HalfInt(i) + HF(3)).den(m - HalfInt(i) + HF(3));
        } else {
            g.den(n - HalfInt(i) + 1).den(n - HalfInt(i) + 1);
            g.den(m - HalfInt(i) + 1).den(m - HalfInt(i) + 1);
        }
        g.den(m + n - HalfInt(i) + 2);
    }
    Rational v = rfact(r) * g.eval();
    if (!half_case) return v;
    // correction sum
    Rational mr = m.to_rational(), nr = n.to_rational();
    Rational total(0);
    for (long s = 0; s <= fr; ++s) {
        Rational term = pow2(-4 * (fr - s));
        if ((fr - s) % 2 != 0) term = -term;
        for (long j = 1; j <= s; ++j)
            term *= (mr - s + j) * (nr - s + j);
        term *= Rational(big_factorial(fr), big_factorial(s));
        for (long j = 1; j <= fr - s; ++j) term *= (mr + nr - fr + j);
        term *= Rational(big_binomial(2 * fr - 2 * s, fr - s)).pow(2);
        total += term;
    }
    return v * total;
}

// ---- descriptor table ----

std::vector<IdentityDescriptor> build_catalog() {
    std::vector<IdentityDescriptor> out;

    auto add_plain = [&](const std::string& id, const std::string& title, int alpha, int tg, long delta,
                         Par parity, std::function<bool(const Params&)> dom) {
        IdentityDescriptor d;
        d.id = id;
        d.title = title;
        d.is_q = false;
        d.n_parity = parity;
        d.domain = parity == Par::Both ? "r >= 1, n >= 0 integer or half-integer" : "r >= 1, n >= 0 integer";
        d.in_domain = dom ? dom : [](const Params& q) { return q.n.sgn() >= 0; };
        bool sgn = id.rfind("alt-", 0) == 0;
        d.plain_lhs = [=](const Params& q) { return discrete_mm_sum_exact(plain_spec(alpha, tg, delta, q, sgn)); };
        d.plain_lhs_naive = [=](const Params& q) { return discrete_mm_sum_naive(plain_spec(alpha, tg, delta, q, sgn)); };
        d.rhs = [id](const QEnv& e, const Params& q) { (void)e; return QV(plain_rhs(id, q)); };
        out.push_back(std::move(d));
    };

    auto dom_any = [](const Params& q) { return q.n.sgn() >= 0; };

    add_plain("S1h0", "A-type sum, exponent 1, no point weight", 1, 1, 0, Par::Both, dom_any);
    add_plain("S110", "A-type sum, exponent 2, no point weight", 1, 2, 0, Par::Both, dom_any);
    add_plain("S111", "sum with squared differences and |k| weight", 1, 2, 1, Par::Integer, dom_any);
    add_plain("S2h0", "D-type sum, exponent 1", 2, 1, 0, Par::Both, [](const Params& q) {
        if (q.n.sgn() < 0) return false;
        // closed form excluded at the zero-residue pole points (odd r, small n)
        if (q.r % 2 == 1 && 2 * q.n <= HalfInt(q.r - 3)) return false;
        return true;
    });
    add_plain("S2h1", "B-type sum, exponent 1", 2, 1, 1, Par::Both, dom_any);
    add_plain("S2h2", "squared-point-weight sum, exponent 1", 2, 1, 2, Par::Integer, dom_any);
    add_plain("S210", "D-type sum, exponent 2", 2, 2, 0, Par::Both, dom_any);
    add_plain("S211", "sum with doubled differences and |k| weight", 2, 2, 1, Par::Integer, dom_any);
    add_plain("S212", "B-type sum, exponent 2", 2, 2, 2, Par::Both, dom_any);
    add_plain("S213", "sum with doubled differences and |k|^3 weight", 2, 2, 3, Par::Integer, dom_any);

    // uniform closed-form cross-check programs
    struct Sec2 { const char* id; int alpha; Rational gamma; long delta; bool half_ok; };
    const Sec2 sec2[] = {
        {"S1h0", 1, RQ(1, 2), 0, true}, {"S110", 1, RQ(1), 0, true},
        {"S2h0", 2, RQ(1, 2), 0, false}, {"S2h1", 2, RQ(1, 2), 1, false},
        {"S2h2", 2, RQ(1, 2), 2, false}, {"S210", 2, RQ(1), 0, true},
        {"S211", 2, RQ(1), 1, false}, {"S212", 2, RQ(1), 2, true},
        {"S213", 2, RQ(1), 3, false},
    };
    for (auto& s : sec2) {
        for (auto& d : out) {
            if (d.id != s.id) continue;
            auto alpha = s.alpha; auto gamma = s.gamma; auto delta = s.delta;
            d.rhs_alt = [=](const QEnv& e, const Params& q) { (void)e; return QV(sec2_rhs(alpha, gamma, delta, q)); };
            bool half_ok = s.half_ok;
            auto dom = d.in_domain;
            d.alt_in_domain = [=](const Params& q) {
                if (!half_ok && !q.n.is_integer()) return false;
                return dom(q);
            };
        }
    }
    // S111's uniform form coincides with its primary program
    for (auto& d : out)
        if (d.id == "S111") {
            d.rhs_alt = d.rhs;
            d.alt_in_domain = d.in_domain;
        }

    // general-gamma A-type sum
    {
        IdentityDescriptor d;
        d.id = "S1g0";
        d.title = "A-type sum with Pochhammer-deformed differences, general integer weight g";
        d.domain = "r >= 1, n >= 0 integer, g >= 0 integer";
        d.is_q = false;
        d.uses_g = true;
        d.n_parity = Par::Integer;
        d.in_domain = [](const Params& q) { return q.n.sgn() >= 0 && q.g && *q.g >= 0; };
        d.plain_lhs = [](const Params& q) { return Rational(pochhammer_mm_sum(*q.g, q.r, q.n.to_long())); };
        d.plain_lhs_naive = [](const Params& q) { return Rational(pochhammer_mm_sum_naive(*q.g, q.r, q.n.to_long())); };
        d.rhs = [](const QEnv&, const Params& q) { return QV(plain_rhs("S1g0", q)); };
        out.push_back(std::move(d));
    }

    // alternating sum, closed form supported at (2,1,2)
    {
        IdentityDescriptor d;
        d.id = "alt-S212";
        d.title = "alternating B-type sum, exponent 2: r!((2r)!)^r at n=r (up to sign), else 0";
        d.domain = "r >= 1, n >= 0 integer";
        d.is_q = false;
        d.n_parity = Par::Integer;
        d.in_domain = [](const Params& q) { return q.n.sgn() >= 0; };
        d.plain_lhs = [](const Params& q) { return discrete_mm_sum_exact(plain_spec(2, 2, 2, q, true)); };
        d.plain_lhs_naive = [](const Params& q) { return discrete_mm_sum_naive(plain_spec(2, 2, 2, q, true)); };
        d.rhs = [](const QEnv&, const Params& q) { return QV(plain_rhs("alt-S212", q)); };
        out.push_back(std::move(d));
    }

    // ---- q-identities ----

    auto add_q = [&](IdentityDescriptor d) { out.push_back(std::move(d)); };

    {
        IdentityDescriptor d;
        d.id = "S1h0-q";
        d.title = "q-analogue of the exponent-1 A-type sum";
        d.domain = "n >= (r-1)/2, integer or half-integer";
        d.n_parity = Par::Both;
        d.in_domain = [](const Params& q) { return 2 * q.n >= HalfInt(q.r - 1); };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::AbsDiff, QWeightSpec::Index::None, Red::Perm);
            Rational nr = q.n.to_rational();
            long r = q.r;
            w.texp = [nr, r](const HalfInt& k, int i) {
                Rational x = k.to_rational() + nr - Rational(r) + Rational(i);
                return x * x;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S1h0q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S2h1-q";
        d.title = "q-analogue of the exponent-1 B-type sum";
        d.domain = "n >= r - 1/2, integer or half-integer";
        d.n_parity = Par::Both;
        d.in_domain = [](const Params& q) { return 2 * q.n >= HalfInt(2 * q.r - 1); };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::AbsDiffSum, QWeightSpec::Index::AbsQ, Red::HyperOct);
            Rational corr = q.n.ceil().to_rational() - q.n.to_rational();  // 0 or 1/2
            corr = corr * corr - corr;                                     // t-exp of -binom(ceil(n)-n, 2)
            long r = q.r;
            w.texp = [corr, r](const HalfInt& k, int i) {
                Rational x = k.to_rational() - Rational(r) + Rational(i);
                return x * x - x - corr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S2h1q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S2h0-q";
        d.title = "q-analogue of the exponent-1 D-type sum (half-integer n)";
        d.domain = "n half-integer, n >= r - 1/2";
        d.n_parity = Par::Half;
        d.in_domain = [](const Params& q) {
            return !q.n.is_integer() && 2 * q.n >= HalfInt(2 * q.r - 1);
        };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::AbsDiffSum, QWeightSpec::Index::None, Red::HyperOct);
            long r = q.r;
            w.texp = [r](const HalfInt& k, int i) {
                Rational x = k.to_rational() - Rational(r) + Rational(i) + RQ(1, 2);
                return x * x - x;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S2h0q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S2h2-q";
        d.title = "q-analogue of the exponent-1 squared-point-weight sum";
        d.domain = "n >= r, integer";
        d.n_parity = Par::Integer;
        d.in_domain = [](const Params& q) { return q.n.is_integer() && q.n >= HalfInt(q.r); };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::AbsDiffSum, QWeightSpec::Index::SqQ, Red::HyperOct);
            long r = q.r;
            w.texp = [r](const HalfInt& k, int i) {
                Rational x = k.to_rational() - Rational(r) + Rational(i) - Rational(1);
                return x * x;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S2h2q(e, q); };
        add_q(std::move(d));
    }

    auto two_box_domain = [](const Params& q) {
        return q.m && q.n.sgn() >= 0 && q.m->sgn() >= 0 && q.n.is_integer() == q.m->is_integer();
    };

    {
        IdentityDescriptor d;
        d.id = "S210-q";
        d.title = "two-box q-analogue of the exponent-2 D-type sum";
        d.domain = "n, m >= 0 of equal parity";
        d.n_parity = Par::Both;
        d.uses_m = true;
        d.in_domain = two_box_domain;
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::HalfSum, Red::Perm);
            w.binom_m = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(4 * i - 3) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S210q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S211-q";
        d.title = "two-box q-analogue with |[k]| weight in the squared base";
        d.domain = "n, m >= 0 integers";
        d.n_parity = Par::Integer;
        d.uses_m = true;
        d.in_domain = [=](const Params& q) { return two_box_domain(q) && q.n.is_integer(); };
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2, Red::HyperOct);
            w.binom_m = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(2 * (2 * i - 1)) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S211q(e, q, false); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S211-qh";
        d.title = "half-integer companion of the |[k]| two-box q-analogue";
        d.domain = "n, m positive half-integers";
        d.n_parity = Par::Half;
        d.uses_m = true;
        d.in_domain = [=](const Params& q) {
            return q.m && !q.n.is_integer() && !q.m->is_integer() && q.n.sgn() > 0 && q.m->sgn() > 0;
        };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2, Red::HyperOct);
            w.binom_m = true;
            w.norm_texp = RQ(q.r, 2);  // q^(r/4), applied to both sides
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(2 * (2 * i - 1)) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S211q(e, q, true); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S212-q";
        d.title = "two-box q-analogue of the exponent-2 B-type sum";
        d.domain = "n, m >= 0 of equal parity";
        d.n_parity = Par::Both;
        d.uses_m = true;
        d.in_domain = two_box_domain;
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2Q, Red::Perm);
            w.binom_m = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(4 * i - 1) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S212q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S213-q";
        d.title = "two-box q-analogue with |[k]^3|-type weight";
        d.domain = "n, m >= 0 integers";
        d.n_parity = Par::Integer;
        d.uses_m = true;
        d.in_domain = [=](const Params& q) { return two_box_domain(q) && q.n.is_integer(); };
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2QQ, Red::HyperOct);
            w.binom_m = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(4 * i) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S213q(e, q, false); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S213-qh";
        d.title = "half-integer companion with a terminating correction sum";
        d.domain = "n, m positive half-integers with m + n >= 2r";
        d.n_parity = Par::Half;
        d.uses_m = true;
        d.in_domain = [](const Params& q) {
            if (!q.m || q.n.is_integer() || q.m->is_integer()) return false;
            if (q.n.sgn() <= 0 || q.m->sgn() <= 0) return false;
            return q.n + *q.m >= HalfInt(2 * q.r);
        };
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2QQ, Red::HyperOct);
            w.binom_m = true;
            w.norm_texp = RQ(q.r, 2);
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr - Rational(4 * i) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S213q(e, q, true); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S110-q";
        d.title = "two-box q-analogue of the exponent-2 A-type sum";
        d.domain = "n, m >= 0 of equal parity";
        d.n_parity = Par::Both;
        d.uses_m = true;
        d.in_domain = two_box_domain;
        d.weight = [](const Params& q) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiff, QWeightSpec::Index::None, Red::Perm);
            w.binom_m = true;
            if (!q.n.is_integer()) w.norm_texp = RQ(q.r, 2);
            Rational mn = q.n.to_rational() + q.m->to_rational();
            w.texp = [mn](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(2) * kr * kr + RQ(2) * (mn - Rational(2 * i) + RQ(2)) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_S110q(e, q); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "alt-S212-qp";
        d.title = "alternating three-box q-analogue of the exponent-2 B-type sum";
        d.domain = "n, m, p >= 0 integers";
        d.n_parity = Par::Integer;
        d.uses_m = true;
        d.uses_p = true;
        d.in_domain = [](const Params& q) {
            return q.m && q.p && q.n.is_integer() && q.m->is_integer() && q.p->is_integer() &&
                   q.n.sgn() >= 0 && q.m->sgn() >= 0 && q.p->sgn() >= 0;
        };
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2Q, Red::HyperOct);
            w.binom_m = true;
            w.binom_p = true;
            w.sign_factor = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(3) * kr * kr - Rational(4 * i - 1) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_altS212q(e, q, true); };
        add_q(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "alt-S212-q";
        d.title = "alternating two-box q-analogue of the exponent-2 B-type sum";
        d.domain = "n, m >= 0 integers";
        d.n_parity = Par::Integer;
        d.uses_m = true;
        d.in_domain = [=](const Params& q) { return two_box_domain(q) && q.n.is_integer(); };
        d.weight = [](const Params&) {
            QWeightSpec w = w_common(QWeightSpec::Pair::SqDiffSum, QWeightSpec::Index::AbsQ2Q, Red::HyperOct);
            w.binom_m = true;
            w.sign_factor = true;
            w.texp = [](const HalfInt& k, int i) {
                Rational kr = k.to_rational();
                return RQ(3) * kr * kr - Rational(4 * i - 1) * kr;
            };
            return w;
        };
        d.rhs = [](const QEnv& e, const Params& q) { return rhs_altS212q(e, q, false); };
        add_q(std::move(d));
    }

    // plain two-box sums with the free parameter m
    {
        IdentityDescriptor d;
        d.id = "S111-m";
        d.title = "two-box sum with squared differences and |k| weight";
        d.domain = "n, m >= 0 integers";
        d.is_q = false;
        d.uses_m = true;
        d.n_parity = Par::Integer;
        d.in_domain = [](const Params& q) {
            return q.m && q.n.is_integer() && q.m->is_integer() && q.n.sgn() >= 0 && q.m->sgn() >= 0;
        };
        d.plain_lhs = [](const Params& q) { return discrete_mm_sum_exact(plain_spec(1, 2, 1, q)); };
        d.plain_lhs_naive = [](const Params& q) { return discrete_mm_sum_naive(plain_spec(1, 2, 1, q)); };
        d.rhs = [](const QEnv&, const Params& q) { return QV(rhs_S111m(q, false)); };
        out.push_back(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "S111-mh";
        d.title = "half-integer two-box |k| sum with a terminating correction sum";
        d.domain = "n, m positive half-integers with m + n >= r";
        d.is_q = false;
        d.uses_m = true;
        d.n_parity = Par::Half;
        d.in_domain = [](const Params& q) {
            if (!q.m || q.n.is_integer() || q.m->is_integer()) return false;
            if (q.n.sgn() <= 0 || q.m->sgn() <= 0) return false;
            return q.n + *q.m >= HalfInt(q.r);
        };
        d.plain_lhs = [](const Params& q) { return discrete_mm_sum_exact(plain_spec(1, 2, 1, q)); };
        d.plain_lhs_naive = [](const Params& q) { return discrete_mm_sum_naive(plain_spec(1, 2, 1, q)); };
        d.rhs = [](const QEnv&, const Params& q) { return QV(rhs_S111m(q, true)); };
        out.push_back(std::move(d));
    }

    return out;
}

} // namespace

bool IdentityDescriptor::params_ok(const Params& q) const {
    if (q.r < 1) return false;
    if (n_parity == Par::Integer && !q.n.is_integer()) return false;
    if (n_parity == Par::Half && q.n.is_integer()) return false;
    if (uses_m && !q.m) return false;
    if (uses_p && !q.p) return false;
    if (uses_g && !q.g) return false;
    return in_domain(q);
}

const std::vector<IdentityDescriptor>& catalog() {
    static const std::vector<IdentityDescriptor> c = build_catalog();
    return c;
}

const IdentityDescriptor& find_identity(const std::string& id) {
    for (auto& d : catalog())
        if (d.id == id) return d;
    throw std::domain_error("unknown identity id: " + id);
}

QV q_sum_lhs(const std::string& id, const Params& p, const QEnv& env) {
    const IdentityDescriptor& d = find_identity(id);
    if (!d.params_ok(p)) throw std::domain_error(id + ": parameters out of domain (" + p.str() + ")");
    if (!d.is_q) return QV(d.plain_lhs(p));
    QWeightSpec w = d.weight(p);
    return q_sum_eval(env, w, p.r, p.n, p.m.value_or(HalfInt(0)), p.p.value_or(HalfInt(0)));
}

QV closed_form_rhs(const std::string& id, const Params& p, const QEnv& env, bool alt) {
    const IdentityDescriptor& d = find_identity(id);
    if (alt) {
        if (!d.rhs_alt) throw std::domain_error(id + ": no uniform closed form cataloged");
        if (!d.alt_in_domain(p)) throw std::domain_error(id + ": out of the uniform form's domain");
        return d.rhs_alt(env, p);
    }
    if (!d.params_ok(p)) throw std::domain_error(id + ": parameters out of domain (" + p.str() + ")");
    return d.rhs(env, p);
}

VerificationReport verify_identity(const std::string& id, const Params& p, const QEnv& env) {
    VerificationReport rep;
    rep.id = id;
    rep.params = p.str();
    const IdentityDescriptor& d = find_identity(id);
    if (!d.is_q)
        rep.mode = "plain";
    else if (env.symbolic())
        rep.mode = "symbolic";
    else
        rep.mode = "point t0=" + env.t0()->str();
    auto start = std::chrono::steady_clock::now();
    try {
        if (!d.params_ok(p)) throw std::domain_error("parameters out of domain");
        QV lhs = q_sum_lhs(id, p, env);
        QV rhs = closed_form_rhs(id, p, env);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.equal = false;
        rep.message = ex.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string catalog_text() {
    std::ostringstream os;
    for (auto& d : catalog()) {
        os << d.id << "\t" << (d.is_q ? "q" : "plain") << "\tparams: r n";
        if (d.uses_m) os << " m";
        if (d.uses_p) os << " p";
        if (d.uses_g) os << " g";
        os << "\tdomain: " << d.domain << "\t" << d.title << "\n";
    }
    return os.str();
}

} // namespace mmsum
