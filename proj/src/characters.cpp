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

#include "mmsum/characters.hpp"

#include "mmsum/qfun.hpp"

namespace mmsum {

namespace {

Rational RQ(long a, long b = 1) { return Rational(a, b); }

// y^(2e) for a half-integer exponent e (x^e with x = y^2).
Rational ypow(const Rational& y, const HalfInt& e) {
    return y.pow(e.twice_long());
}

long as_int(const Rational& x) {
    if (!x.is_integer()) throw std::domain_error("expected an integer: " + x.str());
    return static_cast<long>(x.num().convert_to<long long>());
}

std::vector<HalfInt> padded(const GPartition& lam, int n) {
    std::vector<HalfInt> out;
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) out.push_back(lam.part(i));
    if (!out.empty() && !out.front().is_integer() && lam.rows() != static_cast<size_t>(n))
        throw std::domain_error("half-partition must have exactly n parts");
    return out;
}

} // namespace

Rational det_bareiss(std::vector<std::vector<Rational>> M) {
    const size_t n = M.size();
    if (n == 0) return Rational(1);
    // Clear denominators row by row; keep the accumulated scale.
    Rational scale(1);
    std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) {
        BigInt lcm = 1;
        for (auto& v : M[i]) lcm = lcm / big_gcd(lcm, v.den()) * v.den();
        scale *= Rational(lcm);
        for (size_t j = 0; j < n; ++j) A[i][j] = M[i][j].num() * (lcm / M[i][j].den());
    }
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && A[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(A[k], A[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
        prev = A[k][k];
    }
    Rational det(A[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det / scale;
}

Rational char_eval(CharFamily fam, const GPartition& lam, const std::vector<Rational>& y) {
    const int n = static_cast<int>(y.size());
    if (n == 0) return Rational(1);
    for (auto& v : y)
        if (v.is_zero()) throw std::domain_error("char_eval: y must be nonzero");
    std::vector<HalfInt> l = padded(lam, n);
    auto build = [&](const std::function<Rational(const Rational&, const HalfInt&)>& ent,
                     const std::function<HalfInt(int)>& expo) {
        std::vector<std::vector<Rational>> M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n; ++j) M[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = ent(y[static_cast<size_t>(i)], expo(j));
        return M;
    };
    auto minus = [](const Rational& yy, const HalfInt& e) { return ypow(yy, e) - ypow(yy, -e); };
    auto plus = [](const Rational& yy, const HalfInt& e) { return ypow(yy, e) + ypow(yy, -e); };
    auto power = [](const Rational& yy, const HalfInt& e) { return ypow(yy, e); };

    Rational num, den;
    switch (fam) {
        case CharFamily::Schur: {
            den = det_bareiss(build(power, [&](int j) { return HalfInt(n - j); }));
            num = det_bareiss(build(power, [&](int j) { return l[static_cast<size_t>(j - 1)] + HalfInt(n - j); }));
            break;
        }
        case CharFamily::SoOdd:
        case CharFamily::SoOddPlus: {
            auto ent = fam == CharFamily::SoOdd ? minus : plus;
            den = det_bareiss(build(ent, [&](int j) { return HalfInt(n - j) + HalfInt::half(); }));
            num = det_bareiss(
                build(ent, [&](int j) { return l[static_cast<size_t>(j - 1)] + HalfInt(n - j) + HalfInt::half(); }));
            break;
        }
        case CharFamily::Sp: {
            den = det_bareiss(build(minus, [&](int j) { return HalfInt(n - j + 1); }));
            num = det_bareiss(build(minus, [&](int j) { return l[static_cast<size_t>(j - 1)] + HalfInt(n - j + 1); }));
            break;
        }
        case CharFamily::SoEven: {
            den = det_bareiss(build(plus, [&](int j) { return HalfInt(n - j); }));
            if (den.is_zero()) throw std::domain_error("char_eval: non-generic point");
            Rational tot(0);
            for (int sg : {1, -1}) {
                auto ent = [&](const Rational& yy, const HalfInt& e) {
                    return Rational(sg) * ypow(yy, e) + ypow(yy, -e);
                };
                tot += det_bareiss(build(ent, [&](int j) { return l[static_cast<size_t>(j - 1)] + HalfInt(n - j); })) / den;
            }
            return tot;
        }
        case CharFamily::OEven: {
            den = det_bareiss(build(plus, [&](int j) { return HalfInt(n - j); }));
            num = det_bareiss(build(plus, [&](int j) { return l[static_cast<size_t>(j - 1)] + HalfInt(n - j); }));
            if (den.is_zero()) throw std::domain_error("char_eval: non-generic point");
            Rational u = l[static_cast<size_t>(n - 1)].is_zero() ? Rational(1) : Rational(2);
            return u * num / den;
        }
    }
    if (den.is_zero()) throw std::domain_error("char_eval: non-generic point");
    return num / den;
}

namespace {

// Helpers for the product formulas: everything is a rational function of t.
using RF = RationalFunction;

RF tpow(const Rational& e) {
    if (!e.is_integer()) throw std::domain_error("principal spec: fractional t-exponent " + e.str());
    return RF(LaurentPoly::t_power(as_int(e)));
}
// 1 - s*t^e
RF lin(int s, const Rational& e) { return RF(Rational(1)) - RF(Rational(s)) * tpow(e); }

// Gaussian binomial in base q as a rational function.
RF qbinq(long N, long K) { return RF(q_binomial(N, K, 2)); }

struct PSData {
    std::vector<HalfInt> l;   // padded parts, length n (or conjugate, length r)
    Rational nl, sz;          // n(lambda), |lambda|
};

PSData ps_data(const GPartition& lam, int n) {
    PSData d;
    d.l = std::vector<HalfInt>();
    for (int i = 0; i < n; ++i) d.l.push_back(lam.part(static_cast<size_t>(i)));
    d.nl = lam.nstat();
    d.sz = lam.size();
    return d;
}

} // namespace

RationalFunction char_principal_spec(PSKind kind, const GPartition& lam, int n, long r, bool negate_t) {
    // q-exponents are doubled into t-exponents throughout.
    auto Q = [&](const Rational& qexp) { return tpow(qexp * RQ(2)); };
    auto lin_q = [&](int s, const Rational& qexp) { return lin(s, (qexp * RQ(2))); };

    const bool dual = kind == PSKind::SchurDual || kind == PSKind::SoOddDualInt ||
                      kind == PSKind::SoOddDualHalf || kind == PSKind::SpDualInt ||
                      kind == PSKind::SpDualHalf || kind == PSKind::ODualHalf;
    GPartition shape = lam;
    if (dual) {
        if (!lam.fits_in(HalfInt(r), n)) throw std::domain_error("principal spec: shape exceeds the box");
        shape = lam.conjugate(r);
    }
    const int rows_n = dual ? static_cast<int>(r) : n;
    PSData d = ps_data(shape, rows_n);
    PSData orig = ps_data(lam, n);
    auto lp = [&](int i) { return d.l[static_cast<size_t>(i - 1)].to_rational(); };  // 1-based

    RF v(Rational(1));

    switch (kind) {
        case PSKind::SchurInt:
        case PSKind::SchurHalf: {
            v = Q(orig.nl);
            if (kind == PSKind::SchurHalf) v *= Q(orig.sz / RQ(2));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    v *= lin_q(1, orig.l[static_cast<size_t>(i - 1)].to_rational() -
                                      orig.l[static_cast<size_t>(j - 1)].to_rational() + RQ(j - i)) /
                         lin_q(1, RQ(j - i));
            break;
        }
        case PSKind::SchurDual: {
            v = Q(orig.nl);
            for (int i = 1; i <= rows_n; ++i)
                v *= qbinq(n + r - 1, as_int(lp(i)) + r - i) / qbinq(n + r - 1, r - i);
            for (int i = 1; i <= rows_n; ++i)
                for (int j = i + 1; j <= rows_n; ++j)
                    v *= lin_q(1, lp(i) - lp(j) + RQ(j - i)) / lin_q(1, RQ(j - i));
            break;
        }
        case PSKind::SoOddInt: {
            v = Q(orig.nl - RQ(n) * orig.sz);
            for (int i = 1; i <= n; ++i)
                v *= lin_q(1, RQ(2) * orig.l[static_cast<size_t>(i - 1)].to_rational() + RQ(2 * n - 2 * i + 1)) /
                     lin_q(1, RQ(2 * n - 2 * i + 1));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational(),
                             lj = orig.l[static_cast<size_t>(j - 1)].to_rational();
                    v *= lin_q(1, li - lj + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, li + lj + RQ(2 * n - i - j + 1)) / lin_q(1, RQ(2 * n - i - j + 1));
                }
            break;
        }
        case PSKind::SoOddHalf:
        case PSKind::SoPlusHalf: {
            int s = kind == PSKind::SoOddHalf ? 1 : -1;  // 1 -/+: minus form uses (1 - q^..)
            v = Q(orig.nl - (RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= n; ++i)
                v *= lin_q(s, orig.l[static_cast<size_t>(i - 1)].to_rational() + RQ(n - i) + RQ(1, 2)) /
                     lin_q(s, RQ(n - i) + RQ(1, 2));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational(),
                             lj = orig.l[static_cast<size_t>(j - 1)].to_rational();
                    v *= lin_q(1, li - lj + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, li + lj + RQ(2 * n - i - j + 1)) / lin_q(1, RQ(2 * n - i - j + 1));
                }
            break;
        }
        case PSKind::SoOddDualInt:
        case PSKind::SoOddDualHalf: {
            v = Q(orig.nl - (kind == PSKind::SoOddDualInt ? RQ(n) : RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= rows_n; ++i) {
                if (kind == PSKind::SoOddDualHalf)
                    v *= lin_q(-1, RQ(n) - lp(i) + RQ(i) - RQ(1, 2)) / lin_q(-1, RQ(n + i) - RQ(1, 2));
                v *= qbinq(2 * n + 2 * r - 1, as_int(lp(i)) + r - i) / qbinq(2 * n + 2 * r - 1, r - i);
            }
            for (int i = 1; i <= rows_n; ++i)
                for (int j = i + 1; j <= rows_n; ++j) {
                    v *= lin_q(1, lp(i) - lp(j) + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, RQ(2 * n) - lp(i) - lp(j) + RQ(i + j - 1)) / lin_q(1, RQ(2 * n + i + j - 1));
                }
            break;
        }
        case PSKind::SpInt:
        case PSKind::SpHalf: {
            bool integer_pt = kind == PSKind::SpInt;
            v = Q(orig.nl - (integer_pt ? RQ(n) : RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= n; ++i) {
                Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational();
                if (integer_pt)
                    v *= lin_q(1, RQ(2) * (li + RQ(n - i + 1))) / lin_q(1, RQ(2 * (n - i + 1)));
                else
                    v *= lin_q(1, li + RQ(n - i + 1)) / lin_q(1, RQ(n - i + 1));
            }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational(),
                             lj = orig.l[static_cast<size_t>(j - 1)].to_rational();
                    v *= lin_q(1, li - lj + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, li + lj + RQ(2 * n - i - j + 2)) / lin_q(1, RQ(2 * n - i - j + 2));
                }
            break;
        }
        case PSKind::SpDualInt:
        case PSKind::SpDualHalf: {
            bool integer_pt = kind == PSKind::SpDualInt;
            v = Q(orig.nl - (integer_pt ? RQ(n) : RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= rows_n; ++i) {
                if (integer_pt)
                    v *= lin_q(1, RQ(n) - lp(i) + RQ(i)) / lin_q(1, RQ(n + i));
                else
                    v *= lin_q(1, RQ(2) * (RQ(n) - lp(i) + RQ(i))) / lin_q(1, RQ(2 * (n + i)));
                v *= qbinq(2 * n + 2 * r, as_int(lp(i)) + r - i) / qbinq(2 * n + 2 * r, r - i);
            }
            for (int i = 1; i <= rows_n; ++i)
                for (int j = i + 1; j <= rows_n; ++j) {
                    v *= lin_q(1, lp(i) - lp(j) + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, RQ(2 * n) - lp(i) - lp(j) + RQ(i + j)) / lin_q(1, RQ(2 * n + i + j));
                }
            break;
        }
        case PSKind::OHalf: {
            Rational u = orig.l[static_cast<size_t>(n - 1)].is_zero() ? RQ(1) : RQ(2);
            v = RF(u) * Q(orig.nl - (RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= n; ++i)
                v *= lin_q(-1, orig.l[static_cast<size_t>(i - 1)].to_rational() + RQ(n - i)) /
                     lin_q(-1, RQ(n - i));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational(),
                             lj = orig.l[static_cast<size_t>(j - 1)].to_rational();
                    v *= lin_q(1, li - lj + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, li + lj + RQ(2 * n - i - j)) / lin_q(1, RQ(2 * n - i - j));
                }
            break;
        }
        case PSKind::ODualHalf: {
            v = Q(orig.nl - (RQ(n) - RQ(1, 2)) * orig.sz);
            for (int i = 1; i <= rows_n; ++i)
                v *= qbinq(2 * n + 2 * r - 2, as_int(lp(i)) + r - i) / qbinq(2 * n + 2 * r - 2, r - i);
            for (int i = 1; i <= rows_n; ++i)
                for (int j = i + 1; j <= rows_n; ++j) {
                    v *= lin_q(1, lp(i) - lp(j) + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, RQ(2 * n) - lp(i) - lp(j) + RQ(i + j - 2)) / lin_q(1, RQ(2 * n + i + j - 2));
                }
            break;
        }
        case PSKind::SoEvenHalf: {
            v = Q(orig.nl - (RQ(n) - RQ(1, 2)) * orig.sz);
            RF a(Rational(1)), b(Rational(1));
            for (int i = 1; i <= n; ++i) {
                Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational();
                a *= lin_q(-1, li + RQ(n - i)) / lin_q(-1, RQ(n - i));
                b *= lin_q(1, li + RQ(n - i)) / lin_q(-1, RQ(n - i));
            }
            v *= a + b;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Rational li = orig.l[static_cast<size_t>(i - 1)].to_rational(),
                             lj = orig.l[static_cast<size_t>(j - 1)].to_rational();
                    v *= lin_q(1, li - lj + RQ(j - i)) / lin_q(1, RQ(j - i));
                    v *= lin_q(1, li + lj + RQ(2 * n - i - j)) / lin_q(1, RQ(2 * n - i - j));
                }
            break;
        }
    }
    return negate_t ? v.negate_var() : v;
}

namespace {

GPartition pad_rect(const HalfInt& s, int n) { return GPartition::rectangle(s, n); }

} // namespace

CheckReport okada_sum_check(const std::string& theorem, int r, int n, const std::vector<Rational>& y,
                            int eps) {
    CheckReport rep;
    try {
        Rational lhs(0), rhs(0);
        if (theorem == "sososo") {
            CharFamily sig = eps == 1 ? CharFamily::SoOdd : CharFamily::SoOddPlus;
            for (auto& lam : partitions_in_box(r, n)) lhs += char_eval(sig, lam, y);
            HalfInt s = HalfInt::from_twice(r);
            rhs = char_eval(CharFamily::SoOdd, pad_rect(s, n), y) * char_eval(sig, pad_rect(s, n), y);
        } else if (theorem == "spspso") {
            for (auto& lam : partitions_in_box(r, n)) lhs += char_eval(CharFamily::Sp, lam, y);
            rhs = char_eval(CharFamily::Sp, pad_rect(HalfInt(r / 2), n), y) *
                  char_eval(CharFamily::SoOdd, pad_rect(HalfInt((r + 1) / 2), n), y);
        } else if (theorem == "sososo2") {
            for (auto& lam : partitions_in_box(r, n)) lhs += char_eval(CharFamily::SoEven, lam, y);
            HalfInt s = HalfInt::from_twice(r);
            rhs = char_eval(CharFamily::SoEven, pad_rect(s, n), y) *
                  char_eval(CharFamily::SoOdd, pad_rect(s, n), y);
        } else if (theorem == "ooso") {
            for (auto& lam : partitions_in_box(r, n))
                if (lam.length() == static_cast<size_t>(n)) lhs += char_eval(CharFamily::OEven, lam, y);
            HalfInt s = HalfInt::from_twice(r + 1), t = HalfInt::from_twice(r - 1);
            rhs = char_eval(CharFamily::OEven, pad_rect(s, n), y) *
                  char_eval(CharFamily::SoOdd, pad_rect(t, n), y);
        } else {
            throw std::domain_error("okada_sum_check: unknown theorem " + theorem);
        }
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

CheckReport corollary_spec_check(const std::string& cor, long r, int n) {
    CheckReport rep;
    try {
        RF lhs(Rational(0)), rhs(Rational(1));
        auto box = partitions_in_box(r, n);
        auto prod_grid = [&](long rows, long cols, long shift_num, long shift_den, bool skip_diag) {
            RF p(Rational(1));
            for (long i = 1; i <= rows; ++i)
                for (long j = 1; j <= cols; ++j) {
                    if (skip_diag && i == j) continue;
                    p *= lin(1, RQ(2 * (i + j + shift_num))) / lin(1, RQ(2 * (i + j + shift_den)));
                }
            return p;
        };
        if (cor == "B-sum-a") {
            for (auto& lam : box) lhs += char_principal_spec(PSKind::SoOddInt, lam, n);
            rhs = tpow(RQ(-r * static_cast<long>(n) * (n + 1)));  // q^(-r binom(n+1,2))
            for (long k = 0; k < n; ++k)
                rhs *= lin(1, RQ(2 * (r + 1) + 4 * k)) / lin(1, RQ(2 + 4 * k));  // (q^(r+1);q^2)_n/(q;q^2)_n
            rhs *= prod_grid(n, n, r - 1, -1, false);
        } else if (cor == "B-sum-b+" || cor == "B-sum-b-") {
            int eps = cor.back() == '+' ? 1 : -1;
            for (auto& lam : box) {
                RF term = char_principal_spec(PSKind::SoOddHalf, lam, n, 0, /*negate_t=*/eps == -1);
                if (eps == -1 && lam.size().num() % 2 != 0) term = RF(Rational(0)) - term;
                lhs += term;
            }
            rhs = tpow(RQ(-r * static_cast<long>(n) * n));  // q^(-r n^2/2)
            for (long k = 0; k < n; ++k) {
                rhs *= lin(1, RQ(r + 1 + 2 * k)) / lin(1, RQ(1 + 2 * k));
                rhs *= lin(eps, RQ(r + 1 + 2 * k)) / lin(eps, RQ(1 + 2 * k));
            }
            rhs *= prod_grid(n, n, r - 1, -1, true);
        } else if (cor == "Sp-heel") {
            for (auto& lam : box) lhs += char_principal_spec(PSKind::SpInt, lam, n);
            rhs = tpow(RQ(-r * static_cast<long>(n) * (n + 1)));
            rhs *= prod_grid(n + 1, n, r - 1, -1, false);
        } else if (cor == "Sp-half") {
            for (auto& lam : box) lhs += char_principal_spec(PSKind::SpHalf, lam, n);
            rhs = tpow(RQ(-r * static_cast<long>(n) * n));
            for (long i = 1; i <= 2 * n; ++i) rhs *= lin(1, RQ(i + r)) / lin(1, RQ(i));
            rhs *= prod_grid(n, n - 1, r, 0, false);
        } else if (cor == "D-spec-1") {
            for (auto& lam : box) lhs += char_principal_spec(PSKind::SoEvenHalf, lam, n);
            rhs = tpow(RQ(-r * static_cast<long>(n) * n));
            for (long k = 0; k < n; ++k) rhs *= lin(1, RQ(r + 1 + 2 * k)) / lin(1, RQ(1 + 2 * k));
            RF a(Rational(1)), b(Rational(1)), c(Rational(1));
            for (long k = 0; k < n; ++k) {
                a *= lin(-1, RQ(r + 2 * k));
                b *= lin(1, RQ(r + 2 * k));
                c *= lin(-1, RQ(2 * k));
            }
            rhs *= (a + b) / c;
            rhs *= prod_grid(n, n - 1, r - 1, -1, false);
        } else if (cor == "D-spec-2") {
            for (auto& lam : box)
                if (lam.length() == static_cast<size_t>(n)) lhs += char_principal_spec(PSKind::OHalf, lam, n);
            rhs = RF(Rational(2)) * tpow(RQ(-r * static_cast<long>(n) * n));
            for (long k = 0; k < n; ++k) {
                rhs *= lin(1, RQ(r + 2 * k)) / lin(1, RQ(1 + 2 * k));
                rhs *= lin(-1, RQ(r + 1 + 2 * k)) / lin(-1, RQ(2 * k));
            }
            rhs *= prod_grid(n, n - 1, r - 1, -1, false);
        } else {
            throw std::domain_error("corollary_spec_check: unknown id " + cor);
        }
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

namespace {

// Field determinant with pivoting, for matrices of rational functions.
RationalFunction det_field(std::vector<std::vector<RationalFunction>> M) {
    const size_t n = M.size();
    RationalFunction det(Rational(1));
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c].is_zero()) ++piv;
        if (piv == n) return RationalFunction(Rational(0));
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = RationalFunction(Rational(0)) - det;
        }
        det *= M[c][c];
        RationalFunction inv = RationalFunction(Rational(1)) / M[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (M[i][c].is_zero()) continue;
            RationalFunction f = M[i][c] * inv;
            for (size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    return det;
}

} // namespace

CheckReport char_reduce_check(CharFamily fam, const GPartition& lam, const std::vector<Rational>& y_head,
                              long r) {
    CheckReport rep;
    try {
        const int n = static_cast<int>(y_head.size()) + 1;
        if (fam != CharFamily::Schur && fam != CharFamily::SoOdd && fam != CharFamily::SoOddPlus &&
            fam != CharFamily::Sp)
            throw std::domain_error("char_reduce_check: unsupported family");
        std::vector<HalfInt> l;
        for (int i = 0; i < n; ++i) l.push_back(lam.part(static_cast<size_t>(i)));
        if (fam == CharFamily::Schur) {
            if (r != 0 || !l[static_cast<size_t>(n - 1)].is_zero())
                throw std::domain_error("char_reduce_check: Schur reduction needs r = 0 = lambda_n");
        } else if (HalfInt(r) < l[0]) {
            throw std::domain_error("char_reduce_check: needs r >= lambda_1");
        }
        auto expo = [&](int j) {
            switch (fam) {
                case CharFamily::Schur: return l[static_cast<size_t>(j - 1)] + HalfInt(n - j);
                case CharFamily::SoOdd:
                case CharFamily::SoOddPlus:
                    return l[static_cast<size_t>(j - 1)] + HalfInt(n - j) + HalfInt::half();
                case CharFamily::Sp: return l[static_cast<size_t>(j - 1)] + HalfInt(n - j + 1);
                default: return l[static_cast<size_t>(j - 1)] + HalfInt(n - j);
            }
        };
        auto dexo = [&](int j) {
            switch (fam) {
                case CharFamily::Schur: return HalfInt(n - j);
                case CharFamily::SoOdd:
                case CharFamily::SoOddPlus: return HalfInt(n - j) + HalfInt::half();
                case CharFamily::Sp: return HalfInt(n - j + 1);
                default: return HalfInt(n - j);
            }
        };
        int minus_sign = (fam == CharFamily::SoOdd || fam == CharFamily::Sp) ? -1 : 1;
        bool pure = fam == CharFamily::Schur;
        auto entry = [&](int i, const HalfInt& e) -> RationalFunction {
            // rows 1..n-1: constants; row n: Laurent monomials in the symbolic last variable
            if (i < n) {
                Rational v = y_head[static_cast<size_t>(i - 1)].pow(e.twice_long());
                if (!pure) v += Rational(minus_sign) * y_head[static_cast<size_t>(i - 1)].pow(-e.twice_long());
                return RationalFunction(v);
            }
            LaurentPoly p = LaurentPoly::t_power(e.twice_long());
            if (!pure) p += LaurentPoly::t_power(-e.twice_long()).scaled(Rational(minus_sign));
            return RationalFunction(p);
        };
        std::vector<std::vector<RationalFunction>> N(static_cast<size_t>(n)), D(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                N[static_cast<size_t>(i - 1)].push_back(entry(i, expo(j)));
                D[static_cast<size_t>(i - 1)].push_back(entry(i, dexo(j)));
            }
        RationalFunction ch = det_field(N) / det_field(D);
        // x_n^r = var^{2r}
        ch *= RationalFunction(LaurentPoly::t_power(2 * r));
        if (ch.num().is_zero()) {
            rep.lhs = "0";
        } else if (ch.num().low_exp() > 0) {
            rep.lhs = "0";
            ch = RationalFunction(Rational(0));
        } else if (ch.num().low_exp() < 0) {
            throw std::domain_error("char_reduce_check: pole at the origin");
        } else {
            ch = RationalFunction(Rational(ch.num().coeff(0) / ch.den().coeff(0)));
            rep.lhs = ch.str();
        }
        Rational want(0);
        if (fam == CharFamily::Schur) {
            std::vector<HalfInt> mu(l.begin(), l.end() - 1);
            want = char_eval(fam, GPartition(mu), y_head);
        } else if (HalfInt(r) == l[0]) {
            std::vector<HalfInt> mu(l.begin() + 1, l.end());
            if (!mu.empty() && mu.front().is_integer())
                while (!mu.empty() && mu.back().is_zero()) mu.pop_back();
            want = char_eval(fam, GPartition(mu), y_head);
        }
        rep.rhs = want.str();
        rep.equal = (ch == RationalFunction(want));
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

Rational c_weight(char kind, const GPartition& lam, const Rational& a, const Rational& q) {
    if (!lam.is_plain_partition()) throw std::domain_error("c_weight: plain partitions only");
    long width = lam.rows() ? lam.part(0).to_long() : 0;
    GPartition conj = lam.conjugate(width == 0 ? 1 : width);
    Rational v(1);
    for (size_t i = 1; i <= lam.rows(); ++i) {
        long li = lam.part(i - 1).to_long();
        for (long j = 1; j <= li; ++j) {
            long lj = conj.part(static_cast<size_t>(j - 1)).to_long();
            long e;
            if (kind == '-') e = li + lj - static_cast<long>(i) - j;
            else if (kind == '+') e = li - lj + j - static_cast<long>(i) + 1;
            else e = j - static_cast<long>(i);
            v *= Rational(1) - a * q.pow(e);
        }
    }
    return v;
}

Rational c_weight_explicit(char kind, const GPartition& lam, const Rational& a, const Rational& q, int n) {
    Rational v(1);
    auto part = [&](int i) { return lam.part(static_cast<size_t>(i - 1)).to_long(); };
    if (kind == '-') {
        for (int i = 1; i <= n; ++i)
            for (long k = 0; k < part(i); ++k) v *= Rational(1) - a * q.pow(n - i + k);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                v *= (Rational(1) - a * q.pow(j - i - 1)) /
                     (Rational(1) - a * q.pow(part(i) - part(j) + j - i - 1));
    } else if (kind == '+') {
        for (int i = 1; i <= n; ++i) {
            Rational num(1), den(1);
            for (long k = 0; k < 2 * part(i); ++k) num *= Rational(1) - a * q.pow(2 - 2 * i + k);
            for (long k = 0; k < part(i); ++k) den *= Rational(1) - a * q.pow(2 - i - n + k);
            v *= num / den;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                v *= (Rational(1) - a * q.pow(2 - i - j)) /
                     (Rational(1) - a * q.pow(part(i) + part(j) - i - j + 2));
    } else {
        for (int i = 1; i <= n; ++i)
            for (long k = 0; k < part(i); ++k) v *= Rational(1) - a * q.pow(1 - i + k);
    }
    return v;
}

bool bn_denominator_check(const std::vector<Rational>& y) {
    const int n = static_cast<int>(y.size());
    std::vector<std::vector<Rational>> M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j) {
            long e2 = 2 * (n - j) + 1;  // twice the exponent n-j+1/2
            M[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = y[static_cast<size_t>(i)].pow(e2) - y[static_cast<size_t>(i)].pow(-e2);
        }
    Rational lhs = det_bareiss(M);
    Rational rhs(1);
    for (int i = 0; i < n; ++i) {
        Rational x = y[static_cast<size_t>(i)].pow(2);
        rhs *= y[static_cast<size_t>(i)].pow(1 - 2 * n) * (Rational(1) - x);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational xi = y[static_cast<size_t>(i)].pow(2), xj = y[static_cast<size_t>(j)].pow(2);
            rhs *= (xi - xj) * (Rational(1) - xi * xj);
        }
    if ((static_cast<long>(n) * (n + 1) / 2) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

bool bn_denominator_plus_check(const std::vector<Rational>& y) {
    const int n = static_cast<int>(y.size());
    std::vector<std::vector<Rational>> M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
            long e2 = 2 * i - 1;  // increasing powers i - 1/2 down the rows
            M[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] = y[static_cast<size_t>(j)].pow(e2) + y[static_cast<size_t>(j)].pow(-e2);
        }
    Rational lhs = det_bareiss(M);
    Rational rhs(1);
    for (int i = 0; i < n; ++i) {
        Rational x = y[static_cast<size_t>(i)].pow(2);
        rhs *= y[static_cast<size_t>(i)].pow(1 - 2 * n) * (Rational(1) + x);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational xi = y[static_cast<size_t>(i)].pow(2), xj = y[static_cast<size_t>(j)].pow(2);
            rhs *= (xi - xj) * (Rational(1) - xi * xj);
        }
    return lhs == rhs;
}

} // namespace mmsum
