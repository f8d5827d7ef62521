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

#include "mmsum/hypergeo.hpp"

#include <algorithm>
#include <cmath>

namespace mmsum {

namespace {

Rational poch_rising(const Rational& x, long m) {
    Rational v(1);
    for (long j = 0; j < m; ++j) v *= x + Rational(j);
    return v;
}

long C2l(long x) { return x * (x - 1) / 2; }

} // namespace

namespace {

// (x;q)_k vanishes for some k <= range iff x = q^-j with 0 <= j < range.
void reject_vanishing_lower(const std::vector<QMono>& lower, long range) {
    for (auto& x : lower)
        if (x.sign == 1 && x.e <= 0 && x.e % 2 == 0 && -x.e / 2 < range)
            throw std::domain_error("vanishing denominator q-shifted factorial in range");
}

void reject_vanishing_lower(const std::vector<Rational>& lower, long N) {
    for (auto& b : lower)
        if (b.is_integer() && b.sgn() <= 0 && -static_cast<long>(b.num().convert_to<long long>()) < N)
            throw std::domain_error("vanishing denominator Pochhammer in range");
}

} // namespace

Rational hyper_terminating(const HyperSeries& s) {
    long N = -1;
    for (auto& a : s.upper)
        if (a.is_integer() && a.sgn() <= 0) {
            long cand = -static_cast<long>(a.num().convert_to<long long>());
            if (N < 0 || cand < N) N = cand;
        }
    if (N < 0) throw std::domain_error("hyper_terminating: no terminating upper parameter");
    for (auto& b : s.lower)
        if (b.is_integer() && b.sgn() <= 0 && -static_cast<long>(b.num().convert_to<long long>()) < N)
            throw std::domain_error("hyper_terminating: zero denominator before termination");
    Rational total(0), term(1);
    for (long l = 0; l <= N; ++l) {
        total += term;
        if (l == N) break;
        for (auto& a : s.upper) term *= a + Rational(l);
        for (auto& b : s.lower) term /= b + Rational(l);
        term *= s.z / Rational(l + 1);
    }
    return total;
}

QV qhyper_terminating(const QEnv& env, const std::vector<QMono>& upper, const std::vector<QMono>& lower,
                      const QMono& z, long N) {
    reject_vanishing_lower(lower, N);
    const long balance = static_cast<long>(lower.size()) - static_cast<long>(upper.size()) + 1;
    QV total = env.zero();
    for (long l = 0; l <= N; ++l) {
        QV term = env.one();
        for (auto& a : upper) term *= a.poch(env, l);
        if (term.is_zero()) break;  // the series terminated earlier
        for (auto& b : lower) term /= b.poch(env, l);
        term /= env.qpoch(1, 2, 2, l);  // (q;q)_l
        QV zf = QMono{z.sign, z.e}.value(env).pow(l);
        term *= zf;
        if (balance != 0) {
            QV bal = env.tpow(Rational(2 * C2l(l)));  // q^binom(l,2)
            if (l % 2 != 0) bal = env.zero() - bal;
            term *= bal.pow(balance);
        }
        total += term;
    }
    return total;
}

HGReport dixon_check(const Rational& a, const Rational& b, long N) {
    HGReport rep;
    try {
        HyperSeries s;
        s.upper = {a, b, Rational(-N)};
        s.lower = {Rational(1) + a - b, Rational(1) + a + Rational(N)};
        reject_vanishing_lower(s.lower, N);
        Rational lhs = hyper_terminating(s);
        Rational rhs = poch_rising(Rational(1) + a, N) * poch_rising(Rational(1) + a / Rational(2) - b, N) /
                       (poch_rising(Rational(1) + a / Rational(2), N) * poch_rising(Rational(1) + a - b, N));
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

HGReport f43sum_check(const Rational& a, const Rational& b, long N) {
    HGReport rep;
    try {
        Rational c(-N);
        HyperSeries s;
        s.upper = {a, a / Rational(2) + Rational(1), b, c};
        s.lower = {a / Rational(2), Rational(1) + a - b, Rational(1) + a - c};
        reject_vanishing_lower(s.lower, N);
        Rational lhs = hyper_terminating(s);
        // Gamma-quotient right side reduced to Pochhammers for c = -N
        Rational rhs = poch_rising(Rational(1) + a, N) *
                       poch_rising(Rational(1, 2) + a / Rational(2) - b, N) /
                       (poch_rising(Rational(1) + a - b, N) * poch_rising(Rational(1, 2) + a / Rational(2), N));
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

HGReport whipple_check(const Rational& a, const Rational& b, const Rational& c, const Rational& e,
                       const Rational& f, long N) {
    HGReport rep;
    try {
        Rational g = Rational(1) + a + b + c - e - f - Rational(N);  // balanced lower parameter
        HyperSeries s1;
        s1.upper = {a, b, c, Rational(-N)};
        s1.lower = {e, f, g};
        reject_vanishing_lower(s1.lower, N);
        Rational lhs = hyper_terminating(s1);
        HyperSeries s2;
        s2.upper = {Rational(-N), a, Rational(1) + a + c - e - f - Rational(N),
                    Rational(1) + a + b - e - f - Rational(N)};
        s2.lower = {g, Rational(1) + a - e - Rational(N), Rational(1) + a - f - Rational(N)};
        reject_vanishing_lower(s2.lower, N);
        Rational rhs = poch_rising(e - a, N) * poch_rising(f - a, N) /
                       (poch_rising(e, N) * poch_rising(f, N)) * hyper_terminating(s2);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

HGReport watson_check(const QEnv& env, const QMono& a, const QMono& b, const QMono& c, const QMono& d,
                      const QMono& e, long N) {
    HGReport rep;
    try {
        QMono q1 = QMono::q(1);
        QMono f{1, -2 * N};  // q^-N
        QMono z = a * q1 * a * q1 / (b * c * d * e * f);
        // very-well-poised 8phi7, written out
        QV lhs = env.zero();
        QV aval = a.value(env);
        for (long l = 0; l <= N; ++l) {
            QV term = (env.one() - aval * env.tpow(Rational(4 * l))) / (env.one() - aval);
            for (auto& x : {a, b, c, d, e, f}) term *= x.poch(env, l);
            if (term.is_zero()) break;
            for (auto& x : {q1, a * q1 / b, a * q1 / c, a * q1 / d, a * q1 / e, a * q1 / f})
                term /= x.poch(env, l);
            term *= z.value(env).pow(l);
            lhs += term;
        }
        // telescoped prefactor and the balanced 4phi3
        QV pre = (a * q1).poch(env, N) * (a * q1 / (d * e)).poch(env, N) /
                 ((a * q1 / d).poch(env, N) * (a * q1 / e).poch(env, N));
        QV rhs = pre * qhyper_terminating(env, {a * q1 / (b * c), d, e, f},
                                          {a * q1 / b, a * q1 / c, d * e * f / a}, q1, N);
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

// Sum over 0 <= k_1 < ... < k_r <= m of the well-poised multiple summand.
QV multiple_side(const QEnv& env, const QMono& A, const std::vector<QMono>& upper,
                 const std::vector<QMono>& lower, long m, int r) {
    reject_vanishing_lower(lower, m);
    QV total = env.zero();
    std::vector<long> k(static_cast<size_t>(r));
    QV Aval = A.value(env);
    std::function<void(int, long)> rec = [&](int depth, long from) {
        if (depth == r) {
            QV term = env.one();
            for (int i = 0; i < r; ++i) term *= env.tpow(Rational(2 * (2 * i + 1) * k[static_cast<size_t>(i)]));
            for (int i = 0; i < r && !term.is_zero(); ++i)
                for (int j = i + 1; j < r; ++j) {
                    long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                    QV dfac = env.one() - env.tpow(Rational(2 * (ki - kj)));
                    QV sfac = env.one() - Aval * env.tpow(Rational(2 * (ki + kj)));
                    term *= dfac.pow(2) * sfac.pow(2);
                }
            for (int i = 0; i < r && !term.is_zero(); ++i) {
                long ki = k[static_cast<size_t>(i)];
                term *= (env.one() - Aval * env.tpow(Rational(4 * ki))) / (env.one() - Aval);
                for (auto& x : upper) term *= x.poch(env, ki);
                if (term.is_zero()) break;
                for (auto& x : lower) term /= x.poch(env, ki);
            }
            total += term;
            return;
        }
        for (long v = from; v <= m; ++v) {
            k[static_cast<size_t>(depth)] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);
    return total;
}

} // namespace

HGReport multiple_series_transform_check(const QEnv& env, const QMono& a, const QMono& b, const QMono& c,
                                         const QMono& d, const QMono& e, const QMono& f, long m, int r) {
    HGReport rep;
    try {
        QMono q1 = QMono::q(1);
        QMono lam = a * a * QMono::q(2 - r) / (b * c * d);
        QMono qm{1, -2 * m};            // q^-m
        QMono qm1{1, 2 * (1 + m)};      // q^(1+m)
        QMono ef = e * f;
        QMono up7 = lam * a * QMono::q(2 - r + m) / ef;
        QMono low7 = ef * QMono::q(r - 1 - m) / lam;
        QV lhs = multiple_side(env, a, {a, b, c, d, e, f, up7, qm},
                               {q1, a * q1 / b, a * q1 / c, a * q1 / d, a * q1 / e, a * q1 / f, low7, a * qm1},
                               m, r);
        QV pre = env.one();
        for (int i = 1; i <= r; ++i) {
            pre *= b.poch(env, i - 1) * c.poch(env, i - 1) * d.poch(env, i - 1) * (ef / a).poch(env, i - 1);
            pre /= (lam * b / a).poch(env, i - 1) * (lam * c / a).poch(env, i - 1) *
                   (lam * d / a).poch(env, i - 1) * (ef / lam).poch(env, i - 1);
            pre *= (a * q1).poch(env, m) / (lam * q1).poch(env, m);
            pre *= (a * q1 / ef).poch(env, m - r + 1) / (lam * q1 / ef).poch(env, m - r + 1);
            pre *= (lam * q1 / e).poch(env, m - i + 1) * (lam * q1 / f).poch(env, m - i + 1);
            pre /= (a * q1 / e).poch(env, m - i + 1) * (a * q1 / f).poch(env, m - i + 1);
        }
        QV rhs = multiple_side(env, lam, {lam, lam * b / a, lam * c / a, lam * d / a, e, f, up7, qm},
                               {q1, a * q1 / b, a * q1 / c, a * q1 / d, lam * q1 / e, lam * q1 / f,
                                ef * QMono::q(r - 1 - m) / a, lam * qm1},
                               m, r);
        rhs = pre * rhs;
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

TruncatedProduct qpochhammer_inf_trunc(int sign, long m, int beta, const Rational& t0, long terms) {
    if (!(t0 > Rational(0) && t0 < Rational(1)))
        throw std::domain_error("qpochhammer_inf_trunc: needs 0 < t0 < 1");
    TruncatedProduct out;
    double t = t0.to_double();
    double v = 1.0;
    for (long j = 0; j < terms; ++j) v *= 1.0 - sign * std::pow(t, static_cast<double>(m + beta * j));
    out.value = v;
    double u = std::pow(t, static_cast<double>(m + beta * terms));
    if (u >= 0.5) throw std::domain_error("qpochhammer_inf_trunc: not enough terms for a bound");
    double tail = u / (1.0 - std::pow(t, static_cast<double>(beta)));
    out.bound = std::abs(v) * (std::exp(2.0 * tail) - 1.0) + 1e-15 * std::abs(v);
    return out;
}

NumericReport rains3_numeric_check(const QMono& a, const QMono& d, const QMono& e, const QMono& f, int r,
                                   const Rational& t0) {
    NumericReport out;
    QEnv env(t0);
    QMono q1 = QMono::q(1);
    if (d.sign != 1 || d.e >= 0 || d.e % 2 != 0)
        throw std::domain_error("rains3_numeric_check: needs terminating d = q^-N");
    const long N = -d.e / 2;
    // left side: exact finite sum (the d-Pochhammer vanishes past N)
    QMono zmono = a / (QMono::q(2 * r - 2) * d * e * f);
    reject_vanishing_lower(std::vector<QMono>{q1, a * q1 / d, a * q1 / e, a * q1 / f}, N);
    QV lhs = env.zero();
    std::vector<long> k(static_cast<size_t>(r));
    QV aval = a.value(env);
    std::function<void(int, long)> rec = [&](int depth, long from) {
        if (depth == r) {
            QV term = env.one();
            for (int i = 0; i < r; ++i) term *= env.tpow(Rational(2 * (2 * i + 1) * k[static_cast<size_t>(i)]));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                    term *= (env.one() - env.tpow(Rational(2 * (ki - kj)))).pow(2);
                    term *= (env.one() - aval * env.tpow(Rational(2 * (ki + kj)))).pow(2);
                }
            for (int i = 0; i < r && !term.is_zero(); ++i) {
                long ki = k[static_cast<size_t>(i)];
                term *= zmono.value(env).pow(ki) * (env.one() - aval * env.tpow(Rational(4 * ki))) /
                        (env.one() - aval);
                for (auto& x : {a, d, e, f}) term *= x.poch(env, ki);
                if (term.is_zero()) break;
                for (auto& x : {q1, a * q1 / d, a * q1 / e, a * q1 / f}) term /= x.poch(env, ki);
            }
            lhs += term;
            return;
        }
        for (long v = from; v <= N; ++v) {
            k[static_cast<size_t>(depth)] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);

    // right side: finite factors exactly, infinite-product ratio numerically
    QMono ef = e * f;
    QV fin = env.tpow(Rational(-2 * (static_cast<long>(r) * (r - 1) * (r - 2) / 6)));
    fin *= (a / ef).value(env).pow(static_cast<long>(r) * (r - 1) / 2);
    for (int i = 1; i <= r; ++i) {
        for (auto& x : {q1, d, e, f, ef / a, a * QMono::q(i - r) / d}) fin *= x.poch(env, i - 1);
        fin *= (a * QMono::q(2 - r) / d).poch(env, 2 * i - 2);
        for (auto& x : {a * q1 / d, a * QMono::q(2 - r) / (d * e), a * QMono::q(2 - r) / (d * f),
                        d * ef * QMono::q(r - 1) / a})
            fin /= x.poch(env, i - 1);
    }
    double inf_ratio = 1.0, rel_bound = 0.0;
    auto inf_factor = [&](const QMono& x, bool numerator) {
        TruncatedProduct tp = qpochhammer_inf_trunc(x.sign, x.e, 2, t0, 400);
        if (numerator) inf_ratio *= tp.value;
        else inf_ratio /= tp.value;
        rel_bound += tp.bound / std::abs(tp.value);
    };
    for (auto& x : {a * q1, a * q1 / ef, a * QMono::q(2 - r) / (d * e), a * QMono::q(2 - r) / (d * f)})
        inf_factor(x, true);
    for (auto& x : {a * QMono::q(2 - r) / d, a * QMono::q(2 - r) / (d * ef), a * q1 / e, a * q1 / f})
        inf_factor(x, false);
    double rhs = fin.rat().to_double() * std::pow(inf_ratio, r);
    out.lhs = lhs.rat().to_double();
    out.rhs = rhs;
    out.residual = std::abs(out.lhs - out.rhs);
    out.bound = std::abs(rhs) * (static_cast<double>(r) * rel_bound) +
                1e-10 * (std::abs(out.lhs) + std::abs(out.rhs) + 1.0);
    out.pass = out.residual <= out.bound;
    return out;
}

NumericReport rains4_numeric_check(const QMono& a, const QMono& c, const QMono& d, const QMono& e,
                                   const QMono& f, int r, const Rational& t0) {
    NumericReport out;
    QEnv env(t0);
    QMono q1 = QMono::q(1);
    if (d.sign != 1 || d.e >= 0 || d.e % 2 != 0)
        throw std::domain_error("rains4_numeric_check: needs terminating d = q^-N");
    const long N = -d.e / 2;
    reject_vanishing_lower(std::vector<QMono>{q1, a * q1 / d, a * q1 / e, a * q1 / f}, N);
    QMono zmono = a / (QMono::q(2 * r - 1) * d * e * f);
    QV aval = a.value(env), cval = c.value(env);
    QV cden = (env.one() - cval / env.tpow(Rational(2))) *
              (env.one() - aval * env.tpow(Rational(2)) / cval);
    QV lhs = env.zero();
    std::vector<long> k(static_cast<size_t>(r));
    std::function<void(int, long)> rec = [&](int depth, long from) {
        if (depth == r) {
            QV term = env.one();
            for (int i = 0; i < r; ++i) term *= env.tpow(Rational(2 * (2 * i + 1) * k[static_cast<size_t>(i)]));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    long ki = k[static_cast<size_t>(i)], kj = k[static_cast<size_t>(j)];
                    term *= (env.one() - env.tpow(Rational(2 * (ki - kj)))).pow(2);
                    term *= (env.one() - aval * env.tpow(Rational(2 * (ki + kj)))).pow(2);
                }
            for (int i = 0; i < r && !term.is_zero(); ++i) {
                long ki = k[static_cast<size_t>(i)];
                term *= zmono.value(env).pow(ki);
                term *= (env.one() - aval * env.tpow(Rational(4 * ki))) / (env.one() - aval);
                term *= (env.one() - cval * env.tpow(Rational(2 * (ki - 1)))) *
                        (env.one() - aval * env.tpow(Rational(2 * (ki + 1))) / cval) / cden;
                for (auto& x : {a, d, e, f}) term *= x.poch(env, ki);
                if (term.is_zero()) break;
                for (auto& x : {q1, a * q1 / d, a * q1 / e, a * q1 / f}) term /= x.poch(env, ki);
            }
            lhs += term;
            return;
        }
        for (long v = from; v <= N; ++v) {
            k[static_cast<size_t>(depth)] = v;
            rec(depth + 1, v + 1);
        }
    };
    rec(0, 0);

    QMono ef = e * f;
    // prefactor (-1)^r q^(2 binom(r+1,3)) (a / (q^(r-1) e f))^binom(r+1,2)
    QV fin = env.tpow(Rational(4 * ((static_cast<long>(r) + 1) * r * (r - 1) / 6)));
    if (r % 2 != 0) fin = env.zero() - fin;
    fin *= (a / (QMono::q(r - 1) * ef)).value(env).pow(static_cast<long>(r) * (r + 1) / 2);
    fin *= (a * QMono::q(2 - r) / (c * d)).poch(env, r) * (c * QMono::q(-r) / d).poch(env, r);
    fin /= (env.one() - aval * env.tpow(Rational(2)) / cval).pow(r) *
           (env.one() - cval / env.tpow(Rational(2))).pow(r);
    fin /= q1.poch(env, r) * (a * QMono::q(1 - r) / d).poch(env, r).pow(2);
    for (int i = 1; i <= r; ++i) {
        for (auto& x : {q1, e, f, a * QMono::q(i - r) / d}) fin *= x.poch(env, i);
        for (auto& x : {d, ef / a}) fin *= x.poch(env, i - 1);
        fin *= (a * QMono::q(1 - r) / d).poch(env, 2 * i);
        for (auto& x : {a * q1 / d, a * QMono::q(1 - r) / (d * e), a * QMono::q(1 - r) / (d * f)})
            fin /= x.poch(env, i);
        fin /= (d * ef * QMono::q(r) / a).poch(env, i - 1);
    }
    QV s_tot = env.zero();
    QMono ard = a * QMono::q(-r) / d;
    for (long sidx = 0; sidx <= r; ++sidx) {
        QV term = (env.one() - ard.value(env) * env.tpow(Rational(4 * sidx))) /
                  (env.one() - ard.value(env));
        for (auto& x : {ard, c / q1, a * q1 / c, a * QMono::q(1 - r) / (d * e),
                        a * QMono::q(1 - r) / (d * f), QMono::q(-r)})
            term *= x.poch(env, sidx);
        for (auto& x : {q1, a * QMono::q(2 - r) / (c * d), c * QMono::q(-r) / d, e, f, a * q1 / d})
            term /= x.poch(env, sidx);
        term *= (QMono::q(r) * ef / a).value(env).pow(sidx);
        s_tot += term;
    }
    double inf_ratio = 1.0, rel_bound = 0.0;
    auto inf_factor = [&](const QMono& x, bool numerator) {
        TruncatedProduct tp = qpochhammer_inf_trunc(x.sign, x.e, 2, t0, 400);
        if (numerator) inf_ratio *= tp.value;
        else inf_ratio /= tp.value;
        rel_bound += tp.bound / std::abs(tp.value);
    };
    for (auto& x : {a * q1, a * q1 / ef, a * QMono::q(1 - r) / (d * e), a * QMono::q(1 - r) / (d * f)})
        inf_factor(x, true);
    for (auto& x : {a * QMono::q(1 - r) / d, a * QMono::q(1 - r) / (d * ef), a * q1 / e, a * q1 / f})
        inf_factor(x, false);
    double rhs = (fin * s_tot).rat().to_double() * std::pow(inf_ratio, r);
    out.lhs = lhs.rat().to_double();
    out.rhs = rhs;
    out.residual = std::abs(out.lhs - out.rhs);
    out.bound = std::abs(rhs) * (static_cast<double>(r) * rel_bound) +
                1e-10 * (std::abs(out.lhs) + std::abs(out.rhs) + 1.0);
    out.pass = out.residual <= out.bound;
    return out;
}

} // namespace mmsum
