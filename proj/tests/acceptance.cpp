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

// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is pinned here.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "mmsum/catalog.hpp"
#include "mmsum/continuous.hpp"
#include "mmsum/hypergeo.hpp"
#include "mmsum/pfaffian.hpp"
#include "mmsum/sampling.hpp"
#include "mmsum/tableaux.hpp"

using namespace mmsum;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    ~Criterion() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream os;
        os << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)";
        if (!ok) os << "  -- " << detail;
        std::cout << os.str() << std::endl;
        if (!ok) ++failures;
    }
};

Params P(int r, const HalfInt& n) {
    Params q;
    q.r = r;
    q.n = n;
    return q;
}

std::vector<HalfInt> values(const char* lo, const char* hi, bool halves) {
    std::vector<HalfInt> out;
    HalfInt step = HalfInt(1);
    for (HalfInt v = HalfInt::parse(lo); v <= HalfInt::parse(hi); v += step) out.push_back(v);
    if (halves)
        for (HalfInt v = HalfInt::parse(lo) + HalfInt::half(); v <= HalfInt::parse(hi); v += step)
            out.push_back(v);
    return out;
}

} // namespace

int main() {
    std::cout << "acceptance suite" << std::endl;

    {  // 1: exponent-1 D-type sum, brute force vs closed form
        Criterion c("1  D-type gamma=1/2 delta=0: brute force equals closed form, r in 2..4");
        for (int r = 2; r <= 4; ++r)
            for (long n = r - 1; n <= r + 3; ++n) {
                SumSpec s;
                s.alpha = 2;
                s.two_gamma = 1;
                s.delta = 0;
                s.r = r;
                s.n = HalfInt(n);
                Rational lhs = discrete_mm_sum_naive(s);
                QV rhs = closed_form_rhs("S2h0", P(r, HalfInt(n)), QEnv());
                c.require(QV(lhs) == rhs, "mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n));
            }
        QV spot = q_sum_lhs("S2h0", P(3, HalfInt(2)), QEnv());
        c.require(spot == QV(Rational(6912)), "spot value r=3 n=2 != 6912");
    }

    {  // 2: B-type gamma=1/2 delta=1 at r=2 against the literal product formula
        Criterion c("2  B-type r=2: S = 2n^3(n-1)/(2n-1) binom(2n,n)^2 for n <= 6");
        for (long n = 1; n <= 6; ++n) {
            SumSpec s;
            s.alpha = 2;
            s.two_gamma = 1;
            s.delta = 1;
            s.r = 2;
            s.n = HalfInt(n);
            Rational lhs = discrete_mm_sum_naive(s);
            Rational want = Rational(2) * Rational(n).pow(3) * Rational(n - 1) / Rational(2 * n - 1) *
                            Rational(big_binomial(2 * n, n)).pow(2);
            c.require(lhs == want, "mismatch at n=" + std::to_string(n));
        }
        c.require(q_sum_lhs("S2h1", P(2, HalfInt(2)), QEnv()) == QV(Rational(192)), "spot n=2 != 192");
    }

    {  // 3: the ten closed-form evaluations over the full desk grid
        Criterion c("3  ten-identity suite: r <= 4, n <= 4 (half-integers where admitted)");
        const char* ids[] = {"S1h0", "S110", "S111", "S2h0", "S2h1", "S2h2", "S210", "S211", "S212", "S213"};
        for (auto* id : ids) {
            const IdentityDescriptor& d = find_identity(id);
            bool halves = d.n_parity == IdentityDescriptor::Parity::Both;
            for (int r = 1; r <= 4; ++r)
                for (auto& n : values("0", "4", halves)) {
                    Params q = P(r, n);
                    if (!d.params_ok(q)) {
                        // excluded pole points: the sum itself vanishes
                        if (n.sgn() >= 0)
                            c.require(d.plain_lhs(q).is_zero(),
                                      std::string(id) + " excluded point with nonzero sum");
                        continue;
                    }
                    auto rep = verify_identity(id, q, QEnv());
                    c.require(rep.equal, std::string(id) + " " + q.str() + " " + rep.message);
                }
        }
        c.require(q_sum_lhs("S210", P(2, HalfInt(2)), QEnv()) == QV(Rational(768)), "spot S210(2,2)");
        c.require(q_sum_lhs("S111", P(2, HalfInt(2)), QEnv()) == QV(Rational(576)), "spot S111(2,2)");
    }

    {  // 4: q-analogues and parameter extensions
        Criterion c("4  q-suite: symbolic r <= 2 (point mode at r = 3), n, m <= 3, p <= 2");
        const char* ids[] = {"S1h0-q", "S2h1-q", "S2h0-q", "S2h2-q", "S210-q", "S211-q", "S211-qh",
                             "S212-q", "S213-q", "S213-qh", "S110-q", "S111-m", "S111-mh",
                             "alt-S212-qp", "alt-S212-q"};
        std::vector<Rational> points = {Rational(1, 2), Rational(1, 3)};
        for (auto* id : ids) {
            const IdentityDescriptor& d = find_identity(id);
            bool halves = d.n_parity != IdentityDescriptor::Parity::Integer;
            auto ns = values("0", "3", halves);
            for (int r = 1; r <= 3; ++r)
                for (auto& n : ns) {
                    std::vector<HalfInt> ms = d.uses_m ? ns : std::vector<HalfInt>{HalfInt(0)};
                    for (auto& m : ms) {
                        std::vector<HalfInt> ps =
                            d.uses_p ? values("0", "2", false) : std::vector<HalfInt>{HalfInt(0)};
                        for (auto& p : ps) {
                            Params q = P(r, n);
                            if (d.uses_m) q.m = m;
                            if (d.uses_p) q.p = p;
                            if (!d.params_ok(q)) continue;
                            if (r <= 2 || !d.is_q) {
                                auto rep = verify_identity(id, q, QEnv());
                                c.require(rep.equal, std::string(id) + " " + q.str() + " " + rep.message);
                            } else {
                                for (auto& t0 : points) {
                                    auto rep = verify_identity(id, q, QEnv(t0));
                                    c.require(rep.equal, std::string(id) + " " + q.str() + " at t0=" +
                                                             t0.str() + " " + rep.message);
                                }
                            }
                        }
                    }
                }
        }
    }

    {  // 5: tableaux data and counting formulas
        Criterion c("5  tableaux: published 2x2 data; closed forms match generation, r, n <= 3");
        std::map<std::vector<long>, long> bd;
        std::map<long, long> hist;
        tableaux_foreach(TabKind::Sundaram, 2, 2, std::nullopt, [&](const Tableau& t) {
            std::vector<long> s;
            for (auto& row : t.rows) s.push_back(static_cast<long>(row.size()));
            bd[s]++;
            hist[t.m_infinity()]++;
        });
        std::map<std::vector<long>, long> want_s{{{}, 1},     {{1}, 5},    {{1, 1}, 10},
                                                 {{2}, 14},   {{2, 1}, 35}, {{2, 2}, 35}};
        c.require(bd == want_s, "sundaram 2x2 shape breakdown");
        c.require(hist[0] == 50 && hist[1] == 40 && hist[2] == 10, "sundaram 2x2 infinity histogram");
        c.require(tableau_count_generated(TabKind::Sundaram, 2, 2, TabWeighting::SignSize) == 20 &&
                      tableau_count_generated(TabKind::Sundaram, 2, 2, TabWeighting::SignMInfinity) == 20,
                  "sundaram signed counts");
        bd.clear();
        tableaux_foreach(TabKind::King, 2, 2, std::nullopt, [&](const Tableau& t) {
            std::vector<long> s;
            for (auto& row : t.rows) s.push_back(static_cast<long>(row.size()));
            bd[s]++;
        });
        std::map<std::vector<long>, long> want_k{{{}, 1},   {{1}, 4},     {{1, 1}, 5},
                                                 {{2}, 10}, {{2, 1}, 16}, {{2, 2}, 14}};
        c.require(bd == want_k, "symplectic 2x2 shape breakdown");
        c.require(tableau_count_generated(TabKind::King, 2, 2, TabWeighting::SignSize) == 10,
                  "symplectic signed count");
        bd.clear();
        tableaux_foreach(TabKind::EvenSundaram, 2, 2, std::nullopt, [&](const Tableau& t) {
            std::vector<long> s;
            for (auto& row : t.rows) s.push_back(static_cast<long>(row.size()));
            bd[s]++;
        });
        std::map<std::vector<long>, long> want_e{{{}, 1},  {{1}, 4},     {{1, 1}, 6},
                                                 {{2}, 9}, {{2, 1}, 16}, {{2, 2}, 10}};
        c.require(bd == want_e, "even 2x2 shape breakdown");
        c.require(tableau_count_generated(TabKind::EvenSundaram, 2, 2, TabWeighting::HeightExactN) == 32,
                  "even 2x2 height-2 count");
        for (int r = 0; r <= 3; ++r)
            for (int n = 0; n <= 3; ++n) {
                auto eq = [&](TabKind k, TabWeighting w) {
                    return Rational(tableau_count_generated(k, r, n, w)) == tableau_count_closed(k, r, n, w);
                };
                c.require(eq(TabKind::Sundaram, TabWeighting::Plain) &&
                              eq(TabKind::Sundaram, TabWeighting::SignSize) &&
                              eq(TabKind::Sundaram, TabWeighting::SignMInfinity) &&
                              eq(TabKind::King, TabWeighting::Plain) &&
                              eq(TabKind::King, TabWeighting::SignSize) &&
                              eq(TabKind::EvenSundaram, TabWeighting::Plain) &&
                              eq(TabKind::EvenSundaram, TabWeighting::HeightExactN),
                          "closed-form count r=" + std::to_string(r) + " n=" + std::to_string(n));
            }
    }

    {  // 6: rectangular character sums and their specialisations
        Criterion c("6  character sums: 3 random points (r <= 3, n <= 2); corollaries r, n <= 3");
        std::mt19937_64 rng(2026);
        for (int r = 0; r <= 3; ++r)
            for (int n = 1; n <= 2; ++n)
                for (int trial = 0; trial < 3; ++trial) {
                    auto y = random_generic_y(rng, static_cast<size_t>(n));
                    for (int eps : {1, -1})
                        c.require(okada_sum_check("sososo", r, n, y, eps).equal, "sososo");
                    c.require(okada_sum_check("spspso", r, n, y).equal, "spspso");
                    if (r >= 1) {
                        c.require(okada_sum_check("sososo2", r, n, y).equal, "sososo2");
                        c.require(okada_sum_check("ooso", r, n, y).equal, "ooso");
                    }
                }
        for (long r = 0; r <= 3; ++r)
            for (int n = 1; n <= 3; ++n) {
                for (const char* cor : {"B-sum-a", "B-sum-b+", "B-sum-b-", "Sp-heel", "Sp-half"})
                    c.require(corollary_spec_check(cor, r, n).equal, cor);
                if (r >= 1)
                    for (const char* cor : {"D-spec-1", "D-spec-2"})
                        c.require(corollary_spec_check(cor, r, n).equal, cor);
            }
    }

    {  // 7: Pfaffian theorems
        Criterion c("7  Pfaffians: minor summation, skew evaluation, key minor identity");
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        for (size_t n : {2u, 4u})
            for (size_t r = n; r <= 6; ++r)
                for (int trial = 0; trial < 5; ++trial) {
                    Matrix<Rational> M(n, std::vector<Rational>(r));
                    for (auto& row : M)
                        for (auto& v : row) v = Rational(num(rng), den(rng));
                    c.require(minor_summation_check(M).equal,
                              "minor summation n=" + std::to_string(n) + " r=" + std::to_string(r));
                }
        for (size_t n : {2u, 4u})
            for (int trial = 0; trial < 5; ++trial) {
                auto y = random_generic_y(rng, n);
                std::vector<Rational> x, a, b;
                for (auto& v : y) x.push_back(v * v);
                for (size_t i = 0; i < n; ++i) {
                    a.push_back(Rational(num(rng), den(rng)));
                    b.push_back(Rational(num(rng), den(rng)));
                }
                c.require(okada_pfaffian_check(x, a, b).equal, "skew evaluation n=" + std::to_string(n));
            }
        for (long r = 2; r <= 4; ++r)
            for (const char* a : {"0", "1/2", "1"})
                for (int eps : {1, -1})
                    for (int trial = 0; trial < 5; ++trial) {
                        auto y = random_generic_y(rng, 2);
                        c.require(cor_key_check(y, r, HalfInt::parse(a), eps).equal,
                                  std::string("key identity r=") + std::to_string(r) + " a=" + a);
                    }
    }

    {  // 8: hypergeometric machinery
        Criterion c("8  series transform (r, m <= 3) and classical summations");
        std::mt19937_64 rng(4242);
        std::uniform_int_distribution<int> me(-3, 4), pn(-6, 8), pd(1, 2), Nn(0, 4);
        QEnv env(Rational(1, 2));
        for (int r = 1; r <= 3; ++r)
            for (long m = 1; m <= 3; ++m) {
                int done = 0, guard = 0;
                while (done < 3 && guard++ < 500) {
                    QMono a = QMono::q(me(rng)), b = QMono::q(me(rng)), cc = QMono::q(me(rng)),
                          d = QMono::q(me(rng)), e = QMono::q(me(rng)), f = QMono::q(me(rng));
                    auto rep = multiple_series_transform_check(env, a, b, cc, d, e, f, m, r);
                    if (rep.error) continue;
                    c.require(rep.equal, "transform r=" + std::to_string(r) + " m=" + std::to_string(m));
                    ++done;
                }
                c.require(done == 3, "could not sample admissible transform parameters");
            }
        auto grid = [&](const char* name, const std::function<HGReport()>& gen, int want) {
            int done = 0, guard = 0;
            while (done < want && guard++ < 800) {
                auto rep = gen();
                if (rep.error) continue;
                c.require(rep.equal, name);
                ++done;
            }
            c.require(done == want, std::string("sampling failed for ") + name);
        };
        grid("dixon", [&] { return dixon_check(Rational(pn(rng), pd(rng)), Rational(pn(rng), pd(rng)), Nn(rng)); }, 20);
        grid("4F3 summation", [&] { return f43sum_check(Rational(pn(rng), pd(rng)), Rational(pn(rng), pd(rng)), Nn(rng)); }, 20);
        grid("whipple", [&] {
            return whipple_check(Rational(pn(rng), pd(rng)), Rational(pn(rng), pd(rng)),
                                 Rational(pn(rng), pd(rng)), Rational(pn(rng), pd(rng)),
                                 Rational(pn(rng), pd(rng)), Nn(rng));
        }, 20);
        for (auto t0 : {Rational(1, 3), Rational(1, 2)}) {
            QEnv wenv(t0);
            grid("watson", [&] {
                QMono a = QMono::q(std::uniform_int_distribution<int>(0, 3)(rng));
                a.e *= 2;
                return watson_check(wenv, a, QMono::q(me(rng)), QMono::q(me(rng)), QMono::q(me(rng)),
                                    QMono::q(me(rng)), Nn(rng));
            }, 3);
        }
        // numeric one-sided limits stay within their truncation bounds
        for (auto t0 : {Rational(1, 2), Rational(2, 3)}) {
            auto rep = rains3_numeric_check(QMono::q(2), QMono::q(-1), QMono::q(-1), QMono::q(1), 1, t0);
            c.require(rep.pass, "one-sided numeric check r=1");
            auto rep2 = rains3_numeric_check(QMono::q(3), QMono::q(-2), QMono::q(-1), QMono::q(2), 2, t0);
            c.require(rep2.pass, "one-sided numeric check r=2");
            auto rep4 = rains4_numeric_check(QMono::q(2), QMono::q(2), QMono::q(-1), QMono::q(-1),
                                             QMono::q(1), 1, t0);
            c.require(rep4.pass, "one-sided numeric check with correction sum");
        }
    }

    {  // 9: alternating sums
        Criterion c("9  alternating: three-box symbolic r <= 2; diagonal closed form n <= 6, r <= 3");
        const IdentityDescriptor& d = find_identity("alt-S212-qp");
        for (int r = 1; r <= 2; ++r)
            for (long n = 0; n <= 2; ++n)
                for (long m = 0; m <= 2; ++m)
                    for (long p = 0; p <= 2; ++p) {
                        Params q = P(r, HalfInt(n));
                        q.m = HalfInt(m);
                        q.p = HalfInt(p);
                        if (!d.params_ok(q)) continue;
                        auto rep = verify_identity("alt-S212-qp", q, QEnv());
                        c.require(rep.equal, "three-box " + q.str() + " " + rep.message);
                    }
        for (int r = 1; r <= 3; ++r)
            for (long n = 0; n <= 6; ++n) {
                Params q = P(r, HalfInt(n));
                auto rep = verify_identity("alt-S212", q, QEnv());
                c.require(rep.equal, "alt diagonal " + q.str());
                Rational lhs = Rational::parse(rep.lhs);
                if (n != r) c.require(lhs.is_zero(), "alt should vanish off the diagonal");
                else {
                    Rational want = Rational(big_factorial(r)) * Rational(big_factorial(2 * r)).pow(r);
                    if ((r * (r + 1) / 2) % 2 != 0) want = -want;
                    c.require(lhs == want, "alt diagonal value");
                }
            }
    }

    {  // 10: scaled limit
        Criterion c("10 limit: scaled D-type sum approaches the Gaussian moment (final error < 5%)");
        std::vector<HalfInt> ns = {HalfInt(4), HalfInt(8), HalfInt(16), HalfInt(32)};
        auto rep = limit_check(2, HalfInt::half(), 0, 2, ns, 0.05);
        c.require(rep.decreasing, "relative errors are not strictly decreasing");
        c.require(rep.final_rel_err < 0.05, "final relative error at n=32 exceeds 5%");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
