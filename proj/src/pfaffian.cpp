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

#include "mmsum/pfaffian.hpp"

namespace mmsum {

namespace {

void subsets_rec(size_t from, size_t need, size_t limit, std::vector<size_t>& cur,
                 const std::function<void(const std::vector<size_t>&)>& fn) {
    if (need == 0) {
        fn(cur);
        return;
    }
    for (size_t j = from; j + need <= limit + 1 && j < limit; ++j) {
        cur.push_back(j);
        subsets_rec(j + 1, need - 1, limit, cur, fn);
        cur.pop_back();
    }
}

void for_each_subset(size_t r, size_t n, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> cur;
    subsets_rec(0, n, r, cur, fn);
}

} // namespace

Rational det_rational(const Matrix<Rational>& M) { return det_bareiss(M); }

PfCheckReport minor_summation_check(const Matrix<Rational>& M) {
    PfCheckReport rep;
    try {
        const size_t n = M.size();
        const size_t r = n ? M[0].size() : 0;
        if (n % 2 != 0) throw std::domain_error("minor_summation_check: n must be even");
        if (n > r) throw std::domain_error("minor_summation_check: needs n <= r");
        Rational lhs(0);
        for_each_subset(r, n, [&](const std::vector<size_t>& J) {
            Matrix<Rational> sub(n, std::vector<Rational>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) sub[i][j] = M[i][J[j]];
            lhs += det_rational(sub);
        });
        // B = M A M^t with A_ij = 1 for j > i, -1 for j < i
        Matrix<Rational> B(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (size_t k = 0; k < r; ++k)
                    for (size_t l = 0; l < r; ++l) {
                        if (k == l) continue;
                        Rational a = (l > k) ? Rational(1) : Rational(-1);
                        acc += M[i][k] * a * M[j][l];
                    }
                B[i][j] = acc;
            }
        Rational rhs = pfaffian_elimination(B);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

PfCheckReport okada_pfaffian_check(const std::vector<Rational>& x, const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) {
    PfCheckReport rep;
    try {
        const size_t n = x.size();
        if (n % 2 != 0) throw std::domain_error("okada_pfaffian_check: n must be even");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (x[i] == x[j] || x[i] * x[j] == Rational(1))
                    throw std::domain_error("okada_pfaffian_check: degenerate x");
        auto qq = [](const Rational& al, const Rational& be, const Rational& ga, const Rational& de) {
            return (al - be) * (Rational(1) - ga * de) - (Rational(1) - al * be) * (ga - de);
        };
        Matrix<Rational> Q(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j)
                    Q[i][j] = qq(x[i], x[j], a[i], a[j]) * qq(x[i], x[j], b[i], b[j]) /
                              ((x[i] - x[j]) * (Rational(1) - x[i] * x[j]));
        auto W = [&](const std::vector<Rational>& c) {
            Matrix<Rational> out(n, std::vector<Rational>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 1; j <= n; ++j)
                    out[i][j - 1] = c[i] * x[i].pow(static_cast<long>(n - j)) - x[i].pow(static_cast<long>(j - 1));
            return out;
        };
        Rational rhs = det_rational(W(a)) * det_rational(W(b));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                rhs /= (x[i] - x[j]) * (Rational(1) - x[i] * x[j]);
        Rational lhs = pfaffian_elimination(Q);
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

PfCheckReport cor_key_check(const std::vector<Rational>& y, long r, const HalfInt& a, int eps) {
    PfCheckReport rep;
    try {
        const size_t n = y.size();
        if (n % 2 != 0) throw std::domain_error("cor_key_check: n must be even");
        if (r < static_cast<long>(n)) throw std::domain_error("cor_key_check: needs r >= n");
        auto xp = [&](size_t i, const HalfInt& e) { return y[i].pow(e.twice_long()); };
        // M_ij = x^(j-a) - eps x^(-(j-a))
        Matrix<Rational> M(n, std::vector<Rational>(static_cast<size_t>(r)));
        for (size_t i = 0; i < n; ++i)
            for (long j = 1; j <= r; ++j) {
                HalfInt e = HalfInt(j) - a;
                M[i][static_cast<size_t>(j - 1)] = xp(i, e) - Rational(eps) * xp(i, -e);
            }
        Rational lhs(0);
        for_each_subset(static_cast<size_t>(r), n, [&](const std::vector<size_t>& J) {
            Matrix<Rational> sub(n, std::vector<Rational>(n));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) sub[i][j] = M[i][J[j]];
            lhs += det_rational(sub);
        });
        // RHS: (-1)^(n/2) det(x^(r/2+n/2-j-a+1) - eps x^-(r/2+n/2-a-j+1))
        //      * det(x^(r/2+n/2-j+1/2) - x^-(...)) / det(x^(n-j+1/2) - x^-(...))
        HalfInt rn2 = HalfInt::from_twice(r + static_cast<long>(n));  // r/2 + n/2
        auto build = [&](const std::function<HalfInt(long)>& expo, int sign) {
            Matrix<Rational> out(n, std::vector<Rational>(n));
            for (size_t i = 0; i < n; ++i)
                for (long j = 1; j <= static_cast<long>(n); ++j) {
                    HalfInt e = expo(j);
                    out[i][static_cast<size_t>(j - 1)] = xp(i, e) - Rational(sign) * xp(i, -e);
                }
            return out;
        };
        Rational d1 = det_rational(build([&](long j) { return rn2 - HalfInt(j) - a + HalfInt(1); }, eps));
        Rational d2 =
            det_rational(build([&](long j) { return rn2 - HalfInt(j) + HalfInt::half(); }, 1));
        Rational d3 = det_rational(
            build([&](long j) { return HalfInt(static_cast<long>(n) - j) + HalfInt::half(); }, 1));
        Rational rhs = d1 * d2 / d3;
        if ((n / 2) % 2 != 0) rhs = -rhs;
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
        rep.equal = (lhs == rhs);
    } catch (const std::exception& ex) {
        rep.error = true;
        rep.message = ex.what();
    }
    return rep;
}

} // namespace mmsum
