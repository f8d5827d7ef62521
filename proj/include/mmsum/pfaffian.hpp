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

#include <vector>

#include "mmsum/characters.hpp"

namespace mmsum {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
void check_skew(const Matrix<F>& M) {
    const size_t n = M.size();
    if (n % 2 != 0) throw std::domain_error("pfaffian: odd size");
    for (size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::domain_error("pfaffian: not square");
        if (!(M[i][i] == F(0))) throw std::domain_error("pfaffian: nonzero diagonal");
        for (size_t j = i + 1; j < n; ++j)
            if (!(M[i][j] == F(0) - M[j][i])) throw std::domain_error("pfaffian: not skew-symmetric");
    }
}

// Expansion over perfect matchings with crossing signs, written as the
// recursive expansion along the first row. Exponential; meant for size <= 8.
template <typename F>
F pfaffian_matchings(const Matrix<F>& M) {
    const size_t n = M.size();
    if (n == 0) return F(1);
    if (n > 8) throw std::domain_error("pfaffian_matchings: size capped at 8");
    check_skew(M);
    std::function<F(const std::vector<size_t>&)> rec = [&](const std::vector<size_t>& idx) -> F {
        if (idx.empty()) return F(1);
        F acc(0);
        for (size_t j = 1; j < idx.size(); ++j) {
            std::vector<size_t> rest;
            for (size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            F term = M[idx[0]][idx[j]] * rec(rest);
            if (j % 2 == 0) term = F(0) - term;
            acc += term;
        }
        return acc;
    };
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    return rec(all);
}

// Skew-symmetric Gaussian elimination with exact pivoting; works over any
// exact field (rationals, rational functions).
template <typename F>
F pfaffian_elimination(Matrix<F> M) {
    const size_t n = M.size();
    if (n == 0) return F(1);
    check_skew(M);
    F result(1);
    for (size_t k = 0; k + 1 < n; k += 2) {
        // pivot: bring a nonzero into (k, k+1), swapping rows and columns in sync
        size_t piv = k + 1;
        while (piv < n && M[k][piv] == F(0)) ++piv;
        if (piv == n) return F(0);
        if (piv != k + 1) {
            std::swap(M[piv], M[k + 1]);
            for (auto& row : M) std::swap(row[piv], row[k + 1]);
            result = F(0) - result;
        }
        F pivot = M[k][k + 1];
        result *= pivot;
        // Row operations L zero out columns k, k+1 below the pivot pair. The
        // matching column operations L^t leave the trailing block untouched
        // because the cleared entries are its only coupling, so the block of
        // L M stays skew and no extra work is needed.
        for (size_t i = k + 2; i < n; ++i) {
            F a = M[i][k] / pivot;
            F b = M[i][k + 1] / pivot;
            for (size_t j = k; j < n; ++j)
                M[i][j] = M[i][j] + a * M[k + 1][j] - b * M[k][j];
        }
    }
    return result;
}

Rational det_rational(const Matrix<Rational>& M);

struct PfCheckReport {
    bool equal = false;
    bool error = false;
    std::string message;
    std::string lhs, rhs;
};

// Sum of all maximal n x n minors of an n x r matrix equals the Pfaffian of
// M A M^t, A the all-ones-above-the-diagonal skew matrix.
PfCheckReport minor_summation_check(const Matrix<Rational>& M);

// The skew matrix Q(x; a, b) built from
//   q(al, be, ga, de) = (al - be)(1 - ga de) - (1 - al be)(ga - de)
// has Pfaffian det W(x;a) det W(x;b) / prod (x_i - x_j)(1 - x_i x_j), with
// W_ij = a_i x_i^(n-j) - x_i^(j-1).
PfCheckReport okada_pfaffian_check(const std::vector<Rational>& x, const std::vector<Rational>& a,
                                   const std::vector<Rational>& b);

// Minor sum of M_ij = x_i^(j-a) - eps x_i^(a-j) against the closed
// determinant-ratio form; inputs as y with x = y^2 (2a integral).
PfCheckReport cor_key_check(const std::vector<Rational>& y, long r, const HalfInt& a, int eps);

} // namespace mmsum
