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

#include "mmsum/partition.hpp"
#include "mmsum/ratfun.hpp"

namespace mmsum {

// Classical group characters evaluated exactly. Inputs are given as y with
// x = y^2 so that all half-powers of x are Laurent monomials in y.
enum class CharFamily { Schur, SoOdd, SoOddPlus, Sp, SoEven, OEven };

// Fraction-free (Bareiss) determinant over exact rationals.
Rational det_bareiss(std::vector<std::vector<Rational>> M);

// Exact character value at x = y^2; throws on a non-generic point (zero
// denominator determinant).
Rational char_eval(CharFamily fam, const GPartition& lam, const std::vector<Rational>& y);

// Closed-form principal specialisations as rational functions of t = q^(1/2).
// The *Dual kinds take the conjugate shape inside a width-r box.
enum class PSKind {
    SchurInt,      // s(1, q, ..., q^(n-1))
    SchurDual,
    SchurHalf,     // s(q^(1/2), ..., q^(n-1/2))
    SoOddInt,      // so(q, ..., q^n)
    SoOddDualInt,
    SoOddHalf,     // so(q^(1/2), ..., q^(n-1/2))
    SoOddDualHalf,
    SoPlusHalf,
    SpInt,
    SpDualInt,
    SpHalf,
    SpDualHalf,
    OHalf,
    ODualHalf,
    SoEvenHalf,
};

// negate_t applies the formal substitution t -> -t (used by the sign-twisted
// specialisations).
RationalFunction char_principal_spec(PSKind kind, const GPartition& lam, int n, long r = 0,
                                     bool negate_t = false);

struct CheckReport {
    bool equal = false;
    bool error = false;
    std::string message;
    std::string lhs, rhs;
};

// Rectangular character-sum identities: the sum of characters over all shapes
// in the box (r^n) equals a product of two rectangular characters.
//   "sososo"  (with eps = +1/-1), "spspso", "sososo2", "ooso"
CheckReport okada_sum_check(const std::string& theorem, int r, int n, const std::vector<Rational>& y,
                            int eps = 1);

// Principally specialised corollaries, verified as symbolic identities in t:
//   "B-sum-a", "B-sum-b+", "B-sum-b-", "Sp-heel", "Sp-half", "D-spec-1", "D-spec-2"
CheckReport corollary_spec_check(const std::string& cor, long r, int n);

// The x_n -> 0 reduction: x_n^r * char tends to the (n-1)-variable character
// of (lam_2, ..., lam_n) when r = lam_1, and to 0 when r > lam_1.
CheckReport char_reduce_check(CharFamily fam, const GPartition& lam, const std::vector<Rational>& y_head,
                              long r);

// Generalised shifted-factorial weights attached to a partition: kind is one
// of '-', '+', '0'; `explicit_form` selects the row-product expression.
Rational c_weight(char kind, const GPartition& lam, const Rational& a, const Rational& q);
Rational c_weight_explicit(char kind, const GPartition& lam, const Rational& a, const Rational& q, int n);

// Determinant evaluations behind the odd-orthogonal denominators; columns in
// increasing-power order.
bool bn_denominator_check(const std::vector<Rational>& y);       // minus form
bool bn_denominator_plus_check(const std::vector<Rational>& y);  // plus form

} // namespace mmsum
