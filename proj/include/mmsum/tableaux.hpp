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
#include <optional>

#include "mmsum/partition.hpp"

namespace mmsum {

// Tableaux on the barred alphabet 1 < 1' < 2 < 2' < ... < n < n' (< infinity).
// Letters are coded as 2j-1 (plain j), 2j (barred j) and 2n+1 (infinity).
//   Sundaram:      entries in row k at least k, infinity once per row
//   King:          entries in row k at least k, no infinity
//   EvenSundaram:  entries in row k at least barred k, infinity once per row
enum class TabKind { Sundaram, King, EvenSundaram };

struct Tableau {
    std::vector<std::vector<int>> rows;
    int n = 0;  // alphabet size parameter

    long size() const {
        long s = 0;
        for (auto& row : rows) s += static_cast<long>(row.size());
        return s;
    }
    long height() const { return static_cast<long>(rows.size()); }
    long count_letter(int code) const {
        long c = 0;
        for (auto& row : rows)
            for (int v : row)
                if (v == code) ++c;
        return c;
    }
    long m_infinity() const { return count_letter(2 * n + 1); }

    // Plain-text grid, bar letters as "1b", infinity as "inf".
    std::string text() const;
};

// Visits every tableau of the kind with height <= n and width <= r; when
// `shape` is given only that shape is generated.
void tableaux_foreach(TabKind kind, int r, int n, const std::optional<GPartition>& shape,
                      const std::function<void(const Tableau&)>& visit);

enum class TabWeighting { Plain, SignSize, SignMInfinity, HeightExactN };

// Count by explicit generation.
BigInt tableau_count_generated(TabKind kind, int r, int n, TabWeighting w = TabWeighting::Plain);

// Closed-form product count; throws for unsupported (kind, weighting) pairs.
Rational tableau_count_closed(TabKind kind, int r, int n, TabWeighting w = TabWeighting::Plain);

// Weight generating sum over all tableaux of the given shape: the monomials
// prod y_k^(2(m_k - m_k')) (infinity contributes nothing). Defined for the
// Sundaram and King models.
Rational tableau_weight_sum(TabKind kind, const GPartition& shape, const std::vector<Rational>& y);

} // namespace mmsum
