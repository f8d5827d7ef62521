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

#include "mmsum/tableaux.hpp"

namespace mmsum {

std::string Tableau::text() const {
    std::string out;
    const int inf = 2 * n + 1;
    for (auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += " ";
            int v = row[j];
            if (v == inf) out += "inf";
            else if (v % 2 == 0) out += std::to_string(v / 2) + "b";
            else out += std::to_string((v + 1) / 2);
        }
        out += "\n";
    }
    if (rows.empty()) out = "(empty)\n";
    return out;
}

namespace {

struct Gen {
    TabKind kind;
    int r, n, inf;
    bool has_inf;
    std::vector<long> shape;
    Tableau grid;
    const std::function<void(const Tableau&)>* visit;

    int row_min(int row1) const {  // 1-based row index
        return kind == TabKind::EvenSundaram ? 2 * row1 : 2 * row1 - 1;
    }

    void fill(size_t i, size_t j) {
        if (i == shape.size()) {
            (*visit)(grid);
            return;
        }
        size_t ni = i, nj = j + 1;
        if (nj >= static_cast<size_t>(shape[i])) { ni = i + 1; nj = 0; }
        int lo = row_min(static_cast<int>(i) + 1);
        int hi = has_inf ? inf : 2 * n;
        for (int v = lo; v <= hi; ++v) {
            if (j > 0) {
                int left = grid.rows[i][j - 1];
                if (v < left) continue;
                if (v == left && v == inf) continue;  // at most one infinity per row
            }
            if (i > 0 && j < grid.rows[i - 1].size()) {
                int up = grid.rows[i - 1][j];
                // strictly increasing columns, except repeated infinity
                if (!(v > up || (v == up && v == inf))) continue;
            }
            grid.rows[i][j] = v;
            fill(ni, nj);
        }
    }
};

void run_shape(TabKind kind, int r, int n, const std::vector<long>& shape,
               const std::function<void(const Tableau&)>& visit) {
    Gen g;
    g.kind = kind;
    g.r = r;
    g.n = n;
    g.inf = 2 * n + 1;
    g.has_inf = kind != TabKind::King;
    g.shape = shape;
    g.visit = &visit;
    g.grid.n = n;
    g.grid.rows.clear();
    for (long w : shape) g.grid.rows.emplace_back(static_cast<size_t>(w), 0);
    if (shape.empty()) {
        visit(g.grid);
        return;
    }
    g.fill(0, 0);
}

} // namespace

void tableaux_foreach(TabKind kind, int r, int n, const std::optional<GPartition>& shape,
                      const std::function<void(const Tableau&)>& visit) {
    if (shape) {
        std::vector<long> s;
        for (auto& p : shape->parts())
            if (!p.is_zero()) s.push_back(p.to_long());
        run_shape(kind, r, n, s, visit);
        return;
    }
    for (auto& lam : partitions_in_box(r, n)) {
        std::vector<long> s;
        for (auto& p : lam.parts())
            if (!p.is_zero()) s.push_back(p.to_long());
        run_shape(kind, r, n, s, visit);
    }
}

BigInt tableau_count_generated(TabKind kind, int r, int n, TabWeighting w) {
    BigInt total = 0;
    tableaux_foreach(kind, r, n, std::nullopt, [&](const Tableau& t) {
        switch (w) {
            case TabWeighting::Plain: total += 1; break;
            case TabWeighting::SignSize: total += (t.size() % 2 == 0) ? 1 : -1; break;
            case TabWeighting::SignMInfinity: total += (t.m_infinity() % 2 == 0) ? 1 : -1; break;
            case TabWeighting::HeightExactN:
                if (t.height() == n) total += 1;
                break;
        }
    });
    return total;
}

namespace {

Rational rising(const Rational& x, long m) {
    Rational v(1);
    for (long j = 0; j < m; ++j) v *= x + Rational(j);
    return v;
}

} // namespace

Rational tableau_count_closed(TabKind kind, int r, int n, TabWeighting w) {
    auto grid = [&](long rows, long cols, long num_shift, long den_shift) {
        Rational v(1);
        for (long i = 1; i <= rows; ++i)
            for (long j = 1; j <= cols; ++j)
                v *= Rational(i + j + num_shift, i + j + den_shift);
        return v;
    };
    switch (kind) {
        case TabKind::Sundaram: {
            Rational base = grid(n, n, r - 1, -1);
            switch (w) {
                case TabWeighting::Plain: {
                    Rational v(1);
                    for (long i = 1; i <= n; ++i) v *= Rational(2 * i + r - 1, 2 * i - 1);
                    return v * base;
                }
                case TabWeighting::SignSize:
                    return (static_cast<long>(r) * n % 2 != 0) ? -base : base;
                case TabWeighting::SignMInfinity: return base;
                default: break;
            }
            break;
        }
        case TabKind::King: {
            switch (w) {
                case TabWeighting::Plain: return grid(n + 1, n, r - 1, -1);
                case TabWeighting::SignSize: {
                    Rational v(1);
                    for (long i = 1; i <= n; ++i) v *= Rational(i + r / 2, i);
                    v *= grid(n, n - 1, r, 0);
                    return (static_cast<long>(r) * n % 2 != 0) ? -v : v;
                }
                default: break;
            }
            break;
        }
        case TabKind::EvenSundaram: {
            Rational base = grid(n, n - 1, r - 1, 0);
            Rational nf(big_factorial(n));
            switch (w) {
                case TabWeighting::Plain:
                    return Rational(big_pow(BigInt(2), 2 * static_cast<long>(n))) / (Rational(2) * nf) *
                           (rising(Rational(r + 1, 2), n) + rising(Rational(r, 2), n)) * base;
                case TabWeighting::HeightExactN:
                    return Rational(big_pow(BigInt(2), 2 * static_cast<long>(n))) / nf *
                           rising(Rational(r, 2), n) * base;
                default: break;
            }
            break;
        }
    }
    throw std::domain_error("tableau_count_closed: no closed form for this (kind, weighting)");
}

Rational tableau_weight_sum(TabKind kind, const GPartition& shape, const std::vector<Rational>& y) {
    if (kind == TabKind::EvenSundaram)
        throw std::domain_error("tableau_weight_sum: no weight model for the even family");
    const int n = static_cast<int>(y.size());
    long r = shape.rows() ? shape.part(0).to_long() : 0;
    Rational total(0);
    tableaux_foreach(kind, static_cast<int>(r), n, shape, [&](const Tableau& t) {
        Rational w(1);
        for (int j = 1; j <= n; ++j) {
            long e = t.count_letter(2 * j - 1) - t.count_letter(2 * j);
            w *= y[static_cast<size_t>(j - 1)].pow(2 * e);
        }
        total += w;
    });
    return total;
}

} // namespace mmsum
