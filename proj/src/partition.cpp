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

#include "mmsum/partition.hpp"

namespace mmsum {

GPartition GPartition::conjugate(long width) const {
    if (!is_plain_partition()) throw std::domain_error("GPartition: conjugate needs a plain partition");
    std::vector<HalfInt> out;
    for (long j = 1; j <= width; ++j) {
        long c = 0;
        for (auto& p : parts_)
            if (p >= HalfInt(j)) ++c;
        out.emplace_back(c);
    }
    return GPartition(std::move(out));
}

std::vector<GPartition> partitions_in_box(long r, int n) {
    std::vector<GPartition> out;
    std::vector<HalfInt> cur;
    std::function<void(long, int)> rec = [&](long mx, int depth) {
        if (depth == n) {
            out.emplace_back(cur);
            return;
        }
        for (long v = mx; v >= 0; --v) {
            cur.emplace_back(v);
            rec(v, depth + 1);
            cur.pop_back();
        }
    };
    if (n == 0) {
        out.emplace_back(std::vector<HalfInt>{});
        return out;
    }
    rec(r, 0);
    return out;
}

} // namespace mmsum
