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

#include <ostream>

#include "mmsum/catalog.hpp"

namespace mmsum {

enum class ReportFormat { Text, JsonLines, Csv };

// One writer per stream; emission order is the caller's (kept lexicographic
// by the sweep driver so identical configs give identical bytes).
class ReportWriter {
public:
    ReportWriter(std::ostream& os, ReportFormat fmt, bool with_timings = false);
    void write(const VerificationReport& rep);
    void finish();
    long failures() const { return failures_; }
    long total() const { return total_; }

private:
    std::ostream& os_;
    ReportFormat fmt_;
    bool with_timings_;
    bool header_done_ = false;
    long failures_ = 0;
    long total_ = 0;
};

} // namespace mmsum
