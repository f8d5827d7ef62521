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

#include "mmsum/report.hpp"

#include <json.hpp>

namespace mmsum {

ReportWriter::ReportWriter(std::ostream& os, ReportFormat fmt, bool with_timings)
    : os_(os), fmt_(fmt), with_timings_(with_timings) {}

void ReportWriter::write(const VerificationReport& rep) {
    ++total_;
    if (!rep.equal) ++failures_;
    switch (fmt_) {
        case ReportFormat::Text: {
            os_ << (rep.equal ? "PASS" : (rep.error ? "ERROR" : "FAIL")) << "  " << rep.id << "  "
                << rep.params << "  [" << rep.mode << "]";
            if (rep.error) os_ << "  " << rep.message;
            if (with_timings_) os_ << "  (" << rep.elapsed_ms << " ms)";
            os_ << "\n";
            break;
        }
        case ReportFormat::JsonLines: {
            nlohmann::json j;
            j["id"] = rep.id;
            j["params"] = rep.params;
            j["mode"] = rep.mode;
            j["equal"] = rep.equal;
            if (rep.error) j["error"] = rep.message;
            j["lhs"] = rep.lhs;
            j["rhs"] = rep.rhs;
            if (with_timings_) j["elapsed_ms"] = rep.elapsed_ms;
            os_ << j.dump() << "\n";
            break;
        }
        case ReportFormat::Csv: {
            if (!header_done_) {
                os_ << "id,params,mode,equal,lhs,rhs" << (with_timings_ ? ",elapsed_ms" : "") << "\n";
                header_done_ = true;
            }
            auto quote = [](const std::string& s) {
                std::string out = "\"";
                for (char c : s) {
                    if (c == '"') out += "\"\"";
                    else out += c;
                }
                return out + "\"";
            };
            os_ << rep.id << "," << quote(rep.params) << "," << quote(rep.mode) << ","
                << (rep.equal ? "true" : "false") << "," << quote(rep.lhs) << "," << quote(rep.rhs);
            if (with_timings_) os_ << "," << rep.elapsed_ms;
            os_ << "\n";
            break;
        }
    }
}

void ReportWriter::finish() { os_.flush(); }

} // namespace mmsum
