/* Copyright (C) 2026 The dlchar Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef DLCHAR_REPORT_HPP
#define DLCHAR_REPORT_HPP

#include <string>

#include "dlchar/verification.hpp"

namespace dlchar {

inline constexpr const char* kVersion = "1.0.0";

enum class ReportFormat { kJson, kTsv, kText };

std::string format_name(ReportFormat f);
ReportFormat parse_format(const std::string& name);

// Byte-stable for a fixed report.  Timings are written only if present.
std::string emit_report(const VerifyReport& report, ReportFormat format);

// Inverse of emit_report(..., kJson).  Rebuilds the group context from the
// echoed config and checks the echoed tower moduli against it.
VerifyReport parse_report_json(const std::string& text);

// Matrix and number formatting shared with the CLI.
std::string format_matrix(const GroupContext& ctx, const Mat& m);
// Rows separated by ';', entries by ','; an entry is either an integer code
// or a ':'-separated coefficient list over GF(p), constant term first.
Mat parse_matrix(const GroupContext& ctx, const std::string& text);

}  // namespace dlchar

#endif  // DLCHAR_REPORT_HPP
