/*
 * Copyright 2026 The hiddenalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hiddenalg {

enum class Status { pass, fail, recorded };

/// "PASS", "FAIL", "RECORDED".
const char* status_name(Status s);

struct ReportEntry {
  std::string id;
  Status status;
  std::string detail;  ///< ASCII
};

struct VerifyReport {
  std::vector<ReportEntry> entries;

  std::size_t count(Status s) const;
  /// No FAIL among the PASS-eligible entries.
  bool ok() const { return count(Status::fail) == 0; }
  /// nullptr when absent.
  const ReportEntry* find(const std::string& id) const;
};

/// Entry ids in report order; build_verify_report emits each exactly once.
const std::vector<std::string>& verify_checklist();

/// Runs every check; independent groups run concurrently, the result is
/// ordered by the checklist.
VerifyReport build_verify_report();

/// Aligned human-readable table with a summary line.
std::string format_text(const VerifyReport& report);
/// One "<id>\t<STATUS>\t<detail>" record per entry.
std::string format_lines(const VerifyReport& report);

}  // namespace hiddenalg
