// Copyright 2026 The qload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qload::checks {

/// Outcome of one acceptance check.
struct CheckResult {
    int id{0};
    std::string name;
    bool passed{false};
    /// Measured quantities in a short human-readable form.
    std::string detail;
    double seconds{0.0};
};

struct CheckInfo {
    int id;
    const char *name;
    const char *summary;
};

/// The registered checks, ordered by id (1-based, contiguous).
const std::vector<CheckInfo> &registry();

/// Runs check `id`; exceptions become a failed result carrying the message.
CheckResult run_check(int id, std::uint64_t seed = 20260101);

/// One "PASS|FAIL <id> <name>: <detail> (<seconds>s)" line.
std::string format_line(const CheckResult &r);

} // namespace qload::checks
