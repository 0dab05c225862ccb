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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qload/checks.hpp"

// Usage: qload_acceptance [id ...]; with no ids every check runs.
int main(int argc, char **argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
    if (ids.empty()) {
        for (const auto &c : qload::checks::registry()) ids.push_back(c.id);
    }
    int failed = 0;
    for (int id : ids) {
        const auto r = qload::checks::run_check(id);
        std::cout << qload::checks::format_line(r) << std::endl;
        if (!r.passed) ++failed;
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
