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

#include "qload/shots.hpp"

#include <algorithm>
#include <cmath>

namespace qload {

double shot_probability(double p, long long shots, Rng &rng) {
    if (shots < 1) throw InvalidArgument("shot count must be >= 1");
    if (!(p >= -1e-9 && p <= 1.0 + 1e-9)) {
        throw InvalidArgument("probability " + std::to_string(p) + " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    std::binomial_distribution<long long> dist(shots, p);
    return static_cast<double>(dist(rng)) / static_cast<double>(shots);
}

double shot_estimate(double exact, long long shots, Rng &rng) {
    if (!(std::abs(exact) <= 1.0 + 1e-9)) {
        throw InvalidArgument("expectation " + std::to_string(exact) + " outside [-1, 1]");
    }
    return 2.0 * shot_probability(0.5 * (1.0 + exact), shots, rng) - 1.0;
}

} // namespace qload
