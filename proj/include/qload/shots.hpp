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

#include "qload/random.hpp"

namespace qload {

/// Finite-shot estimate of a +/-1 observable with mean `exact`: draws
/// k ~ Binomial(shots, (1 + exact) / 2) and returns 2k/shots - 1.
double shot_estimate(double exact, long long shots, Rng &rng);

/// Finite-shot estimate of a probability `p` (projector expectation):
/// k / shots with k ~ Binomial(shots, p).
double shot_probability(double p, long long shots, Rng &rng);

} // namespace qload
