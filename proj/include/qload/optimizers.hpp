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

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace qload {

struct OptResult {
    std::vector<double> best_params;
    double best_value{0.0};
    int iterations{0};
    int evaluations{0};
    bool converged{false};
    /// (iteration, value): the best simplex value for Nelder-Mead, the loss
    /// at the current iterate for Adam.
    std::vector<std::pair<int, double>> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Writes the gradient into the second argument and returns the loss.
using LossAndGrad = std::function<double(std::span<const double>, std::span<double>)>;

struct NelderMeadOptions {
    double tol{1e-4};
    int max_iter{500};
    double initial_step{0.1};
    bool record_trace{true};
};

/**
 * Downhill simplex with reflection 1, expansion 2, contraction 0.5 and
 * shrink 0.5. The start simplex is x0 plus x0 + step * e_i. Stops once the
 * spread of simplex values and the largest vertex offset from the best
 * vertex (max norm) are both below tol, or after max_iter iterations.
 */
OptResult nelder_mead(const Objective &f, std::vector<double> x0,
                      const NelderMeadOptions &opts = {});

struct AdamOptions {
    double lr{1e-2};
    int iters{2000};
    double beta1{0.9};
    double beta2{0.999};
    double eps{1e-8};
    /// When set, the best-seen and the final iterate are re-scored with this
    /// function and the lower one is returned (for noisy losses).
    Objective rescore{};
};

/// Adam; returns the parameters with the lowest loss seen over iters + 1
/// evaluations (the last one after the final update).
OptResult adam(const LossAndGrad &f, std::vector<double> x0, const AdamOptions &opts = {});

} // namespace qload
