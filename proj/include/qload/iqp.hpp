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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qload/aqer.hpp"
#include "qload/datasets.hpp"

namespace qload {

/// Angles a * pi / (2K + 1) for a in [-2K, 2K].
struct IqpGrid {
    int K{1};

    explicit IqpGrid(int k);

    int size() const { return 4 * K + 1; }
    double value(int a) const;
    /// Ascending grid values.
    std::vector<double> values() const;

    /// Grid size that guarantees S <= eps for degree-D graphs on N qubits.
    static IqpGrid for_epsilon(int max_degree, int num_qubits, double eps);
};

/// Single-qubit block angles (RZ then RY) equal to -iH: RY(pi/2) RZ(pi).
inline constexpr std::array<double, 2> kHadamardAngles{kPi, kPi / 2.0};

struct IqpLoadResult {
    std::vector<Block> blocks;
    Circuit circuit;
    std::vector<double> params;
    std::vector<double> s_trace;
    int iterations{0};
    double s_final{0.0};
    double infidelity{0.0};
    long long shots_used{0};

    std::vector<std::pair<int, int>> edges() const;
};

/**
 * Grid-restricted Step I for states built on the K-grid. Candidate blocks
 * on (i, j) carry -iH on qubits not touched before and the identity
 * otherwise, with the ZZ angle searched over the grid. Stops once S < 1e-10;
 * throws ConvergenceError when `budget` iterations do not reach that
 * (default: N (N - 1) / 2).
 */
IqpLoadResult iqp_exact_load(const StateVector &target, int K,
                             std::optional<int> budget = std::nullopt);

/**
 * Same search on the grid sized for `eps`, at most one block per pair; stops
 * when no candidate lowers S. Reports the final S.
 */
IqpLoadResult iqp_approx_load(const StateVector &target, double eps, int max_degree);

struct IqpShotOptions {
    int max_degree{1};
    double delta{0.05};
    /// Shot-budget constant c in M = ceil(c 2^D ln(N^2 |E_max| / delta)).
    double c{200.0};
    /// |E_max|; defaults to N (N - 1) / 2.
    std::optional<int> max_edges;
    std::uint64_t seed{0};
};

/// Shots per expectation estimate.
long long iqp_shots_per_estimate(int num_qubits, const IqpShotOptions &opts);

/// Acceptance threshold (sqrt 2 - 1) / 2 * 2^{-D/2} on each |x| increase.
double iqp_shot_threshold(int max_degree);

/**
 * Recovery of a pi/8 IQP state from shot access: each iteration tests the
 * ZZ angles {0, -pi/4} on every pair in order and accepts the first pair
 * whose two X estimates both increase by more than the threshold. Step II
 * uses shot-estimated Bloch vectors with the same per-estimate shots.
 */
IqpLoadResult iqp_shot_recover(const StateVector &oracle, const IqpShotOptions &opts);

struct IqpCalibration {
    double c{0.0};
    double failure_rate{0.0};
    int trials{0};
};

/**
 * Smallest c from `candidates` (ascending) whose empirical failure rate on
 * random pi/8 instances with D <= max_degree stays at or below delta / 2.
 * Returns the last candidate with its measured rate if none qualifies.
 */
IqpCalibration iqp_calibrate_shot_constant(const std::vector<double> &candidates, int trials,
                                           int num_qubits, int max_degree, double delta,
                                           std::uint64_t seed);

/// prod over edges incident to n of cos(w_e): <X_n> of the residual state.
double iqp_x_formula(const IqpSpec &spec, int n);

/// e^{-i sum w ZZ / 2} |+...+>.
StateVector iqp_residual_state(const IqpSpec &spec);

/// Random graph with `num_edges` distinct edges (fewer when the degree cap
/// binds) and degree at most `max_degree` (0: unbounded); angles drawn by
/// `angle`.
IqpSpec random_iqp_spec(int num_qubits, int num_edges, int max_degree, Rng &rng,
                        const std::function<double(Rng &)> &angle);

nlohmann::json to_json(const IqpLoadResult &r);

} // namespace qload
