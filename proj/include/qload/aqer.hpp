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
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qload/circuit.hpp"

namespace qload {

using QubitPair = std::pair<int, int>;

struct AqerConfig {
    int T{0};
    int T3{2000};
    double lr{1e-2};
    double nm_tol{1e-4};
    int nm_max_iter{500};
    std::optional<long long> shots{};
    std::uint64_t seed{0};
    /// Candidate pairs for the reduction step; empty means all unordered pairs.
    std::vector<QubitPair> pair_set{};

    void validate() const;
};

/**
 * Two-qubit block acting on (j, k). In time order it applies RZ(j), RY(j),
 * RZ(k), RY(k), RZZ(j, k) with the angles in that order.
 */
struct Block {
    int j{0};
    int k{1};
    std::array<double, 5> angles{};

    /// 4x4 matrix on local index bit(j) + 2 * bit(k).
    Mat4 matrix() const;
};

/// Matrix of a block with the given pair orientation and angles.
Mat4 block_matrix(std::span<const double> angles);

struct Step1Result {
    std::vector<Block> blocks;
    StateVector v_T{1};
    /// S of the reduced state before the first and after every iteration.
    std::vector<double> s_trace;
};

struct Step2Result {
    std::vector<double> beta;
    std::vector<double> gamma;
};

struct Step3Result {
    std::vector<double> theta_star;
    std::vector<double> loss_trace;
    double loss_initial{0.0};
};

struct AqerResult {
    Circuit circuit;
    std::vector<double> theta_star;
    std::vector<Block> blocks;
    std::vector<double> s_trace;
    std::vector<double> loss_trace;
    double infidelity_initial{0.0};
    double infidelity_final{0.0};
    int G{0};
};

/// All unordered pairs (j < k) in lexicographic order.
std::vector<QubitPair> all_pairs(int num_qubits);

Step1Result aqer_step1(const StateVector &target, const AqerConfig &cfg);
Step2Result aqer_step2(const StateVector &v_T, const AqerConfig &cfg = {});

/// Loader W(beta, gamma) followed by the inverted blocks, last block first.
/// Slots: 5 per block (block t at 5t..5t+4), then beta_n, then gamma_n.
Circuit aqer_circuit(int num_qubits, const std::vector<Block> &blocks);

/// theta = (block angles, beta, gamma) in slot order.
std::vector<double> aqer_initial_params(const std::vector<Block> &blocks, const Step2Result &w);

Step3Result aqer_step3(const StateVector &target, const Circuit &circuit,
                       std::vector<double> theta0, const AqerConfig &cfg);

AqerResult run_aqer(const StateVector &target, const AqerConfig &cfg);

nlohmann::json to_json(const AqerConfig &cfg);
nlohmann::json to_json(const AqerResult &result, const AqerConfig &cfg);

} // namespace qload
