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
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qload/circuit.hpp"

namespace qload {

enum class GateCountMethod { AqceComplex, AqceReal, MpsComplex, MpsReal, Hec, Aqer };

GateCountMethod gate_count_method_from_string(std::string_view name);

/// Two-qubit CZ/CNOT count of a method with size parameter k.
int gate_count_table(GateCountMethod method, int num_qubits, int k);

/// True when every amplitude has |imag| <= tol.
bool is_real_state(const StateVector &state, double tol = 1e-12);

/// 4x4 unitary whose columns `cols[i]` equal `given.col(i)` (orthonormal
/// input); the other columns are filled by pivoted Gram-Schmidt over the
/// canonical basis.
Mat4 complete_unitary(const Eigen::Matrix<cplx, 4, Eigen::Dynamic> &given,
                      const std::vector<int> &cols);

/// One layer of two-qubit unitaries derived from a bond-2 MPS approximation.
struct Mps2Layer {
    /// (pair, unitary) in loader time order: the pair (N-2, N-1) first and
    /// the pair (0, 1) last.
    std::vector<std::pair<std::pair<int, int>, Mat4>> unitaries;

    /// Circuit of U2Q ops; applied to |0...0> it prepares the MPS.
    Circuit circuit(int num_qubits) const;
};

struct MpsExtraction {
    Mps2Layer layer;
    StateVector residual{1};
};

/// Sequential truncated SVD (bond 2) and conversion into N - 1 unitaries.
/// The residual is the layer's inverse applied to `state`.
MpsExtraction mps_layer_extract(const StateVector &state);

struct LoaderResult {
    Circuit circuit;
    double infidelity{0.0};
    int G{0};
};

LoaderResult mps_loader(const StateVector &target, int layers);

/// Hardware-efficient circuit: per layer an RY column, an RZ column and a
/// CNOT pattern, each CNOT realized as H CZ H on its target.
Circuit hec_build(int num_qubits, int layers);

/// (control, target) pairs of layer `i`.
std::vector<std::pair<int, int>> hec_pairs(int num_qubits, int layer);

struct HecResult {
    std::vector<double> theta;
    double infidelity{0.0};
};

HecResult hec_train(const StateVector &target, const Circuit &circuit, std::uint64_t seed,
                    int iters = 2000, double lr = 1e-2);

struct AqceOptions {
    int units_per_expansion{5};
    int sweeps_per_expansion{200};
    /// Recompute the loaded-state fidelity after every update (testing).
    bool check_updates{false};
};

struct AqceState {
    std::vector<std::pair<std::pair<int, int>, Mat4>> unitaries;
    std::vector<double> fidelity_trace;
    /// With check_updates: recomputed fidelities, one per trace entry.
    std::vector<double> checked_trace;
};

struct AqceResult {
    AqceState state;
    Circuit circuit;
    double infidelity{0.0};
    int G{0};
};

AqceResult aqce_run(const StateVector &target, int total_units, const AqceOptions &opts = {});

nlohmann::json loader_to_json(std::string_view method, const LoaderResult &r);

} // namespace qload
