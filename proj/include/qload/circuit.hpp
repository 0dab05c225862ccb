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

#include <optional>
#include <span>
#include <vector>

#include "qload/gate.hpp"
#include "qload/state_vector.hpp"

namespace qload {

/// Binding of a rotation op to the parameter vector: angle = scale * params[slot].
struct ParamRef {
    int slot{0};
    double scale{1.0};
};

/**
 * Ordered gate list over a fixed register. Rotation ops may be bound to a
 * slot of the parameter vector; unbound ops use their own `param`. Several
 * ops may share a slot.
 */
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    /// One past the largest bound slot.
    int num_params() const { return num_params_; }

    const std::vector<GateOp> &ops() const { return ops_; }
    const std::vector<std::optional<ParamRef>> &bindings() const { return bindings_; }
    const GateOp &op(std::size_t i) const { return ops_[i]; }
    const std::optional<ParamRef> &binding(std::size_t i) const { return bindings_[i]; }

    /// Appends a fixed op (validated against the register).
    void add(GateOp gate);

    /// Appends a rotation bound to `slot`.
    void add_bound(GateOp gate, int slot, double scale = 1.0);

    /// Appends every op of `other` (same register); its slots are shifted by
    /// `slot_offset`.
    void append(const Circuit &other, int slot_offset = 0);

    /// Angle op `i` takes under `params`.
    double angle(std::size_t i, std::span<const double> params) const;

    /// Number of ops of two-qubit kinds.
    int two_qubit_count() const;
    int count(GateKind kind) const;

    /// Throws InvalidArgument unless the bound slots cover 0..P-1 without gaps.
    void check_slots() const;

    /// Throws InvalidArgument if `params` has the wrong length.
    void check_params(std::span<const double> params) const;

  private:
    int num_qubits_{0};
    int num_params_{0};
    std::vector<GateOp> ops_;
    std::vector<std::optional<ParamRef>> bindings_;
};

/// In-place kernels on a raw amplitude span of the circuit's dimension.
void apply_circuit_inplace(std::span<cplx> amps, const Circuit &circuit,
                           std::span<const double> params);
void apply_circuit_adjoint_inplace(std::span<cplx> amps, const Circuit &circuit,
                                   std::span<const double> params);

void apply_gate_inplace(StateVector &state, const GateOp &gate);
StateVector apply_gate(StateVector state, const GateOp &gate);

/// U(params)|state> or, with `adjoint`, U(params)^dag |state>.
StateVector apply_circuit(StateVector state, const Circuit &circuit,
                          std::span<const double> params, bool adjoint = false);

/// U(params)|0...0>.
StateVector prepare(const Circuit &circuit, std::span<const double> params);

/// Dense 2^N x 2^N unitary of the circuit, for tests on small registers.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit, std::span<const double> params);

} // namespace qload
