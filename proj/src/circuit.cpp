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

#include "qload/circuit.hpp"

#include <algorithm>

#include "qload/kernels.hpp"

namespace qload {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw InvalidArgument("circuit needs at least one qubit");
}

void Circuit::add(GateOp gate) {
    validate_gate(gate, num_qubits_);
    ops_.push_back(std::move(gate));
    bindings_.emplace_back();
}

void Circuit::add_bound(GateOp gate, int slot, double scale) {
    if (!is_rotation(gate.kind)) {
        throw InvalidArgument("only rotations can be bound to a parameter slot");
    }
    if (slot < 0) throw InvalidArgument("negative parameter slot");
    validate_gate(gate, num_qubits_);
    ops_.push_back(std::move(gate));
    bindings_.push_back(ParamRef{slot, scale});
    num_params_ = std::max(num_params_, slot + 1);
}

void Circuit::append(const Circuit &other, int slot_offset) {
    if (other.num_qubits_ != num_qubits_) throw InvalidArgument("register size mismatch");
    for (std::size_t i = 0; i < other.size(); ++i) {
        if (other.bindings_[i]) {
            add_bound(other.ops_[i], other.bindings_[i]->slot + slot_offset,
                      other.bindings_[i]->scale);
        } else {
            add(other.ops_[i]);
        }
    }
}

double Circuit::angle(std::size_t i, std::span<const double> params) const {
    const auto &b = bindings_[i];
    return b ? b->scale * params[b->slot] : ops_[i].param;
}

int Circuit::two_qubit_count() const {
    return static_cast<int>(
        std::count_if(ops_.begin(), ops_.end(), [](const GateOp &g) { return arity(g.kind) == 2; }));
}

int Circuit::count(GateKind kind) const {
    return static_cast<int>(
        std::count_if(ops_.begin(), ops_.end(), [kind](const GateOp &g) { return g.kind == kind; }));
}

void Circuit::check_slots() const {
    std::vector<bool> seen(num_params_, false);
    for (const auto &b : bindings_) {
        if (b) seen[b->slot] = true;
    }
    for (int s = 0; s < num_params_; ++s) {
        if (!seen[s]) throw InvalidArgument("parameter slot " + std::to_string(s) + " is unused");
    }
}

void Circuit::check_params(std::span<const double> params) const {
    if (params.size() != static_cast<std::size_t>(num_params_)) {
        throw InvalidArgument("circuit expects " + std::to_string(num_params_) +
                              " parameters, got " + std::to_string(params.size()));
    }
}

void apply_circuit_inplace(std::span<cplx> amps, const Circuit &circuit,
                           std::span<const double> params) {
    circuit.check_params(params);
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        kernels::apply(amps, circuit.op(i), circuit.angle(i, params));
    }
}

void apply_circuit_adjoint_inplace(std::span<cplx> amps, const Circuit &circuit,
                                   std::span<const double> params) {
    circuit.check_params(params);
    for (std::size_t i = circuit.size(); i-- > 0;) {
        kernels::apply_inverse(amps, circuit.op(i), circuit.angle(i, params));
    }
}

void apply_gate_inplace(StateVector &state, const GateOp &gate) {
    validate_gate(gate, state.num_qubits());
    kernels::apply(state.mutable_amplitudes(), gate, gate.param);
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    apply_gate_inplace(state, gate);
    return state;
}

StateVector apply_circuit(StateVector state, const Circuit &circuit,
                          std::span<const double> params, bool adjoint) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw InvalidArgument("state and circuit register sizes differ");
    }
    if (adjoint) {
        apply_circuit_adjoint_inplace(state.mutable_amplitudes(), circuit, params);
    } else {
        apply_circuit_inplace(state.mutable_amplitudes(), circuit, params);
    }
    return state;
}

StateVector prepare(const Circuit &circuit, std::span<const double> params) {
    return apply_circuit(StateVector(circuit.num_qubits()), circuit, params);
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit, std::span<const double> params) {
    const std::size_t d = dim_of(circuit.num_qubits());
    Eigen::MatrixXcd u(d, d);
    std::vector<cplx> col(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::fill(col.begin(), col.end(), cplx{0.0, 0.0});
        col[j] = 1.0;
        apply_circuit_inplace(col, circuit, params);
        for (std::size_t i = 0; i < d; ++i) u(i, j) = col[i];
    }
    return u;
}

} // namespace qload
