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
#include <optional>
#include <string_view>

#include "qload/types.hpp"

namespace qload {

enum class GateKind { RY, RZ, RZZ, CZ, H, X, U2Q };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Number of qubits a gate of this kind acts on.
int arity(GateKind kind);

/// True for the rotation kinds e^{-i theta G / 2} with G in {Y, Z, ZZ}.
bool is_rotation(GateKind kind);

/**
 * One gate. Rotations use R_sigma(theta) = exp(-i theta sigma / 2), and
 * RZZ(theta) = exp(-i theta Z(x)Z / 2). For U2Q the local 4x4 index is
 * bit(qubits[0]) + 2 * bit(qubits[1]).
 */
struct GateOp {
    GateKind kind{GateKind::H};
    std::array<int, 2> qubits{-1, -1};
    double param{0.0};
    std::optional<Mat4> matrix{};

    int num_qubits() const { return arity(kind); }

    static GateOp ry(int q, double theta) { return {GateKind::RY, {q, -1}, theta, {}}; }
    static GateOp rz(int q, double theta) { return {GateKind::RZ, {q, -1}, theta, {}}; }
    static GateOp rzz(int q0, int q1, double theta) {
        return {GateKind::RZZ, {q0, q1}, theta, {}};
    }
    static GateOp cz(int q0, int q1) { return {GateKind::CZ, {q0, q1}, 0.0, {}}; }
    static GateOp h(int q) { return {GateKind::H, {q, -1}, 0.0, {}}; }
    static GateOp x(int q) { return {GateKind::X, {q, -1}, 0.0, {}}; }
    static GateOp u2q(int q0, int q1, const Mat4 &u) {
        return {GateKind::U2Q, {q0, q1}, 0.0, u};
    }
};

/// Throws InvalidArgument if the gate does not fit an N-qubit register,
/// carries a non-finite angle, or (U2Q) is not unitary within 1e-10.
void validate_gate(const GateOp &gate, int num_qubits);

/// max |U^dag U - I|
double unitarity_defect(const Mat4 &u);

/// 2x2 (one-qubit kinds) or 4x4 (two-qubit kinds) matrix of the gate in its
/// local basis. Used by tests and the small-matrix paths.
Eigen::MatrixXcd local_matrix(const GateOp &gate);

Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);

} // namespace qload
