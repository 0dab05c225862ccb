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

#include <span>

#include "qload/state_vector.hpp"

namespace qload {

/// Single-qubit reduced density matrix, basis (|0>, |1>).
using Rdm1 = Mat2;

/// Two-qubit reduced density matrix; local index bit(q1) + 2 * bit(q2).
using Rdm2 = Mat4;

enum class Pauli { X, Y, Z };

Pauli pauli_from_char(char c);
Mat2 pauli_matrix(Pauli p);

Rdm1 rdm1(std::span<const cplx> amps, int q);
Rdm2 rdm2(std::span<const cplx> amps, int q1, int q2);

Rdm1 rdm1(const StateVector &state, int q);
Rdm2 rdm2(const StateVector &state, int q1, int q2);

/// Single-qubit marginals of every qubit in one pass over the amplitudes.
std::vector<Rdm1> all_rdm1(std::span<const cplx> amps);

/// Partial traces of a two-qubit RDM.
Rdm1 trace_out_second(const Rdm2 &rho);
Rdm1 trace_out_first(const Rdm2 &rho);

/// <psi| P_q |psi>, exact.
double pauli_expectation(const StateVector &state, Pauli axis, int q);

/// Tr[rho P].
double pauli_expectation(const Rdm1 &rho, Pauli axis);

/// Qubit RDM with Bloch vector (x, y, z); the vector is scaled onto the unit
/// ball first when longer than 1, which is the nearest-PSD projection.
Rdm1 rdm1_from_bloch(double x, double y, double z);

} // namespace qload
