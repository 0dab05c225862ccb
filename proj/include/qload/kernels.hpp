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

#include "qload/gate.hpp"

// In-place amplitude kernels. `amps.size()` must be a power of two and every
// qubit index must address a bit below it; callers validate. The density
// matrix backend reuses these on the vectorized operator (2N "qubits").
namespace qload::kernels {

void apply_1q(std::span<cplx> amps, int q, const Mat2 &u);
void apply_2q(std::span<cplx> amps, int q0, int q1, const Mat4 &u);

void apply_ry(std::span<cplx> amps, int q, double theta);
void apply_rz(std::span<cplx> amps, int q, double theta);
void apply_rzz(std::span<cplx> amps, int q0, int q1, double theta);
void apply_cz(std::span<cplx> amps, int q0, int q1);
void apply_h(std::span<cplx> amps, int q);
void apply_x(std::span<cplx> amps, int q);

/// Applies `gate` with rotation angle `angle` (ignored for fixed kinds).
/// With `conjugate` set, applies the elementwise complex conjugate of the
/// gate matrix instead (needed for U rho U^dag on vectorized operators).
void apply(std::span<cplx> amps, const GateOp &gate, double angle,
           bool conjugate = false);

/// Applies the inverse of `gate` at `angle`.
void apply_inverse(std::span<cplx> amps, const GateOp &gate, double angle);

/// <bra| G |ket> for the rotation generator G of `kind` (Y, Z or Z(x)Z)
/// on the given qubits.
cplx generator_expectation(std::span<const cplx> bra, std::span<const cplx> ket,
                           GateKind kind, int q0, int q1);

} // namespace qload::kernels
