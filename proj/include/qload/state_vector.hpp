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
#include <vector>

#include "qload/types.hpp"

namespace qload {

/**
 * Dense pure state over N qubits.
 *
 * Basis index bit q holds qubit q (qubit 0 is the least significant bit).
 * The amplitude vector is normalized at construction; the only way to
 * break the norm is through mutable_amplitudes(), whose users (gate
 * kernels) are unitary.
 */
class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits);

    /// Takes ownership of `amps`. Throws InvalidArgument if the length is not
    /// a power of two or the norm deviates from 1 by more than `tol`.
    static StateVector from_amplitudes(std::vector<cplx> amps,
                                       double tol = 1e-12);

    /// Normalizes `amps` explicitly. Throws on the all-zero vector.
    static StateVector normalized(std::vector<cplx> amps);

    static StateVector basis(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> mutable_amplitudes() { return amps_; }

    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    void renormalize();

  private:
    StateVector() = default;

    int num_qubits_{0};
    std::vector<cplx> amps_;
};

/// <a|b>
cplx inner(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity(const StateVector &a, const StateVector &b);

inline double infidelity(const StateVector &a, const StateVector &b) {
    return 1.0 - fidelity(a, b);
}

} // namespace qload
