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

#include "qload/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qload {

namespace {

int log2_exact(std::size_t n) {
    if (n < 2 || !std::has_single_bit(n)) {
        throw InvalidArgument("amplitude count " + std::to_string(n) +
                              " is not a power of two >= 2");
    }
    return std::countr_zero(n);
}

double norm_of(std::span<const cplx> amps) {
    double acc = 0.0;
    for (const cplx &a : amps) acc += std::norm(a);
    return std::sqrt(acc);
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw InvalidArgument("num_qubits must be in [1, 30], got " + std::to_string(num_qubits));
    }
    amps_.assign(dim_of(num_qubits), cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps, double tol) {
    StateVector s;
    s.num_qubits_ = log2_exact(amps.size());
    const double n = norm_of(amps);
    if (!(std::abs(n - 1.0) <= tol)) {
        throw InvalidArgument("amplitudes are not normalized (norm " + std::to_string(n) + ")");
    }
    s.amps_ = std::move(amps);
    return s;
}

StateVector StateVector::normalized(std::vector<cplx> amps) {
    StateVector s;
    s.num_qubits_ = log2_exact(amps.size());
    const double n = norm_of(amps);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("cannot normalize a zero vector");
    for (cplx &a : amps) a /= n;
    s.amps_ = std::move(amps);
    return s;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dim()) throw InvalidArgument("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const { return norm_of(amps_); }

void StateVector::renormalize() {
    const double n = norm();
    if (!(n > 0.0)) throw InvalidArgument("cannot renormalize a zero vector");
    for (cplx &a : amps_) a /= n;
}

cplx inner(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InvalidArgument("inner product of states with different qubit counts");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

} // namespace qload
