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

#include <utility>
#include <vector>

#include "qload/rdm.hpp"

namespace qload {

/// -log2 Tr[rho^2] of a one- or two-qubit density matrix.
double renyi2(const Rdm1 &rho);
double renyi2(const Rdm2 &rho);

/// Renyi-2 entropy from a purity Tr[rho^2] of a `k`-qubit subsystem.
double renyi2_from_purity(double purity, int k);

struct EntanglementReport {
    std::vector<double> per_qubit;
    double total{0.0};
    double lower_bound{0.0};
    double upper_bound{0.0};
};

EntanglementReport entanglement_measure(const StateVector &state);

/// Sum of single-qubit Renyi-2 entropies (the `total` of the report).
double entanglement_total(std::span<const cplx> amps);

/// Lower infidelity envelope, (1 - sqrt(2^{1 - S/N} - 1)) / 2.
double bound_f1(double s, int num_qubits);

/// Upper infidelity envelope, (1 - sqrt(2^{1 - S + floor S} - 1) + floor S) / 2.
double bound_f2(double s);

/// Largest overlap of a pure qubit state with `rho`.
double max_product_fidelity(const Rdm1 &rho);

struct ProductParams {
    double beta{0.0};
    double gamma{0.0};
    bool degenerate{false};
};

/// Angles with RZ(beta) RY(gamma)|0> the dominant eigenvector of `rho`.
/// The maximally mixed state gives (0, 0) with `degenerate` set.
ProductParams product_params(const Rdm1 &rho);

/// RZ(beta) RY(gamma)|0>.
Eigen::Vector2cd product_qubit(double beta, double gamma);

struct Bounds {
    double lower{0.0};
    double upper{0.0};
};

/// Infidelity envelope widened by (L + 1)(dnorm_m + dnorm_n) for L-layer
/// noisy circuits whose channels sit within the given diamond distances of
/// the identity.
Bounds noisy_bounds(double s, int num_qubits, int layers, double dnorm_m, double dnorm_n);

/// Envelope on the entanglement measure after global depolarizing at rate p.
Bounds depol_entropy_bounds(double s_rho, int num_qubits, double p);

} // namespace qload
