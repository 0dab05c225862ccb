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

#include "qload/circuit.hpp"
#include "qload/random.hpp"

namespace qload {

struct LossGrad {
    double loss{0.0};
    std::vector<double> grad;
};

/// 1 - |<target| U(params) |0...0>|^2.
double infidelity_loss(const StateVector &target, const Circuit &circuit,
                       std::span<const double> params);

/**
 * Infidelity loss and gradient for a fixed (target, circuit) pair with
 * reusable scratch buffers.
 *
 * Exact mode uses one forward and one reverse sweep. Parameter-shift mode
 * evaluates the loss at angle +/- pi/2 for every bound op; the shifted
 * overlaps are obtained from the same reverse sweep, so the cost matches
 * the adjoint sweep. With a shot count, each fidelity is replaced by a
 * binomial estimate.
 */
class InfidelityGradient {
  public:
    InfidelityGradient(const StateVector &target, const Circuit &circuit);

    /// Exact loss; gradient by the adjoint method.
    double adjoint(std::span<const double> params, std::span<double> grad);

    /// Loss and gradient by parameter shifts. With `shots`, `rng` is required.
    double parameter_shift(std::span<const double> params, std::span<double> grad,
                           std::optional<long long> shots = std::nullopt, Rng *rng = nullptr);

    /// Loss only, exact or shot-estimated.
    double loss(std::span<const double> params, std::optional<long long> shots = std::nullopt,
                Rng *rng = nullptr);

  private:
    // Runs the reverse sweep, calling visit(op index, c, <lambda|G|phi>).
    template <typename Visit>
    cplx sweep(std::span<const double> params, Visit &&visit);

    const StateVector &target_;
    const Circuit &circuit_;
    std::vector<cplx> phi_;
    std::vector<cplx> lam_;
};

LossGrad adjoint_gradient(const StateVector &target, const Circuit &circuit,
                          std::span<const double> params);

LossGrad paramshift_gradient(const StateVector &target, const Circuit &circuit,
                             std::span<const double> params,
                             std::optional<long long> shots = std::nullopt, Rng *rng = nullptr);

} // namespace qload
