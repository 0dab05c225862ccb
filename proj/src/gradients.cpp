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

#include "qload/gradients.hpp"

#include <algorithm>
#include <cmath>

#include "qload/kernels.hpp"
#include "qload/shots.hpp"

namespace qload {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

} // namespace

double infidelity_loss(const StateVector &target, const Circuit &circuit,
                       std::span<const double> params) {
    return 1.0 - fidelity(target, prepare(circuit, params));
}

InfidelityGradient::InfidelityGradient(const StateVector &target, const Circuit &circuit)
    : target_(target), circuit_(circuit), phi_(target.dim()), lam_(target.dim()) {
    if (target.num_qubits() != circuit.num_qubits()) {
        throw InvalidArgument("target and circuit register sizes differ");
    }
}

template <typename Visit>
cplx InfidelityGradient::sweep(std::span<const double> params, Visit &&visit) {
    circuit_.check_params(params);
    std::fill(phi_.begin(), phi_.end(), cplx{0.0, 0.0});
    phi_[0] = 1.0;
    apply_circuit_inplace(phi_, circuit_, params);
    const auto t = target_.amplitudes();
    std::copy(t.begin(), t.end(), lam_.begin());
    cplx c{0.0, 0.0};
    for (std::size_t i = 0; i < phi_.size(); ++i) c += std::conj(lam_[i]) * phi_[i];
    for (std::size_t k = circuit_.size(); k-- > 0;) {
        const GateOp &g = circuit_.op(k);
        const double a = circuit_.angle(k, params);
        if (circuit_.binding(k)) {
            const cplx mu = kernels::generator_expectation(lam_, phi_, g.kind, g.qubits[0],
                                                           g.qubits[1]);
            visit(k, c, mu);
        }
        kernels::apply_inverse(phi_, g, a);
        kernels::apply_inverse(lam_, g, a);
    }
    return c;
}

double InfidelityGradient::adjoint(std::span<const double> params, std::span<double> grad) {
    if (grad.size() != params.size()) throw InvalidArgument("gradient buffer size mismatch");
    std::fill(grad.begin(), grad.end(), 0.0);
    const cplx c = sweep(params, [&](std::size_t k, cplx c0, cplx mu) {
        const ParamRef &b = *circuit_.binding(k);
        // dc/da = -(i/2) mu; dL/da = -2 Re(conj(c) dc/da)
        const cplx dc = cplx(0.0, -0.5) * mu;
        grad[b.slot] += b.scale * (-2.0 * (std::conj(c0) * dc).real());
    });
    return 1.0 - clamp01(std::norm(c));
}

double InfidelityGradient::parameter_shift(std::span<const double> params, std::span<double> grad,
                                           std::optional<long long> shots, Rng *rng) {
    if (grad.size() != params.size()) throw InvalidArgument("gradient buffer size mismatch");
    if (shots && !rng) throw InvalidArgument("shot mode needs a random generator");
    auto measure = [&](double f) {
        f = clamp01(f);
        return shots ? shot_probability(f, *shots, *rng) : f;
    };
    std::fill(grad.begin(), grad.end(), 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx c = sweep(params, [&](std::size_t k, cplx c0, cplx mu) {
        const ParamRef &b = *circuit_.binding(k);
        // U(a +/- pi/2) = U(a) (1 -/+ iG)/sqrt(2) for a Pauli generator G.
        const cplx i_mu = cplx(0.0, 1.0) * mu;
        const double f_plus = measure(std::norm((c0 - i_mu) * inv_sqrt2));
        const double f_minus = measure(std::norm((c0 + i_mu) * inv_sqrt2));
        // loss = 1 - f
        grad[b.slot] += b.scale * 0.5 * (f_minus - f_plus);
    });
    return 1.0 - measure(std::norm(c));
}

double InfidelityGradient::loss(std::span<const double> params, std::optional<long long> shots,
                                Rng *rng) {
    if (shots && !rng) throw InvalidArgument("shot mode needs a random generator");
    circuit_.check_params(params);
    std::fill(phi_.begin(), phi_.end(), cplx{0.0, 0.0});
    phi_[0] = 1.0;
    apply_circuit_inplace(phi_, circuit_, params);
    cplx c{0.0, 0.0};
    const auto t = target_.amplitudes();
    for (std::size_t i = 0; i < phi_.size(); ++i) c += std::conj(t[i]) * phi_[i];
    const double f = clamp01(std::norm(c));
    return 1.0 - (shots ? shot_probability(f, *shots, *rng) : f);
}

LossGrad adjoint_gradient(const StateVector &target, const Circuit &circuit,
                          std::span<const double> params) {
    InfidelityGradient eng(target, circuit);
    LossGrad r;
    r.grad.resize(params.size());
    r.loss = eng.adjoint(params, r.grad);
    return r;
}

LossGrad paramshift_gradient(const StateVector &target, const Circuit &circuit,
                             std::span<const double> params, std::optional<long long> shots,
                             Rng *rng) {
    InfidelityGradient eng(target, circuit);
    LossGrad r;
    r.grad.resize(params.size());
    r.loss = eng.parameter_shift(params, r.grad, shots, rng);
    return r;
}

} // namespace qload
