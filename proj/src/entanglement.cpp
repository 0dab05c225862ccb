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

#include "qload/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qload {

namespace {

template <typename M>
double purity_of(const M &rho) {
    const double tr = rho.trace().real();
    if (!(std::abs(tr - 1.0) <= 1e-6)) {
        throw InvalidArgument("density matrix trace " + std::to_string(tr) + " deviates from 1");
    }
    // Tr[rho^2] = sum |rho_ab|^2 for Hermitian rho.
    return rho.cwiseAbs2().sum();
}

} // namespace

double renyi2_from_purity(double purity, int k) {
    const double lo = std::ldexp(1.0, -k);
    if (purity > 1.0 + 1e-10 || purity < lo - 1e-10) {
        throw InvalidArgument("purity " + std::to_string(purity) + " outside [2^-k, 1]");
    }
    return std::max(0.0, -std::log2(std::clamp(purity, lo, 1.0)));
}

double renyi2(const Rdm1 &rho) { return renyi2_from_purity(purity_of(rho), 1); }

double renyi2(const Rdm2 &rho) { return renyi2_from_purity(purity_of(rho), 2); }

EntanglementReport entanglement_measure(const StateVector &state) {
    EntanglementReport r;
    const int n = state.num_qubits();
    r.per_qubit.reserve(n);
    for (int q = 0; q < n; ++q) {
        r.per_qubit.push_back(renyi2(rdm1(state, q)));
        r.total += r.per_qubit.back();
    }
    r.lower_bound = bound_f1(r.total, n);
    r.upper_bound = bound_f2(r.total);
    return r;
}

double entanglement_total(std::span<const cplx> amps) {
    double s = 0.0;
    for (const Rdm1 &rho : all_rdm1(amps)) s += renyi2(rho);
    return s;
}

double bound_f1(double s, int num_qubits) {
    if (s < 0.0 || num_qubits < 1) throw InvalidArgument("bound_f1 needs S >= 0 and N >= 1");
    const double inner = std::max(0.0, std::exp2(1.0 - s / num_qubits) - 1.0);
    return 0.5 * (1.0 - std::sqrt(inner));
}

double bound_f2(double s) {
    if (s < 0.0) throw InvalidArgument("bound_f2 needs S >= 0");
    const double fl = std::floor(s);
    const double inner = std::max(0.0, std::exp2(1.0 - s + fl) - 1.0);
    return 0.5 * (1.0 - std::sqrt(inner) + fl);
}

double max_product_fidelity(const Rdm1 &rho) {
    const double s = renyi2(rho);
    return 0.5 * (1.0 + std::sqrt(std::max(0.0, std::exp2(1.0 - s) - 1.0)));
}

ProductParams product_params(const Rdm1 &rho) {
    const cplx r10 = rho(1, 0);
    const double dz = (rho(0, 0) - rho(1, 1)).real();
    const double len = std::sqrt(4.0 * std::norm(r10) + dz * dz);
    ProductParams p;
    if (len < 1e-14) {
        p.degenerate = true;
        return p;
    }
    p.beta = std::abs(r10) < 1e-15 ? 0.0 : std::arg(r10);
    p.gamma = 0.5 * kPi - std::asin(std::clamp(dz / len, -1.0, 1.0));
    return p;
}

Eigen::Vector2cd product_qubit(double beta, double gamma) {
    Eigen::Vector2cd v;
    v << std::polar(std::cos(0.5 * gamma), -0.5 * beta), std::polar(std::sin(0.5 * gamma), 0.5 * beta);
    return v;
}

Bounds noisy_bounds(double s, int num_qubits, int layers, double dnorm_m, double dnorm_n) {
    if (s < 0.0 || layers < 0 || dnorm_m < 0.0 || dnorm_n < 0.0) {
        throw InvalidArgument("noisy_bounds arguments must be non-negative");
    }
    const double widen = (layers + 1) * (dnorm_m + dnorm_n);
    return {bound_f1(s, num_qubits) - widen, bound_f2(s) + widen};
}

Bounds depol_entropy_bounds(double s_rho, int num_qubits, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("depolarizing rate outside [0, 1]");
    if (s_rho < 0.0) throw InvalidArgument("entanglement measure must be non-negative");
    const double ln4 = std::log(4.0);
    const double n = num_qubits;
    const double q = 1.0 - p;
    return {(1.0 - p / ln4) * s_rho + n * p / ln4, s_rho + n * std::log2(2.0 / (1.0 + q * q))};
}

} // namespace qload
