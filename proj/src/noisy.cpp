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

#include "qload/noisy.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "qload/entanglement.hpp"
#include "qload/kernels.hpp"
#include "qload/random.hpp"

namespace qload {

namespace {

void check_size(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
        throw InvalidArgument("density matrix register must have 1.." +
                              std::to_string(kMaxDensityQubits) + " qubits, got " +
                              std::to_string(num_qubits));
    }
}

void check_rate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("depolarizing rate outside [0, 1]");
}

GateOp shifted(GateOp gate, int offset) {
    gate.qubits[0] += offset;
    if (gate.num_qubits() == 2) gate.qubits[1] += offset;
    return gate;
}

StateVector product_state(const std::vector<Eigen::Vector2cd> &qubits) {
    const int n = static_cast<int>(qubits.size());
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        cplx a = 1.0;
        for (int q = 0; q < n; ++q) a *= qubits[q]((i >> q) & 1);
        amps[i] = a;
    }
    return StateVector::normalized(std::move(amps));
}

} // namespace

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits);
    data_.assign(dim() * dim(), cplx{0.0, 0.0});
    data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector &state) {
    DensityMatrix rho(state.num_qubits());
    const auto a = state.amplitudes();
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) rho.data_[r * d + c] = a[r] * std::conj(a[c]);
    }
    return rho;
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd &m) {
    const auto d = static_cast<std::size_t>(m.rows());
    if (m.rows() != m.cols() || d < 2 || (d & (d - 1)) != 0) {
        throw InvalidArgument("density matrix must be square with power-of-two dimension");
    }
    DensityMatrix rho(std::countr_zero(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) rho.data_[r * d + c] = m(r, c);
    }
    if (rho.hermiticity_defect() > 1e-10) throw InvalidArgument("density matrix not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw InvalidArgument("density matrix trace " + std::to_string(rho.trace()) + " != 1");
    }
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    DensityMatrix rho(num_qubits);
    const std::size_t d = rho.dim();
    rho.data_[0] = 0.0;
    for (std::size_t i = 0; i < d; ++i) rho.data_[i * d + i] = 1.0 / static_cast<double>(d);
    return rho;
}

Eigen::MatrixXcd DensityMatrix::matrix() const {
    const auto d = static_cast<Eigen::Index>(dim());
    // Row-major storage read as column-major gives the transpose.
    return Eigen::Map<const Eigen::MatrixXcd>(data_.data(), d, d).transpose();
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += data_[i * dim() + i].real();
    return t;
}

double DensityMatrix::purity() const {
    double s = 0.0;
    for (const cplx &x : data_) s += std::norm(x);
    return s;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            worst = std::max(worst, std::abs(data_[r * d + c] - std::conj(data_[c * d + r])));
        }
    }
    return worst;
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd m = matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Rdm1 DensityMatrix::rdm1(int q) const {
    if (q < 0 || q >= num_qubits_) throw InvalidArgument("qubit index out of range");
    Rdm1 out = Rdm1::Zero();
    const std::size_t d = dim();
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t rest = r & ~mask;
        const int br = (r >> q) & 1;
        for (int bc = 0; bc < 2; ++bc) {
            const std::size_t c = rest | (bc ? mask : 0);
            out(br, bc) += data_[r * d + c];
        }
    }
    return out;
}

double DensityMatrix::expectation(const StateVector &psi) const {
    if (psi.num_qubits() != num_qubits_) throw InvalidArgument("register size mismatch");
    const auto a = psi.amplitudes();
    const std::size_t d = dim();
    cplx s = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < d; ++c) row += data_[r * d + c] * a[c];
        s += std::conj(a[r]) * row;
    }
    return s.real();
}

void evolve_unitary_inplace(DensityMatrix &rho, const GateOp &gate, double angle) {
    const int n = rho.num_qubits();
    validate_gate(gate, n);
    std::span<cplx> v = rho.mutable_data();
    kernels::apply(v, shifted(gate, n), angle);
    kernels::apply(v, gate, angle, /*conjugate=*/true);
}

DensityMatrix evolve_unitary(DensityMatrix rho, const GateOp &gate) {
    evolve_unitary_inplace(rho, gate, gate.param);
    return rho;
}

void depolarize_inplace(DensityMatrix &rho, std::span<const int> qubits, double p) {
    check_rate(p);
    if (qubits.empty() || qubits.size() > 2) {
        throw InvalidArgument("local depolarizing acts on one or two qubits");
    }
    const int n = rho.num_qubits();
    std::size_t mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= n) throw InvalidArgument("qubit index out of range");
        mask |= std::size_t{1} << q;
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw InvalidArgument("depolarized qubits must be distinct");
    }
    if (p == 0.0) return;

    std::vector<std::size_t> local;
    for (std::size_t a = 0; a <= mask; ++a) {
        if ((a & ~mask) == 0) local.push_back(a);
    }
    const double inv_d = 1.0 / static_cast<double>(local.size());
    const std::size_t d = rho.dim();
    std::span<cplx> v = rho.mutable_data();
    for (std::size_t r = 0; r < d; ++r) {
        if (r & mask) continue;
        for (std::size_t c = 0; c < d; ++c) {
            if (c & mask) continue;
            cplx partial = 0.0;
            for (std::size_t a : local) partial += v[(r | a) * d + (c | a)];
            for (std::size_t a : local) {
                for (std::size_t b : local) {
                    cplx &x = v[(r | a) * d + (c | b)];
                    x *= 1.0 - p;
                    if (a == b) x += p * inv_d * partial;
                }
            }
        }
    }
}

DensityMatrix depolarize(DensityMatrix rho, std::span<const int> qubits, double p) {
    depolarize_inplace(rho, qubits, p);
    return rho;
}

void depolarize_global_inplace(DensityMatrix &rho, double p) {
    check_rate(p);
    const std::size_t d = rho.dim();
    std::span<cplx> v = rho.mutable_data();
    for (cplx &x : v) x *= 1.0 - p;
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] += p / static_cast<double>(d);
}

double entanglement_total(const DensityMatrix &rho) {
    double s = 0.0;
    for (int q = 0; q < rho.num_qubits(); ++q) s += renyi2(rho.rdm1(q));
    return s;
}

NoisePlacement noise_placement_from_string(std::string_view name) {
    if (name == "per-gate") return NoisePlacement::PerGate;
    if (name == "per-layer") return NoisePlacement::PerLayer;
    throw InvalidArgument("unknown noise placement '" + std::string(name) + "'");
}

std::string_view to_string(NoisePlacement placement) {
    return placement == NoisePlacement::PerGate ? "per-gate" : "per-layer";
}

void NoiseModel::validate() const {
    check_rate(p1);
    check_rate(p2);
}

DensityMatrix run_noisy(const Circuit &circuit, std::span<const double> params,
                        const NoiseModel &noise) {
    noise.validate();
    circuit.check_params(params);
    const int n = circuit.num_qubits();
    DensityMatrix rho(n);

    if (noise.placement == NoisePlacement::PerGate) {
        for (std::size_t i = 0; i < circuit.size(); ++i) {
            const GateOp &g = circuit.op(i);
            evolve_unitary_inplace(rho, g, circuit.angle(i, params));
            const int k = g.num_qubits();
            depolarize_inplace(rho, std::span<const int>(g.qubits.data(), k),
                               k == 1 ? noise.p1 : noise.p2);
        }
        return rho;
    }

    std::vector<std::array<int, 2>> pairs;
    std::uint64_t used = 0;
    int layer_arity = 0;
    auto flush = [&] {
        if (layer_arity == 0) return;
        const double p = layer_arity == 1 ? noise.p1 : noise.p2;
        std::uint64_t covered = 0;
        for (const auto &pq : pairs) {
            depolarize_inplace(rho, pq, p);
            covered |= (std::uint64_t{1} << pq[0]) | (std::uint64_t{1} << pq[1]);
        }
        for (int q = 0; q < n; ++q) {
            if (!(covered >> q & 1)) {
                const int one[1] = {q};
                depolarize_inplace(rho, one, p);
            }
        }
        pairs.clear();
        used = 0;
        layer_arity = 0;
    };
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const GateOp &g = circuit.op(i);
        const int k = g.num_qubits();
        std::uint64_t support = 0;
        for (int j = 0; j < k; ++j) support |= std::uint64_t{1} << g.qubits[j];
        if (k != layer_arity || (support & used)) flush();
        layer_arity = k;
        used |= support;
        if (k == 2) pairs.push_back(g.qubits);
        evolve_unitary_inplace(rho, g, circuit.angle(i, params));
    }
    flush();
    return rho;
}

double noisy_load_eval(const StateVector &target, const Circuit &circuit,
                       std::span<const double> params, const NoiseModel &noise) {
    if (target.num_qubits() != circuit.num_qubits()) {
        throw InvalidArgument("target and circuit registers differ");
    }
    check_size(target.num_qubits());
    const DensityMatrix rho = run_noisy(circuit, params, noise);
    return std::clamp(1.0 - rho.expectation(target), 0.0, 1.0);
}

DensityMatrix random_density_matrix(int num_qubits, int rank, Rng &rng) {
    check_size(num_qubits);
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    if (rank < 1 || rank > d) throw InvalidArgument("rank outside [1, 2^N]");
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd g(d, rank);
    for (Eigen::Index c = 0; c < rank; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) g(r, c) = cplx(gauss(rng), gauss(rng));
    }
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix::from_matrix(m);
}

DepolBoundsReport verify_depol_bounds(int max_qubits, int trials,
                                      std::span<const double> p_grid, std::uint64_t seed) {
    if (max_qubits < 1 || max_qubits > kMaxDensityQubits || trials < 0) {
        throw InvalidArgument("bad depolarizing-bound check size");
    }
    Rng rng = substream(seed, "depol-bounds");
    std::uniform_int_distribution<int> pick_n(1, max_qubits);
    DepolBoundsReport rep;
    for (int t = 0; t < trials; ++t) {
        const int n = pick_n(rng);
        const int max_rank = 1 << n;
        const int rank = (t % 2 == 0) ? 1 : std::uniform_int_distribution<int>(2, max_rank)(rng);
        const DensityMatrix rho = random_density_matrix(n, rank, rng);
        const double s = entanglement_total(rho);
        for (double p : p_grid) {
            DensityMatrix out = rho;
            depolarize_global_inplace(out, p);
            const double sp = entanglement_total(out);
            const Bounds b = depol_entropy_bounds(s, n, p);
            const double excess = std::max(b.lower - sp, sp - b.upper);
            ++rep.checks;
            rep.max_violation = std::max(rep.max_violation, excess);
            if (excess > 1e-9) ++rep.violations;
        }
    }
    return rep;
}

NoisyBoundsReport verify_noisy_bounds(int num_qubits, int layers, int trials, double p,
                                      std::uint64_t seed) {
    check_size(num_qubits);
    check_rate(p);
    if (num_qubits < 2 || layers < 0 || trials < 0) {
        throw InvalidArgument("bad noisy-bound check size");
    }
    Rng rng = substream(seed, "noisy-bounds");
    std::uniform_int_distribution<int> pick_q(0, num_qubits - 1);
    NoisyBoundsReport rep;
    const double dnorm = 2.0 * p;

    for (int t = 0; t < trials; ++t) {
        const StateVector target = random_state(num_qubits, rng);
        std::vector<Circuit> unitaries;
        for (int l = 0; l < layers; ++l) {
            Circuit c(num_qubits);
            for (int g = 0; g < num_qubits; ++g) {
                const int a = pick_q(rng);
                int b = pick_q(rng);
                while (b == a) b = pick_q(rng);
                c.add(GateOp::u2q(a, b, random_unitary4(rng)));
            }
            unitaries.push_back(std::move(c));
        }

        DensityMatrix back = DensityMatrix::from_state(target);
        depolarize_global_inplace(back, p);
        for (int l = layers; l-- > 0;) {
            for (std::size_t i = unitaries[l].size(); i-- > 0;) {
                GateOp g = unitaries[l].op(i);
                g.matrix = g.matrix->adjoint().eval();
                evolve_unitary_inplace(back, g, 0.0);
            }
            depolarize_global_inplace(back, p);
        }
        const double s = entanglement_total(back);
        const Bounds env = noisy_bounds(s, num_qubits, layers, dnorm, dnorm);

        auto forward_infidelity = [&](const StateVector &product) {
            DensityMatrix rho = DensityMatrix::from_state(product);
            depolarize_global_inplace(rho, p);
            for (int l = 0; l < layers; ++l) {
                for (const GateOp &g : unitaries[l].ops()) evolve_unitary_inplace(rho, g, 0.0);
                depolarize_global_inplace(rho, p);
            }
            return 1.0 - rho.expectation(target);
        };

        std::vector<Eigen::Vector2cd> built;
        for (int q = 0; q < num_qubits; ++q) {
            const ProductParams pp = product_params(back.rdm1(q));
            built.push_back(product_qubit(pp.beta, pp.gamma));
        }
        const double inf_built = forward_infidelity(product_state(built));
        double excess = std::max(env.lower - inf_built, inf_built - env.upper);
        ++rep.checks;

        for (int r = 0; r < 4; ++r) {
            std::vector<Eigen::Vector2cd> rand_q;
            for (int q = 0; q < num_qubits; ++q) {
                const StateVector one = random_state(1, rng);
                rand_q.emplace_back(one.amplitudes()[0], one.amplitudes()[1]);
            }
            const double inf_r = forward_infidelity(product_state(rand_q));
            excess = std::max(excess, env.lower - inf_r);
            ++rep.checks;
        }
        rep.max_violation = std::max(rep.max_violation, excess);
        if (excess > 1e-9) ++rep.violations;
    }
    return rep;
}

} // namespace qload
