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

#include "qload/aqer.hpp"

#include <cmath>
#include <limits>

#include "qload/entanglement.hpp"
#include "qload/gradients.hpp"
#include "qload/io.hpp"
#include "qload/kernels.hpp"
#include "qload/optimizers.hpp"
#include "qload/rdm.hpp"
#include "qload/shots.hpp"

namespace qload {

namespace {

// Single-qubit entropy of rho, optionally through shot-estimated Paulis.
double qubit_entropy(const Rdm1 &rho, const std::optional<long long> &shots, Rng &rng) {
    if (!shots) return renyi2(rho);
    const double x = shot_estimate(pauli_expectation(rho, Pauli::X), *shots, rng);
    const double y = shot_estimate(pauli_expectation(rho, Pauli::Y), *shots, rng);
    const double z = shot_estimate(pauli_expectation(rho, Pauli::Z), *shots, rng);
    return renyi2(rdm1_from_bloch(x, y, z));
}

Rdm1 estimated_rdm1(const Rdm1 &rho, const std::optional<long long> &shots, Rng &rng) {
    if (!shots) return rho;
    const double x = shot_estimate(pauli_expectation(rho, Pauli::X), *shots, rng);
    const double y = shot_estimate(pauli_expectation(rho, Pauli::Y), *shots, rng);
    const double z = shot_estimate(pauli_expectation(rho, Pauli::Z), *shots, rng);
    return rdm1_from_bloch(x, y, z);
}

} // namespace

void AqerConfig::validate() const {
    if (T < 0 || T3 < 0) throw InvalidArgument("T and T3 must be non-negative");
    if (shots && *shots < 1) throw InvalidArgument("shot count must be >= 1");
    if (!(lr > 0.0)) throw InvalidArgument("learning rate must be positive");
    if (!(nm_tol > 0.0) || nm_max_iter < 1) {
        throw InvalidArgument("Nelder-Mead tolerance and budget must be positive");
    }
}

Mat4 block_matrix(std::span<const double> a) {
    const Mat2 uj = ry_matrix(a[1]) * rz_matrix(a[0]);
    const Mat2 uk = ry_matrix(a[3]) * rz_matrix(a[2]);
    Mat4 local;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) local(r, c) = uk(r >> 1, c >> 1) * uj(r & 1, c & 1);
    }
    const cplx same = std::polar(1.0, -0.5 * a[4]);
    const cplx diff = std::conj(same);
    local.row(0) *= same;
    local.row(1) *= diff;
    local.row(2) *= diff;
    local.row(3) *= same;
    return local;
}

Mat4 Block::matrix() const { return block_matrix(angles); }

std::vector<QubitPair> all_pairs(int num_qubits) {
    std::vector<QubitPair> out;
    for (int j = 0; j < num_qubits; ++j) {
        for (int k = j + 1; k < num_qubits; ++k) out.emplace_back(j, k);
    }
    return out;
}

Step1Result aqer_step1(const StateVector &target, const AqerConfig &cfg) {
    cfg.validate();
    const int n = target.num_qubits();
    std::vector<QubitPair> pairs = cfg.pair_set.empty() ? all_pairs(n) : cfg.pair_set;
    for (auto &[j, k] : pairs) {
        if (j < 0 || k < 0 || j >= n || k >= n || j == k) {
            throw InvalidArgument("candidate pair out of range");
        }
    }
    if (cfg.T > 0 && pairs.empty()) throw InvalidArgument("empty candidate pair set");

    Rng rng = substream(cfg.seed, "step1");
    Step1Result res;
    res.v_T = target;
    std::span<cplx> amps = res.v_T.mutable_amplitudes();
    res.s_trace.push_back(entanglement_total(amps));

    NelderMeadOptions nm;
    nm.tol = cfg.nm_tol;
    nm.max_iter = cfg.nm_max_iter;
    nm.record_trace = false;

    for (int t = 0; t < cfg.T; ++t) {
        std::vector<double> cached(n);
        {
            const auto rhos = all_rdm1(amps);
            for (int q = 0; q < n; ++q) cached[q] = qubit_entropy(rhos[q], cfg.shots, rng);
        }
        double total_cached = 0.0;
        for (double s : cached) total_cached += s;

        double best_value = std::numeric_limits<double>::infinity();
        Block best;
        for (const auto &[j, k] : pairs) {
            const Rdm2 rho = rdm2(amps, j, k);
            const double rest = total_cached - cached[j] - cached[k];
            auto objective = [&](std::span<const double> a) {
                const Mat4 v = block_matrix(a);
                const Rdm2 out = v * rho * v.adjoint();
                return rest + qubit_entropy(trace_out_second(out), cfg.shots, rng) +
                       qubit_entropy(trace_out_first(out), cfg.shots, rng);
            };
            const OptResult r = nelder_mead(objective, std::vector<double>(5, 0.0), nm);
            if (r.best_value < best_value) {
                best_value = r.best_value;
                best.j = j;
                best.k = k;
                std::copy(r.best_params.begin(), r.best_params.end(), best.angles.begin());
            }
        }
        kernels::apply_2q(amps, best.j, best.k, best.matrix());
        res.blocks.push_back(best);
        res.s_trace.push_back(entanglement_total(amps));
    }
    return res;
}

Step2Result aqer_step2(const StateVector &v_T, const AqerConfig &cfg) {
    Rng rng = substream(cfg.seed, "step2");
    Step2Result w;
    for (const Rdm1 &rho : all_rdm1(v_T.amplitudes())) {
        const ProductParams p = product_params(estimated_rdm1(rho, cfg.shots, rng));
        w.beta.push_back(p.beta);
        w.gamma.push_back(p.gamma);
    }
    return w;
}

Circuit aqer_circuit(int num_qubits, const std::vector<Block> &blocks) {
    Circuit c(num_qubits);
    const int base = 5 * static_cast<int>(blocks.size());
    for (int q = 0; q < num_qubits; ++q) {
        c.add_bound(GateOp::ry(q, 0.0), base + num_qubits + q);
        c.add_bound(GateOp::rz(q, 0.0), base + q);
    }
    for (std::size_t t = blocks.size(); t-- > 0;) {
        const Block &b = blocks[t];
        const int s = 5 * static_cast<int>(t);
        c.add_bound(GateOp::rzz(b.j, b.k, 0.0), s + 4, -1.0);
        c.add_bound(GateOp::ry(b.k, 0.0), s + 3, -1.0);
        c.add_bound(GateOp::rz(b.k, 0.0), s + 2, -1.0);
        c.add_bound(GateOp::ry(b.j, 0.0), s + 1, -1.0);
        c.add_bound(GateOp::rz(b.j, 0.0), s + 0, -1.0);
    }
    return c;
}

std::vector<double> aqer_initial_params(const std::vector<Block> &blocks, const Step2Result &w) {
    std::vector<double> theta;
    theta.reserve(5 * blocks.size() + 2 * w.beta.size());
    for (const Block &b : blocks) theta.insert(theta.end(), b.angles.begin(), b.angles.end());
    theta.insert(theta.end(), w.beta.begin(), w.beta.end());
    theta.insert(theta.end(), w.gamma.begin(), w.gamma.end());
    return theta;
}

Step3Result aqer_step3(const StateVector &target, const Circuit &circuit,
                       std::vector<double> theta0, const AqerConfig &cfg) {
    cfg.validate();
    InfidelityGradient eng(target, circuit);
    Step3Result res;
    res.loss_initial = eng.loss(theta0);
    AdamOptions opts;
    opts.lr = cfg.lr;
    opts.iters = cfg.T3;
    OptResult r;
    if (!cfg.shots) {
        r = adam([&](std::span<const double> x, std::span<double> g) { return eng.adjoint(x, g); },
                 std::move(theta0), opts);
    } else {
        Rng rng = substream(cfg.seed, "step3");
        Rng rescore_rng = substream(cfg.seed, "step3-rescore");
        const long long shots = *cfg.shots;
        opts.rescore = [&](std::span<const double> x) {
            return eng.loss(x, shots * 10, &rescore_rng);
        };
        r = adam(
            [&](std::span<const double> x, std::span<double> g) {
                return eng.parameter_shift(x, g, shots, &rng);
            },
            std::move(theta0), opts);
    }
    res.theta_star = std::move(r.best_params);
    res.loss_trace.reserve(r.trace.size());
    for (const auto &[it, v] : r.trace) res.loss_trace.push_back(v);
    return res;
}

AqerResult run_aqer(const StateVector &target, const AqerConfig &cfg) {
    cfg.validate();
    Step1Result s1 = aqer_step1(target, cfg);
    const Step2Result w = aqer_step2(s1.v_T, cfg);
    AqerResult res;
    res.circuit = aqer_circuit(target.num_qubits(), s1.blocks);
    std::vector<double> theta0 = aqer_initial_params(s1.blocks, w);
    res.infidelity_initial = infidelity_loss(target, res.circuit, theta0);
    Step3Result s3 = aqer_step3(target, res.circuit, std::move(theta0), cfg);
    res.theta_star = std::move(s3.theta_star);
    res.loss_trace = std::move(s3.loss_trace);
    res.infidelity_final = infidelity_loss(target, res.circuit, res.theta_star);
    res.blocks = std::move(s1.blocks);
    res.s_trace = std::move(s1.s_trace);
    res.G = res.circuit.count(GateKind::RZZ);
    return res;
}

nlohmann::json to_json(const AqerConfig &cfg) {
    nlohmann::json j{{"T", cfg.T},           {"T3", cfg.T3},
                     {"lr", cfg.lr},         {"nm_tol", cfg.nm_tol},
                     {"nm_max_iter", cfg.nm_max_iter}, {"seed", cfg.seed}};
    j["shots"] = cfg.shots ? nlohmann::json(*cfg.shots) : nlohmann::json(nullptr);
    nlohmann::json ps = nlohmann::json::array();
    for (const auto &[a, b] : cfg.pair_set) ps.push_back({a, b});
    j["pair_set"] = ps;
    return j;
}

nlohmann::json to_json(const AqerResult &r, const AqerConfig &cfg) {
    return nlohmann::json{{"method", "aqer"},
                          {"config", to_json(cfg)},
                          {"s_trace", r.s_trace},
                          {"loss_trace", r.loss_trace},
                          {"infidelity_initial", r.infidelity_initial},
                          {"infidelity_final", r.infidelity_final},
                          {"G", r.G},
                          {"circuit", circuit_to_json(r.circuit)},
                          {"theta_star", r.theta_star}};
}

} // namespace qload
