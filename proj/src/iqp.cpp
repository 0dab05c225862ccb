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

#include "qload/iqp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qload/entanglement.hpp"
#include "qload/gradients.hpp"
#include "qload/kernels.hpp"
#include "qload/rdm.hpp"
#include "qload/shots.hpp"

namespace qload {

namespace {

constexpr double kExactS = 1e-10;
constexpr double kImprove = 1e-12;

Block candidate_block(int j, int k, double alpha, const std::vector<bool> &touched) {
    Block b;
    b.j = j;
    b.k = k;
    if (!touched[j]) std::copy(kHadamardAngles.begin(), kHadamardAngles.end(), b.angles.begin());
    if (!touched[k]) {
        std::copy(kHadamardAngles.begin(), kHadamardAngles.end(), b.angles.begin() + 2);
    }
    b.angles[4] = alpha;
    return b;
}

struct SearchState {
    StateVector v;
    std::vector<bool> touched;
    IqpLoadResult res;

    explicit SearchState(const StateVector &target)
        : v(target), touched(target.num_qubits(), false) {
        res.s_trace.push_back(entanglement_total(v.amplitudes()));
    }

    double s() const { return res.s_trace.back(); }

    void accept(const Block &b) {
        kernels::apply_2q(v.mutable_amplitudes(), b.j, b.k, b.matrix());
        touched[b.j] = true;
        touched[b.k] = true;
        res.blocks.push_back(b);
        res.s_trace.push_back(entanglement_total(v.amplitudes()));
        ++res.iterations;
    }
};

struct Candidate {
    Block block;
    double value{std::numeric_limits<double>::infinity()};
};

// Lowest-S grid candidate; earlier pairs and smaller grid indices win ties.
Candidate grid_search(const SearchState &st, const IqpGrid &grid,
                      const std::set<std::pair<int, int>> *used) {
    const int n = st.v.num_qubits();
    const auto amps = st.v.amplitudes();
    std::vector<double> cached(n);
    {
        const auto rhos = all_rdm1(amps);
        for (int q = 0; q < n; ++q) cached[q] = renyi2(rhos[q]);
    }
    double total = 0.0;
    for (double s : cached) total += s;

    Candidate best;
    const std::vector<double> alphas = grid.values();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (used && used->count({i, j})) continue;
            const Rdm2 rho = rdm2(amps, i, j);
            const double rest = total - cached[i] - cached[j];
            for (double alpha : alphas) {
                const Block b = candidate_block(i, j, alpha, st.touched);
                const Mat4 m = b.matrix();
                const Rdm2 out = m * rho * m.adjoint();
                const double val =
                    rest + renyi2(trace_out_second(out)) + renyi2(trace_out_first(out));
                if (val < best.value - kImprove) {
                    best.value = val;
                    best.block = b;
                }
            }
        }
    }
    return best;
}

void finish(const StateVector &target, SearchState &st, const Step2Result &w) {
    IqpLoadResult &r = st.res;
    r.circuit = aqer_circuit(target.num_qubits(), r.blocks);
    r.params = aqer_initial_params(r.blocks, w);
    r.s_final = st.s();
    r.infidelity = infidelity_loss(target, r.circuit, r.params);
}

Step2Result exact_step2(const StateVector &v) {
    Step2Result w;
    for (const Rdm1 &rho : all_rdm1(v.amplitudes())) {
        const ProductParams p = product_params(rho);
        w.beta.push_back(p.beta);
        w.gamma.push_back(p.gamma);
    }
    return w;
}

double x_of(const Rdm1 &rho) { return pauli_expectation(rho, Pauli::X); }

} // namespace

IqpGrid::IqpGrid(int k) : K(k) {
    if (k < 1) throw InvalidArgument("IQP grid size K must be >= 1");
}

double IqpGrid::value(int a) const {
    if (a < -2 * K || a > 2 * K) throw InvalidArgument("grid index outside [-2K, 2K]");
    return a * kPi / (2 * K + 1);
}

std::vector<double> IqpGrid::values() const {
    std::vector<double> out;
    out.reserve(size());
    for (int a = -2 * K; a <= 2 * K; ++a) out.push_back(value(a));
    return out;
}

IqpGrid IqpGrid::for_epsilon(int max_degree, int num_qubits, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("epsilon must be positive");
    if (max_degree < 0 || num_qubits < 1) throw InvalidArgument("bad IQP size");
    const double d = std::max(1, max_degree);
    return IqpGrid(static_cast<int>(std::ceil(kPi / 2.0 * std::sqrt(d * num_qubits / eps))));
}

std::vector<std::pair<int, int>> IqpLoadResult::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const Block &b : blocks) out.emplace_back(std::min(b.j, b.k), std::max(b.j, b.k));
    std::sort(out.begin(), out.end());
    return out;
}

IqpLoadResult iqp_exact_load(const StateVector &target, int K, std::optional<int> budget) {
    const IqpGrid grid(K);
    const int n = target.num_qubits();
    const int cap = budget.value_or(n * (n - 1) / 2);
    if (cap < 0) throw InvalidArgument("iteration budget must be non-negative");
    SearchState st(target);
    while (st.s() >= kExactS) {
        if (st.res.iterations >= cap) {
            throw ConvergenceError("IQP exact load: S = " + std::to_string(st.s()) +
                                   " after the budget of " + std::to_string(cap) +
                                   " iterations (not a K-grid IQP state?)");
        }
        const Candidate c = grid_search(st, grid, nullptr);
        if (!(c.value < st.s() - kImprove)) {
            throw ConvergenceError("IQP exact load: no grid block lowers S = " +
                                   std::to_string(st.s()));
        }
        st.accept(c.block);
    }
    finish(target, st, exact_step2(st.v));
    return std::move(st.res);
}

IqpLoadResult iqp_approx_load(const StateVector &target, double eps, int max_degree) {
    const IqpGrid grid = IqpGrid::for_epsilon(max_degree, target.num_qubits(), eps);
    SearchState st(target);
    std::set<std::pair<int, int>> used;
    while (st.s() >= kExactS) {
        const Candidate c = grid_search(st, grid, &used);
        if (!(c.value < st.s() - kImprove)) break;
        used.emplace(c.block.j, c.block.k);
        st.accept(c.block);
    }
    finish(target, st, exact_step2(st.v));
    return std::move(st.res);
}

long long iqp_shots_per_estimate(int num_qubits, const IqpShotOptions &opts) {
    if (!(opts.delta > 0.0 && opts.delta < 1.0)) throw InvalidArgument("delta must be in (0, 1)");
    if (!(opts.c > 0.0) || opts.max_degree < 0) throw InvalidArgument("bad shot-budget options");
    const int emax = opts.max_edges.value_or(num_qubits * (num_qubits - 1) / 2);
    const double arg = static_cast<double>(num_qubits) * num_qubits * std::max(1, emax) / opts.delta;
    return static_cast<long long>(
        std::ceil(opts.c * std::ldexp(1.0, opts.max_degree) * std::log(arg)));
}

double iqp_shot_threshold(int max_degree) {
    return (std::sqrt(2.0) - 1.0) / 2.0 * std::pow(2.0, -0.5 * max_degree);
}

IqpLoadResult iqp_shot_recover(const StateVector &oracle, const IqpShotOptions &opts) {
    const int n = oracle.num_qubits();
    const long long m = iqp_shots_per_estimate(n, opts);
    const double tau = iqp_shot_threshold(opts.max_degree);
    const int cap = opts.max_edges.value_or(n * (n - 1) / 2);
    SearchState st(oracle);
    long long shots = 0;

    for (int t = 0; t < cap; ++t) {
        const auto amps = st.v.amplitudes();
        bool found = false;
        Block chosen;
        for (int i = 0; i < n && !found; ++i) {
            for (int j = i + 1; j < n && !found; ++j) {
                Rng rng = substream(opts.seed, "iqp-pair",
                                    (static_cast<std::uint64_t>(t) * n + i) * n + j);
                const Rdm2 rho = rdm2(amps, i, j);
                std::array<std::array<double, 2>, 2> x{};
                const double alphas[2] = {0.0, -kPi / 4.0};
                for (int s = 0; s < 2; ++s) {
                    const Mat4 u = candidate_block(i, j, alphas[s], st.touched).matrix();
                    const Rdm2 out = u * rho * u.adjoint();
                    x[s][0] = std::abs(shot_estimate(x_of(trace_out_second(out)), m, rng));
                    x[s][1] = std::abs(shot_estimate(x_of(trace_out_first(out)), m, rng));
                    shots += 2 * m;
                }
                if (x[1][0] - x[0][0] > tau && x[1][1] - x[0][1] > tau) {
                    found = true;
                    chosen = candidate_block(i, j, alphas[1], st.touched);
                }
            }
        }
        if (!found) break;
        st.accept(chosen);
    }

    Rng rng = substream(opts.seed, "iqp-step2");
    Step2Result w;
    for (const Rdm1 &rho : all_rdm1(st.v.amplitudes())) {
        const double bx = shot_estimate(pauli_expectation(rho, Pauli::X), m, rng);
        const double by = shot_estimate(pauli_expectation(rho, Pauli::Y), m, rng);
        const double bz = shot_estimate(pauli_expectation(rho, Pauli::Z), m, rng);
        shots += 3 * m;
        const ProductParams p = product_params(rdm1_from_bloch(bx, by, bz));
        w.beta.push_back(p.beta);
        w.gamma.push_back(p.gamma);
    }
    finish(oracle, st, w);
    st.res.shots_used = shots;
    return std::move(st.res);
}

IqpCalibration iqp_calibrate_shot_constant(const std::vector<double> &candidates, int trials,
                                           int num_qubits, int max_degree, double delta,
                                           std::uint64_t seed) {
    if (candidates.empty() || trials < 1) throw InvalidArgument("empty calibration run");
    IqpCalibration out;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        Rng rng = substream(seed, "iqp-calibrate", ci);
        const int max_e = num_qubits * (num_qubits - 1) / 2;
        int failures = 0;
        for (int t = 0; t < trials; ++t) {
            const int e = std::uniform_int_distribution<int>(1, max_e)(rng);
            const IqpSpec spec = random_iqp_spec(num_qubits, e, max_degree, rng,
                                                 [](Rng &) { return kPi / 4.0; });
            IqpShotOptions o;
            o.max_degree = std::max(1, spec.max_degree());
            o.delta = delta;
            o.c = candidates[ci];
            o.seed = rng();
            const IqpLoadResult r = iqp_shot_recover(iqp_state(spec), o);
            std::vector<std::pair<int, int>> truth = spec.edges;
            std::sort(truth.begin(), truth.end());
            if (r.edges() != truth) ++failures;
        }
        out = {candidates[ci], static_cast<double>(failures) / trials, trials};
        if (out.failure_rate <= delta / 2.0) break;
    }
    return out;
}

double iqp_x_formula(const IqpSpec &spec, int n) {
    spec.validate();
    if (n < 0 || n >= spec.num_qubits) throw InvalidArgument("qubit index out of range");
    double x = 1.0;
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        if (spec.edges[e].first == n || spec.edges[e].second == n) x *= std::cos(spec.angles[e]);
    }
    return x;
}

StateVector iqp_residual_state(const IqpSpec &spec) {
    spec.validate();
    Circuit c(spec.num_qubits);
    for (int q = 0; q < spec.num_qubits; ++q) c.add(GateOp::h(q));
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        c.add(GateOp::rzz(spec.edges[e].first, spec.edges[e].second, spec.angles[e]));
    }
    return prepare(c, {});
}

IqpSpec random_iqp_spec(int num_qubits, int num_edges, int max_degree, Rng &rng,
                        const std::function<double(Rng &)> &angle) {
    if (num_qubits < 1 || num_edges < 0 || max_degree < 0) {
        throw InvalidArgument("bad random IQP spec size");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < num_qubits; ++i) {
        for (int j = i + 1; j < num_qubits; ++j) pairs.emplace_back(i, j);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    IqpSpec spec;
    spec.num_qubits = num_qubits;
    std::vector<int> deg(num_qubits, 0);
    for (const auto &[i, j] : pairs) {
        if (static_cast<int>(spec.edges.size()) >= num_edges) break;
        if (max_degree > 0 && (deg[i] >= max_degree || deg[j] >= max_degree)) continue;
        ++deg[i];
        ++deg[j];
        spec.edges.emplace_back(i, j);
        spec.angles.push_back(angle(rng));
    }
    return spec;
}

nlohmann::json to_json(const IqpLoadResult &r) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[a, b] : r.edges()) edges.push_back({a, b});
    return nlohmann::json{{"iterations", r.iterations}, {"S_final", r.s_final},
                          {"s_trace", r.s_trace},       {"infidelity", r.infidelity},
                          {"shots_used", r.shots_used}, {"E_recovered", edges}};
}

} // namespace qload
