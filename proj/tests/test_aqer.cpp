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

#include <cmath>

#include <gtest/gtest.h>

#include "qload/aqer.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/gradients.hpp"
#include "qload/random.hpp"
#include "qload/rdm.hpp"

namespace qload {
namespace {

StateVector product_target(int n, Rng &rng) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.add(GateOp::ry(q, u(rng)));
        c.add(GateOp::rz(q, u(rng)));
    }
    return prepare(c, {});
}

AqerConfig config(int T, int T3 = 200) {
    AqerConfig cfg;
    cfg.T = T;
    cfg.T3 = T3;
    return cfg;
}

TEST(Block, matrix_matches_circuit_order) {
    Rng rng = substream(1, "test-block");
    std::uniform_real_distribution<double> u(-kPi, kPi);
    Block b{2, 0, {u(rng), u(rng), u(rng), u(rng), u(rng)}};
    Circuit c(3);
    c.add(GateOp::rz(b.j, b.angles[0]));
    c.add(GateOp::ry(b.j, b.angles[1]));
    c.add(GateOp::rz(b.k, b.angles[2]));
    c.add(GateOp::ry(b.k, b.angles[3]));
    c.add(GateOp::rzz(b.j, b.k, b.angles[4]));
    const StateVector s = random_state(3, rng);
    const StateVector want = apply_circuit(s, c, {});
    const StateVector got = apply_gate(s, GateOp::u2q(b.j, b.k, b.matrix()));
    for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_LT(std::abs(want[i] - got[i]), 1e-14);
}

TEST(AqerCircuit, layout_inverts_blocks) {
    Rng rng = substream(2, "test-aqer-circuit");
    std::uniform_real_distribution<double> u(-kPi, kPi);
    const int n = 3;
    std::vector<Block> blocks;
    for (auto [j, k] : std::vector<QubitPair>{{0, 1}, {1, 2}, {0, 2}}) {
        blocks.push_back({j, k, {u(rng), u(rng), u(rng), u(rng), u(rng)}});
    }
    Step2Result w{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
    const Circuit c = aqer_circuit(n, blocks);
    EXPECT_EQ(c.num_params(), 5 * 3 + 2 * n);
    EXPECT_EQ(c.count(GateKind::RZZ), 3);
    const std::vector<double> theta = aqer_initial_params(blocks, w);
    StateVector s = prepare(c, theta);
    for (const Block &b : blocks) s = apply_gate(s, GateOp::u2q(b.j, b.k, b.matrix()));
    for (int q = 0; q < n; ++q) {
        const Eigen::Vector2cd want = product_qubit(w.beta[q], w.gamma[q]);
        const Rdm1 r = rdm1(s, q);
        EXPECT_NEAR((want.adjoint() * r * want)(0, 0).real(), 1.0, 1e-12);
    }
}

TEST(Step1, product_state_stays_at_zero) {
    Rng rng = substream(3, "test-step1");
    const Step1Result r = aqer_step1(product_target(4, rng), config(1));
    EXPECT_LT(r.s_trace.front(), 1e-12);
    EXPECT_LT(r.s_trace.back(), 1e-4);
}

// Exhaustive search over the block angles at multiples of pi/4.
TEST(Step1, bell_pair_is_disentangled) {
    const StateVector bell = ghz(2);
    double grid_min = 10.0;
    std::array<double, 5> a{};
    for (int i = 0; i < 8 * 8 * 8 * 8 * 8; ++i) {
        int x = i;
        for (double &v : a) {
            v = (x % 8) * kPi / 4;
            x /= 8;
        }
        const StateVector out = apply_gate(bell, GateOp::u2q(0, 1, block_matrix(a)));
        grid_min = std::min(grid_min, entanglement_total(out.amplitudes()));
    }
    EXPECT_LT(grid_min, 1e-12);
    const Step1Result r = aqer_step1(bell, config(1));
    EXPECT_NEAR(r.s_trace.front(), 2.0, 1e-12);
    EXPECT_LT(r.s_trace.back(), 1e-3);
}

TEST(Step1, rejects_bad_pairs) {
    AqerConfig cfg = config(1);
    cfg.pair_set = {{0, 0}};
    EXPECT_THROW(aqer_step1(ghz(2), cfg), InvalidArgument);
    cfg.pair_set = {{0, 5}};
    EXPECT_THROW(aqer_step1(ghz(2), cfg), InvalidArgument);
}

TEST(Step2, examples) {
    const Step2Result zero = aqer_step2(StateVector(3));
    for (int q = 0; q < 3; ++q) {
        EXPECT_EQ(zero.beta[q], 0.0);
        EXPECT_NEAR(zero.gamma[q], 0.0, 1e-15);
    }
    const StateVector plus = StateVector::normalized(std::vector<cplx>(8, 1.0));
    const Step2Result p = aqer_step2(plus);
    for (int q = 0; q < 3; ++q) {
        EXPECT_NEAR(p.beta[q], 0.0, 1e-15);
        EXPECT_NEAR(p.gamma[q], kPi / 2, 1e-15);
    }
}

TEST(Step2, infidelity_below_upper_envelope) {
    Rng rng = substream(4, "test-step2");
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const StateVector v = random_state(n, rng);
        const Step2Result w = aqer_step2(v);
        const Circuit c = aqer_circuit(n, {});
        const double inf = infidelity_loss(v, c, aqer_initial_params({}, w));
        EXPECT_LE(inf, bound_f2(entanglement_total(v.amplitudes())) + 1e-9);
    }
}

TEST(Step3, already_optimal_start_is_kept) {
    Rng rng = substream(5, "test-step3");
    const StateVector target = product_target(3, rng);
    const Step2Result w = aqer_step2(target);
    const Circuit c = aqer_circuit(3, {});
    const std::vector<double> theta0 = aqer_initial_params({}, w);
    const Step3Result r = aqer_step3(target, c, theta0, config(0, 50));
    EXPECT_LT(r.loss_initial, 1e-12);
    for (std::size_t i = 0; i < theta0.size(); ++i) EXPECT_EQ(r.theta_star[i], theta0[i]);
}

TEST(RunAqer, examples) {
    Rng rng = substream(6, "test-run");
    EXPECT_LT(run_aqer(product_target(4, rng), config(0)).infidelity_final, 1e-10);
    EXPECT_LT(run_aqer(ghz(2), config(1)).infidelity_final, 1e-6);

    const AqerResult r = run_aqer(random_state(4, rng), config(8));
    EXPECT_LE(r.infidelity_final, r.infidelity_initial);
    EXPECT_EQ(r.G, 8);
    EXPECT_EQ(r.blocks.size(), 8u);
    EXPECT_EQ(r.s_trace.size(), 9u);
}

TEST(RunAqer, loaded_state_reproduces_reported_infidelity) {
    Rng rng = substream(7, "test-run");
    const StateVector target = random_state(4, rng);
    const AqerResult r = run_aqer(target, config(4));
    EXPECT_NEAR(r.infidelity_final, 1.0 - fidelity(target, prepare(r.circuit, r.theta_star)),
                1e-12);
}

TEST(RunAqer, ghz10_nine_blocks) {
    AqerConfig cfg = config(9, 2000);
    const AqerResult r = run_aqer(ghz(10), cfg);
    EXPECT_LT(r.s_trace.back(), 0.125);
    EXPECT_LT(r.infidelity_final, std::exp2(-12.0));
}

TEST(RunAqer, exact_mode_ignores_seed) {
    Rng rng = substream(8, "test-run");
    const StateVector target = random_state(4, rng);
    AqerConfig a = config(3), b = config(3);
    a.seed = 1;
    b.seed = 99;
    const AqerResult ra = run_aqer(target, a);
    const AqerResult rb = run_aqer(target, b);
    EXPECT_EQ(ra.theta_star, rb.theta_star);
    EXPECT_EQ(ra.infidelity_final, rb.infidelity_final);
}

TEST(RunAqer, shot_mode_is_reproducible) {
    Rng rng = substream(9, "test-run");
    const StateVector target = random_state(3, rng);
    AqerConfig cfg = config(2, 50);
    cfg.shots = 1000;
    cfg.seed = 5;
    const AqerResult a = run_aqer(target, cfg);
    const AqerResult b = run_aqer(target, cfg);
    EXPECT_EQ(a.theta_star, b.theta_star);
    EXPECT_GE(a.infidelity_final, 0.0);
}

TEST(AqerConfig, validation) {
    AqerConfig cfg;
    cfg.T = -1;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
    cfg.T = 1;
    cfg.shots = 0;
    EXPECT_THROW(cfg.validate(), InvalidArgument);
}

} // namespace
} // namespace qload
