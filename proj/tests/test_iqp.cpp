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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "qload/entanglement.hpp"
#include "qload/iqp.hpp"
#include "qload/random.hpp"
#include "qload/rdm.hpp"

namespace qload {
namespace {

IqpSpec ring(int n, double angle) {
    IqpSpec s{n, {}, {}};
    for (int i = 0; i < n; ++i) {
        s.edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
        s.angles.push_back(angle);
    }
    return s;
}

std::vector<std::pair<int, int>> sorted_edges(const IqpSpec &s) {
    auto e = s.edges;
    std::sort(e.begin(), e.end());
    return e;
}

TEST(IqpGrid, values_are_symmetric) {
    const IqpGrid g(3);
    const auto v = g.values();
    ASSERT_EQ(v.size(), 13u);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i], -v[v.size() - 1 - i], 1e-15);
    EXPECT_NEAR(g.value(1), kPi / 7, 1e-15);
    EXPECT_THROW(g.value(7), InvalidArgument);
    EXPECT_THROW(IqpGrid(0), InvalidArgument);
}

TEST(IqpGrid, epsilon_sizing) {
    const int D = 2, N = 6;
    const double eps = 0.05;
    const IqpGrid g = IqpGrid::for_epsilon(D, N, eps);
    EXPECT_EQ(g.K, static_cast<int>(std::ceil(kPi / 2 * std::sqrt(D * N / eps))));
    EXPECT_LE(D * N * std::pow(kPi / (2 * g.K + 1), 2), eps);
}

TEST(HadamardAngles, equal_minus_i_h) {
    const Mat2 u = ry_matrix(kHadamardAngles[1]) * rz_matrix(kHadamardAngles[0]);
    Mat2 h;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    EXPECT_LT((u - cplx(0, -1) * h).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(IqpExact, empty_graph) {
    const IqpLoadResult r = iqp_exact_load(iqp_state({4, {}, {}}), 2);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_LT(r.s_final, 1e-10);
    EXPECT_LT(r.infidelity, 1e-9);
}

TEST(IqpExact, single_edge_picks_unique_angle) {
    const IqpSpec spec{2, {{0, 1}}, {kPi / 5}};
    const StateVector target = iqp_state(spec);
    const IqpLoadResult r = iqp_exact_load(target, 2);
    ASSERT_EQ(r.iterations, 1);
    EXPECT_NEAR(r.blocks[0].angles[4], -kPi / 5, 1e-12);
    EXPECT_LT(r.infidelity, 1e-9);
    // Brute force: S vanishes exactly for alpha = -pi/5 mod pi; the search
    // returns the first of these in ascending grid order.
    const IqpGrid g(2);
    std::vector<double> zeros;
    for (double a : g.values()) {
        const Block b{0, 1, {kHadamardAngles[0], kHadamardAngles[1], kHadamardAngles[0],
                             kHadamardAngles[1], a}};
        const StateVector out = apply_gate(target, GateOp::u2q(0, 1, b.matrix()));
        if (entanglement_total(out.amplitudes()) < 1e-10) zeros.push_back(a);
    }
    ASSERT_EQ(zeros.size(), 2u);
    EXPECT_NEAR(zeros[0], -kPi / 5, 1e-12);
    EXPECT_NEAR(zeros[1], 4 * kPi / 5, 1e-12);
}

TEST(IqpExact, random_graph_recovery) {
    Rng rng = substream(1, "test-iqp");
    const IqpGrid g(3);
    const IqpSpec spec = random_iqp_spec(8, 10, 0, rng, [&](Rng &r) {
        int a = 0;
        while (a == 0) a = std::uniform_int_distribution<int>(-6, 6)(r);
        return g.value(a);
    });
    ASSERT_EQ(spec.edges.size(), 10u);
    const IqpLoadResult r = iqp_exact_load(iqp_state(spec), 3, 10);
    EXPECT_LE(r.iterations, 10);
    EXPECT_LT(r.s_final, 1e-10);
    EXPECT_LT(r.infidelity, 1e-9);
    EXPECT_EQ(r.edges(), sorted_edges(spec));
}

TEST(IqpExact, off_grid_input_fails) {
    const IqpSpec spec{3, {{0, 1}, {1, 2}}, {0.123, 0.456}};
    EXPECT_THROW(iqp_exact_load(iqp_state(spec), 1, 2), ConvergenceError);
}

TEST(IqpApprox, grid_angle_is_exact) {
    const IqpSpec spec{2, {{0, 1}}, {IqpGrid::for_epsilon(1, 2, 0.1).value(3)}};
    const IqpLoadResult r = iqp_approx_load(iqp_state(spec), 0.1, 1);
    EXPECT_LT(r.s_final, 1e-10);
}

TEST(IqpApprox, ring_meets_epsilon) {
    Rng rng = substream(2, "test-iqp");
    std::uniform_real_distribution<double> u(-kPi, kPi);
    int ok = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        IqpSpec spec = ring(6, 0.0);
        for (double &a : spec.angles) a = u(rng);
        const IqpLoadResult r = iqp_approx_load(iqp_state(spec), 0.05, 2);
        ok += r.s_final <= 0.05;
        EXPECT_LE(r.iterations, 6);
    }
    EXPECT_GE(ok, trials * 95 / 100);
}

TEST(IqpShots, budget_and_threshold) {
    IqpShotOptions o;
    o.max_degree = 2;
    o.delta = 0.05;
    o.c = 10.0;
    EXPECT_EQ(iqp_shots_per_estimate(4, o),
              static_cast<long long>(std::ceil(10.0 * 4 * std::log(16.0 * 6 / 0.05))));
    EXPECT_NEAR(iqp_shot_threshold(0), (std::sqrt(2.0) - 1) / 2, 1e-15);
    o.delta = 1.5;
    EXPECT_THROW(iqp_shots_per_estimate(4, o), InvalidArgument);
}

TEST(IqpShots, empty_graph_accepts_nothing) {
    IqpShotOptions o;
    o.seed = 3;
    const IqpLoadResult r = iqp_shot_recover(iqp_state({3, {}, {}}), o);
    EXPECT_TRUE(r.edges().empty());
    EXPECT_GT(r.shots_used, 0);
}

TEST(IqpShots, single_edge_success_rate) {
    const IqpSpec spec{2, {{0, 1}}, {kPi / 4}};
    const StateVector target = iqp_state(spec);
    IqpShotOptions o;
    o.max_degree = 1;
    o.delta = 0.05;
    int ok = 0;
    for (int t = 0; t < 200; ++t) {
        o.seed = t;
        const IqpLoadResult r = iqp_shot_recover(target, o);
        ok += r.edges() == spec.edges;
    }
    EXPECT_GE(ok, 190);
}

TEST(IqpShots, recovers_degree_bounded_graph) {
    Rng rng = substream(4, "test-iqp");
    const IqpSpec spec = random_iqp_spec(5, 4, 2, rng, [](Rng &) { return kPi / 4; });
    IqpShotOptions o;
    o.max_degree = 2;
    o.seed = 8;
    const IqpLoadResult r = iqp_shot_recover(iqp_state(spec), o);
    EXPECT_EQ(r.edges(), sorted_edges(spec));
    EXPECT_LT(r.infidelity, 0.05);
}

TEST(IqpCalibration, reports_rate) {
    const IqpCalibration c = iqp_calibrate_shot_constant({50.0, 200.0}, 20, 3, 2, 0.1, 5);
    EXPECT_EQ(c.trials, 20);
    EXPECT_LE(c.failure_rate, 0.05);
}

TEST(IqpFormula, examples) {
    EXPECT_DOUBLE_EQ(iqp_x_formula({3, {{0, 1}}, {0.3}}, 2), 1.0);
    EXPECT_NEAR(iqp_x_formula({2, {{0, 1}}, {kPi / 2}}, 0), 0.0, 1e-16);
    EXPECT_THROW(iqp_x_formula({2, {{0, 1}}, {0.1}}, 3), InvalidArgument);
}

TEST(IqpFormula, pi8_values_lie_on_powers) {
    Rng rng = substream(5, "test-iqp");
    const IqpSpec spec = random_iqp_spec(6, 7, 3, rng, [](Rng &) { return kPi / 4; });
    for (int q = 0; q < 6; ++q) {
        const double x = iqp_x_formula(spec, q);
        bool hit = false;
        for (int d = 0; d <= 3; ++d) hit |= std::abs(x - std::pow(std::sqrt(2.0) / 2, d)) < 1e-12;
        EXPECT_TRUE(hit) << x;
    }
}

TEST(IqpFormula, matches_residual_state_and_entropy) {
    Rng rng = substream(6, "test-iqp");
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const IqpSpec spec = random_iqp_spec(
            n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), 0, rng,
            [](Rng &r) { return std::uniform_real_distribution<double>(-kPi, kPi)(r); });
        const StateVector v = iqp_residual_state(spec);
        const EntanglementReport rep = entanglement_measure(v);
        for (int q = 0; q < n; ++q) {
            const double x = iqp_x_formula(spec, q);
            EXPECT_NEAR(pauli_expectation(v, Pauli::X, q), x, 1e-12);
            EXPECT_NEAR(pauli_expectation(v, Pauli::Y, q), 0.0, 1e-12);
            EXPECT_NEAR(pauli_expectation(v, Pauli::Z, q), 0.0, 1e-12);
            EXPECT_NEAR(rep.per_qubit[q], -std::log2((1.0 + x * x) / 2.0), 1e-10);
        }
    }
}

TEST(IqpJson, report_keys) {
    const IqpLoadResult r = iqp_exact_load(iqp_state({2, {{0, 1}}, {kPi / 3}}), 1);
    const nlohmann::json j = to_json(r);
    for (const char *k : {"iterations", "S_final", "infidelity", "shots_used", "E_recovered"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(j.at("E_recovered").size(), 1u);
}

} // namespace
} // namespace qload
