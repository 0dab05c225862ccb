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

#include "qload/baselines.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/random.hpp"

namespace qload {
namespace {

TEST(GateCountTable, examples) {
    EXPECT_EQ(gate_count_table(GateCountMethod::MpsComplex, 10, 2), 54);
    EXPECT_EQ(gate_count_table(GateCountMethod::MpsReal, 10, 2), 36);
    EXPECT_EQ(gate_count_table(GateCountMethod::Aqer, 10, 20), 20);
    EXPECT_EQ(gate_count_table(GateCountMethod::Hec, 10, 4), 20);
    EXPECT_EQ(gate_count_table(GateCountMethod::Hec, 5, 1), 3);
    EXPECT_EQ(gate_count_table(GateCountMethod::AqceComplex, 10, 1), 15);
    EXPECT_EQ(gate_count_table(GateCountMethod::AqceReal, 10, 2), 20);
    EXPECT_EQ(gate_count_method_from_string("mps-complex"), GateCountMethod::MpsComplex);
    EXPECT_THROW(gate_count_method_from_string("qr"), InvalidArgument);
    EXPECT_THROW(gate_count_table(GateCountMethod::Hec, 4, 0), InvalidArgument);
}

TEST(CompleteUnitary, fills_missing_columns) {
    Rng rng = substream(1, "test-complete");
    const Mat4 u = random_unitary4(rng);
    Eigen::Matrix<cplx, 4, Eigen::Dynamic> given(4, 2);
    given.col(0) = u.col(0);
    given.col(1) = u.col(2);
    const Mat4 c = complete_unitary(given, {1, 3});
    EXPECT_LT(unitarity_defect(c), 1e-12);
    EXPECT_LT((c.col(1) - u.col(0)).norm(), 1e-14);
    EXPECT_LT((c.col(3) - u.col(2)).norm(), 1e-14);
}

TEST(MpsLayer, exact_on_bond_two_states) {
    const MpsExtraction e = mps_layer_extract(ghz(10));
    EXPECT_LT(entanglement_total(e.residual.amplitudes()), 1e-9);
    EXPECT_LT(mps_loader(ghz(10), 1).infidelity, 1e-9);
    Rng rng = substream(2, "test-mps");
    for (int t = 0; t < 10; ++t) {
        const StateVector s = random_mps_state(2 + static_cast<int>(rng() % 8), 2, rng);
        EXPECT_LT(mps_loader(s, 1).infidelity, 1e-9);
    }
}

TEST(MpsLayer, product_input_leaves_residual_unchanged) {
    Rng rng = substream(3, "test-mps");
    Circuit c(5);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int q = 0; q < 5; ++q) c.add(GateOp::ry(q, u(rng)));
    const StateVector s = prepare(c, {});
    const MpsExtraction e = mps_layer_extract(s);
    EXPECT_GT(fidelity(e.residual, StateVector(5)), 1.0 - 1e-10);
    EXPECT_LT(mps_loader(StateVector(6), 1).infidelity, 1e-10);
}

TEST(MpsLayer, zero_overlap_grows_with_layers) {
    Rng rng = substream(4, "test-mps");
    for (int t = 0; t < 10; ++t) {
        StateVector s = random_mps_state(6, 3, rng);
        double prev = std::abs(s[0]);
        for (int l = 0; l < 3; ++l) {
            s = mps_layer_extract(s).residual;
            EXPECT_GE(std::abs(s[0]), prev - 1e-9);
            prev = std::abs(s[0]);
        }
    }
}

TEST(MpsLoader, gate_accounting_follows_realness) {
    Rng rng = substream(5, "test-mps");
    const LoaderResult real = mps_loader(ghz(10), 2);
    EXPECT_EQ(real.G, 36);
    const LoaderResult cplx_r = mps_loader(random_state(10, rng), 2);
    EXPECT_EQ(cplx_r.G, 54);
    EXPECT_EQ(real.circuit.count(GateKind::U2Q), 18);
    const nlohmann::json j = loader_to_json("mps", real);
    EXPECT_EQ(j.at("G"), 36);
    EXPECT_DOUBLE_EQ(j.at("infidelity_final").get<double>(), real.infidelity);
}

TEST(Hec, pair_pattern_and_structure) {
    using P = std::vector<std::pair<int, int>>;
    EXPECT_EQ(hec_pairs(4, 0), (P{{0, 1}, {2, 3}}));
    EXPECT_EQ(hec_pairs(4, 1), (P{{1, 2}, {3, 0}}));
    const Circuit c = hec_build(4, 1);
    EXPECT_EQ(c.count(GateKind::CZ), 2);
    EXPECT_EQ(c.num_params(), 8);
    const Circuit d = hec_build(10, 4);
    EXPECT_EQ(d.count(GateKind::CZ), gate_count_table(GateCountMethod::Hec, 10, 4));
}

TEST(Hec, trains_to_zero_state) {
    const HecResult r = hec_train(StateVector(4), hec_build(4, 2), 7, 500, 0.05);
    EXPECT_LT(r.infidelity, 1e-3);
    const HecResult again = hec_train(StateVector(4), hec_build(4, 2), 7, 500, 0.05);
    EXPECT_EQ(r.theta, again.theta);
}

TEST(Aqce, zero_target_single_unit) {
    AqceOptions o;
    o.units_per_expansion = 1;
    o.sweeps_per_expansion = 1;
    const AqceResult r = aqce_run(StateVector(4), 1, o);
    EXPECT_LT(r.infidelity, 1e-10);
    ASSERT_FALSE(r.state.fidelity_trace.empty());
    EXPECT_NEAR(r.state.fidelity_trace.front(), 1.0, 1e-12);
}

TEST(Aqce, monotone_and_consistent_updates) {
    Rng rng = substream(6, "test-aqce");
    AqceOptions o;
    o.sweeps_per_expansion = 3;
    o.check_updates = true;
    for (int t = 0; t < 10; ++t) {
        const StateVector target = random_state(6, rng);
        const AqceResult r = aqce_run(target, 10, o);
        const auto &f = r.state.fidelity_trace;
        ASSERT_EQ(f.size(), r.state.checked_trace.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_NEAR(f[i], r.state.checked_trace[i], 1e-10);
            if (i) {
                EXPECT_GE(f[i], f[i - 1] - 1e-10);
            }
        }
        EXPECT_NEAR(r.infidelity, 1.0 - fidelity(target, prepare(r.circuit, {})), 1e-10);
        EXPECT_EQ(r.G, gate_count_table(GateCountMethod::AqceComplex, 6, 2));
    }
}

TEST(Aqce, real_targets_use_real_accounting) {
    const StateVector target = ground_state(SpinHamiltonianSpec::tfim_chain(6, 1.0, 1.0)).state;
    AqceOptions o;
    o.sweeps_per_expansion = 20;
    const AqceResult r = aqce_run(target, 10, o);
    EXPECT_EQ(r.G, 20);
    EXPECT_LT(r.infidelity, 0.05);
}

} // namespace
} // namespace qload
