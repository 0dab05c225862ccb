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

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "qload/aqer.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/noisy.hpp"
#include "qload/random.hpp"

namespace qload {
namespace {

Eigen::VectorXcd to_eigen(const StateVector &s) {
    Eigen::VectorXcd v(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) v[i] = s[i];
    return v;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Circuit mixed_circuit(int n, Rng &rng) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    Circuit c(n);
    for (int l = 0; l < 3; ++l) {
        for (int q = 0; q < n; ++q) c.add(GateOp::ry(q, u(rng)));
        for (int q = 0; q + 1 < n; ++q) c.add(GateOp::rzz(q, q + 1, u(rng)));
        c.add(GateOp::u2q(0, n - 1, random_unitary4(rng)));
        c.add(GateOp::h(1));
        c.add(GateOp::cz(1, 2));
    }
    return c;
}

TEST(DensityMatrix, construction) {
    const DensityMatrix z(2);
    EXPECT_EQ(z(0, 0), cplx(1.0));
    EXPECT_DOUBLE_EQ(z.purity(), 1.0);
    const DensityMatrix mm = DensityMatrix::maximally_mixed(3);
    EXPECT_NEAR(mm.purity(), 0.125, 1e-15);
    EXPECT_NEAR(entanglement_total(mm), 3.0, 1e-12);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
    EXPECT_THROW(DensityMatrix::from_matrix(bad), InvalidArgument);
    bad(0, 0) = 0.5;
    bad(1, 1) = 0.5;
    bad(0, 1) = 0.3;
    EXPECT_THROW(DensityMatrix::from_matrix(bad), InvalidArgument);
    EXPECT_THROW(DensityMatrix(kMaxDensityQubits + 1), InvalidArgument);
}

TEST(Evolution, identity_and_purity) {
    Rng rng = substream(1, "test-dm");
    const StateVector s = random_state(3, rng);
    DensityMatrix rho = DensityMatrix::from_state(s);
    const DensityMatrix same = evolve_unitary(rho, GateOp::u2q(0, 2, Mat4::Identity()));
    for (std::size_t i = 0; i < rho.data().size(); ++i) EXPECT_EQ(same.data()[i], rho.data()[i]);
    for (const GateOp &g : mixed_circuit(3, rng).ops()) rho = evolve_unitary(std::move(rho), g);
    EXPECT_NEAR(rho.purity(), 1.0, 1e-10);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
}

TEST(Evolution, matches_state_vector_backend) {
    Rng rng = substream(2, "test-dm");
    for (int t = 0; t < 5; ++t) {
        const int n = 3 + t % 3;
        const StateVector s = random_state(n, rng);
        const Circuit c = mixed_circuit(n, rng);
        DensityMatrix rho = DensityMatrix::from_state(s);
        for (const GateOp &g : c.ops()) evolve_unitary_inplace(rho, g, g.param);
        const Eigen::VectorXcd v = to_eigen(apply_circuit(s, c, {}));
        const Eigen::MatrixXcd want = v * v.adjoint();
        EXPECT_LT((rho.matrix() - want).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Depolarize, single_qubit_examples) {
    const std::array<int, 1> q0{0};
    DensityMatrix rho(1);
    EXPECT_EQ(depolarize(rho, q0, 0.0).matrix(), rho.matrix());
    EXPECT_TRUE(depolarize(rho, q0, 1.0).matrix().isApprox(Eigen::MatrixXcd::Identity(2, 2) / 2.0));
    EXPECT_NEAR(depolarize(rho, q0, 0.1).purity(), 0.95 * 0.95 + 0.05 * 0.05, 1e-15);
    EXPECT_NEAR(depolarize(rho, q0, 0.1).purity(), 0.905, 1e-15);
}

// Kraus form of the local channel: (1 - p) rho + p/d^2 sum_P P rho P over Paulis on A.
TEST(Depolarize, matches_pauli_twirl_oracle) {
    Rng rng = substream(3, "test-dm");
    const DensityMatrix rho = random_density_matrix(3, 2, rng);
    const std::array<int, 2> a{0, 2};
    const double p = 0.37;
    const DensityMatrix got = depolarize(rho, a, p);

    const Eigen::MatrixXcd m = rho.matrix();
    Eigen::MatrixXcd want = (1.0 - p) * m;
    const Mat2 paulis[4] = {Mat2::Identity(), pauli_matrix(Pauli::X), pauli_matrix(Pauli::Y),
                            pauli_matrix(Pauli::Z)};
    for (const Mat2 &pa : paulis) {
        for (const Mat2 &pb : paulis) {
            const Eigen::MatrixXcd op = kron(pb, kron(Mat2::Identity(), pa));
            want += p / 16.0 * op * m * op.adjoint();
        }
    }
    EXPECT_LT((got.matrix() - want).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Depolarize, global_channel) {
    Rng rng = substream(4, "test-dm");
    DensityMatrix rho = random_density_matrix(3, 1, rng);
    const Eigen::MatrixXcd before = rho.matrix();
    depolarize_global_inplace(rho, 0.25);
    const Eigen::MatrixXcd want = 0.75 * before + 0.25 * Eigen::MatrixXcd::Identity(8, 8) / 8.0;
    EXPECT_LT((rho.matrix() - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RandomDensityMatrix, is_valid) {
    Rng rng = substream(5, "test-dm");
    for (int rank : {1, 2, 5}) {
        const DensityMatrix r = random_density_matrix(3, rank, rng);
        EXPECT_NEAR(r.trace(), 1.0, 1e-12);
        EXPECT_LT(r.hermiticity_defect(), 1e-14);
        EXPECT_GT(r.min_eigenvalue(), -1e-12);
        if (rank == 1) {
            EXPECT_NEAR(r.purity(), 1.0, 1e-12);
        }
    }
}

TEST(RunNoisy, noiseless_matches_pure_backend) {
    Rng rng = substream(6, "test-noisy");
    const StateVector target = random_state(4, rng);
    const AqerResult r = [&] {
        AqerConfig cfg;
        cfg.T = 3;
        cfg.T3 = 100;
        return run_aqer(target, cfg);
    }();
    for (NoisePlacement pl : {NoisePlacement::PerGate, NoisePlacement::PerLayer}) {
        const double inf = noisy_load_eval(target, r.circuit, r.theta_star, {0.0, 0.0, pl});
        EXPECT_NEAR(inf, r.infidelity_final, 1e-10);
    }
    EXPECT_NEAR(noisy_load_eval(StateVector(3), Circuit(3), {}, {0.01, 0.02}), 0.0, 1e-15);
}

TEST(RunNoisy, noise_raises_infidelity) {
    AqerConfig cfg;
    cfg.T = 5;
    cfg.T3 = 300;
    const StateVector target = ghz(6);
    const AqerResult r = run_aqer(target, cfg);
    const double clean = noisy_load_eval(target, r.circuit, r.theta_star, {});
    double prev = clean;
    for (double p : {1e-3, 1e-2, 5e-2}) {
        for (NoisePlacement pl : {NoisePlacement::PerGate, NoisePlacement::PerLayer}) {
            const double inf = noisy_load_eval(target, r.circuit, r.theta_star, {p / 10, p, pl});
            EXPECT_GT(inf, clean);
        }
        const double inf = noisy_load_eval(target, r.circuit, r.theta_star, {p / 10, p});
        EXPECT_GT(inf, prev);
        prev = inf;
    }
}

// A layer of disjoint two-qubit gates followed by one single-qubit layer.
TEST(RunNoisy, per_layer_placement) {
    Circuit c(4);
    c.add(GateOp::cz(0, 1));
    c.add(GateOp::cz(2, 3));
    c.add(GateOp::h(0));
    const double p1 = 0.01, p2 = 0.05;
    const DensityMatrix got = run_noisy(c, {}, {p1, p2, NoisePlacement::PerLayer});

    DensityMatrix want(4);
    evolve_unitary_inplace(want, GateOp::cz(0, 1), 0.0);
    evolve_unitary_inplace(want, GateOp::cz(2, 3), 0.0);
    depolarize_inplace(want, std::array<int, 2>{0, 1}, p2);
    depolarize_inplace(want, std::array<int, 2>{2, 3}, p2);
    evolve_unitary_inplace(want, GateOp::h(0), 0.0);
    for (int q = 0; q < 4; ++q) depolarize_inplace(want, std::array<int, 1>{q}, p1);
    EXPECT_LT((got.matrix() - want.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(NoiseModel, parsing_and_validation) {
    EXPECT_EQ(noise_placement_from_string("per-layer"), NoisePlacement::PerLayer);
    EXPECT_EQ(to_string(NoisePlacement::PerGate), "per-gate");
    EXPECT_THROW(noise_placement_from_string("global"), InvalidArgument);
    NoiseModel bad{1.5, 0.0};
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(DepolBounds, endpoints) {
    Rng rng = substream(7, "test-depol");
    const DensityMatrix rho = random_density_matrix(4, 3, rng);
    const double s = entanglement_total(rho);
    DensityMatrix full = rho;
    depolarize_global_inplace(full, 1.0);
    EXPECT_NEAR(entanglement_total(full), 4.0, 1e-12);
    const Bounds b0 = depol_entropy_bounds(s, 4, 0.0);
    EXPECT_NEAR(b0.lower, s, 1e-15);
    EXPECT_NEAR(b0.upper, s, 1e-15);
    DensityMatrix mid = rho;
    depolarize_global_inplace(mid, 0.3);
    const Bounds b = depol_entropy_bounds(s, 4, 0.3);
    EXPECT_GE(entanglement_total(mid), b.lower - 1e-12);
    EXPECT_LE(entanglement_total(mid), b.upper + 1e-12);
}

TEST(DepolBounds, sweep_has_no_violations) {
    const std::vector<double> grid{0.0, 0.1, 0.3, 1.0};
    const DepolBoundsReport r = verify_depol_bounds(4, 40, grid, 11);
    EXPECT_EQ(r.checks, 160);
    EXPECT_EQ(r.violations, 0);
}

TEST(NoisyBounds, sweep_has_no_violations) {
    const NoisyBoundsReport r = verify_noisy_bounds(4, 3, 20, 1e-3, 12);
    EXPECT_GT(r.checks, 0);
    EXPECT_EQ(r.violations, 0);
}

} // namespace
} // namespace qload
