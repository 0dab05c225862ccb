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
#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "qload/baselines.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/random.hpp"
#include "qload/rdm.hpp"

namespace qload {
namespace {

double dense_min_energy(const SpinHamiltonianSpec &spec) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian_dense(spec),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
}

TEST(GroundState, single_site_tfim) {
    const GroundState gs = ground_state(SpinHamiltonianSpec::tfim_chain(1, 1.0, 0.7));
    EXPECT_NEAR(gs.energy, -0.7, 1e-8);
    EXPECT_NEAR(pauli_expectation(gs.state, Pauli::X, 0), 1.0, 1e-8);
}

TEST(GroundState, two_site_tfim_energy) {
    const GroundState gs = ground_state(SpinHamiltonianSpec::tfim_chain(2, 1.0, 1.0));
    EXPECT_NEAR(gs.energy, -std::sqrt(5.0), 1e-8);
    EXPECT_NEAR(dense_min_energy(SpinHamiltonianSpec::tfim_chain(2, 1.0, 1.0)), -std::sqrt(5.0),
                1e-8);
}

TEST(GroundState, lanczos_matches_dense_at_ten_sites) {
    const auto spec = SpinHamiltonianSpec::tfim_chain(10, 1.0, 1.0);
    const GroundState lz = ground_state(spec);
    const GroundState dn = ground_state_dense(spec);
    EXPECT_NEAR(lz.energy, dn.energy, 1e-8);
    EXPECT_GT(fidelity(lz.state, dn.state), 1.0 - 1e-8);
    EXPECT_TRUE(is_real_state(lz.state));
}

TEST(GroundState, xxz_grid_matches_dense) {
    const auto spec = SpinHamiltonianSpec::xxz_grid(2, 3, 1.0, 0.5);
    EXPECT_NEAR(ground_state(spec).energy, dense_min_energy(spec), 1e-8);
}

TEST(Hamiltonian, apply_matches_dense) {
    const auto spec = SpinHamiltonianSpec::tfim_chain(5, 0.9, 1.3);
    const Eigen::MatrixXd h = hamiltonian_dense(spec);
    Rng rng = substream(1, "test-ham");
    std::normal_distribution<double> g;
    Eigen::VectorXd x(32), y(32);
    for (auto &v : x) v = g(rng);
    hamiltonian_apply(spec, std::span<const double>(x.data(), 32), std::span<double>(y.data(), 32));
    EXPECT_LT((y - h * x).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Ghz, examples) {
    const StateVector plus = ghz(1);
    EXPECT_NEAR(pauli_expectation(plus, Pauli::X, 0), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(ghz(2)[3]), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(entanglement_total(ghz(7).amplitudes()), 7.0, 1e-12);
}

TEST(RandomCircuit, examples) {
    const StateVector zero = random_circuit_state(5, 0, 3);
    EXPECT_NEAR(std::abs(zero[0]), 1.0, 1e-15);
    const StateVector a = random_circuit_state(6, 10, 7);
    const StateVector b = random_circuit_state(6, 10, 7);
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a[i], b[i]);
    Rng rng = substream(2, "test-rc");
    const Circuit c = random_circuit(4, 5, rng);
    EXPECT_EQ(c.count(GateKind::CZ), 5);
}

TEST(RandomCircuit, deep_circuits_are_highly_entangled) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        total += entanglement_total(random_circuit_state(10, 40, seed).amplitudes());
    }
    EXPECT_GT(total / 5.0, 5.0);
}

TEST(GridTiling, covers_all_couplings) {
    using P = std::vector<std::pair<int, int>>;
    EXPECT_EQ(grid_tiling(1, 2, 0), (P{{0, 1}}));
    EXPECT_TRUE(grid_tiling(1, 2, 2).empty());
    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < 4; ++t) {
        for (auto e : grid_tiling(4, 4, t)) seen.insert(e);
    }
    EXPECT_EQ(seen.size(), 24u);
    Rng a = substream(3, "x"), b = substream(3, "x");
    EXPECT_EQ(random_circuit_2d(3, 3, 4, a).size(), random_circuit_2d(3, 3, 4, b).size());
}

TEST(IqpState, examples) {
    IqpSpec empty{3, {}, {}};
    const StateVector e = iqp_state(empty);
    EXPECT_NEAR(std::abs(e[0]), 1.0, 1e-15);

    IqpSpec zero{3, {{0, 1}, {1, 2}}, {0.0, 0.0}};
    EXPECT_NEAR(std::abs(iqp_state(zero)[0]), 1.0, 1e-14);

    IqpSpec bad{2, {{0, 0}}, {0.1}};
    EXPECT_THROW(bad.validate(), InvalidArgument);
    IqpSpec star{4, {{0, 1}, {0, 2}, {0, 3}}, {0.1, 0.2, 0.3}};
    EXPECT_EQ(star.max_degree(), 3);
}

TEST(Encoding, examples) {
    const std::vector<double> e0{1, 0, 0, 0};
    EXPECT_NEAR(std::abs(amplitude_encode(e0)[0]), 1.0, 1e-15);
    const std::vector<double> ones{1, 1};
    EXPECT_NEAR(pauli_expectation(amplitude_encode(ones), Pauli::X, 0), 1.0, 1e-15);
    const std::vector<double> c{1, 0, 0, 0, 1, 0, 0, 0};
    const StateVector s = compact_encode(c);
    EXPECT_EQ(s.num_qubits(), 2);
    EXPECT_NEAR(std::abs(s[0] - cplx(1.0, 1.0) / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_THROW(compact_encode(std::vector<double>{1, 2, 3}), InvalidArgument);

    const std::vector<double> img{1, 2, 3, 4, 5, 6};
    const std::vector<double> p = pad_flatten_normalize(img, 2, 3, 4, 4);
    EXPECT_EQ(p.size(), 16u);
    EXPECT_NEAR(p[5] * std::sqrt(91.0), 5.0, 1e-12);
}

TEST(Encoding, reads_raw_and_csv_vectors) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto raw = dir / "qload_test_vec.f64";
    const auto csv = dir / "qload_test_vec.csv";
    const std::vector<double> v{0.5, -1.25, 3.0};
    {
        std::ofstream f(raw, std::ios::binary);
        f.write(reinterpret_cast<const char *>(v.data()), v.size() * sizeof(double));
        std::ofstream g(csv);
        g << "# header\n0.5, -1.25\n3.0\n";
    }
    EXPECT_EQ(read_f64_vector(raw), v);
    EXPECT_EQ(read_csv_vector(csv), v);
    std::filesystem::remove(raw);
    std::filesystem::remove(csv);
}

TEST(Magnetization, examples) {
    const StateVector plus = StateVector::normalized(std::vector<cplx>(16, 1.0));
    EXPECT_NEAR(magnetization(plus), 1.0, 1e-15);
    EXPECT_NEAR(magnetization(StateVector(4)), 0.0, 1e-15);
    double prev = -1.0;
    for (double g : {0.5, 1.0, 2.0}) {
        const double m = magnetization(ground_state(SpinHamiltonianSpec::tfim_chain(10, 1.0, g)).state);
        EXPECT_GT(m, prev);
        prev = m;
    }
    EXPECT_GT(prev, 0.85);
}

TEST(KernelMatrix, examples) {
    const StateVector a(2);
    const Eigen::MatrixXd same = kernel_matrix({a, a});
    EXPECT_TRUE(same.isApprox(Eigen::MatrixXd::Ones(2, 2)));
    const Eigen::MatrixXd orth = kernel_matrix({a, StateVector::basis(2, 3)});
    EXPECT_TRUE(orth.isApprox(Eigen::MatrixXd::Identity(2, 2)));
    Rng rng = substream(4, "test-kernel");
    std::vector<StateVector> states;
    for (int i = 0; i < 20; ++i) states.push_back(random_state(3, rng));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kernel_matrix(states));
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
}

TEST(RandomMps, bond_dimension_bounds_entanglement) {
    Rng rng = substream(5, "test-mps-gen");
    const StateVector s = random_mps_state(6, 2, rng);
    for (int cut = 1; cut < 6; ++cut) {
        Eigen::MatrixXcd m(1 << cut, 1 << (6 - cut));
        for (std::size_t i = 0; i < s.dim(); ++i) m(i & ((1 << cut) - 1), i >> cut) = s[i];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        int rank = 0;
        for (int k = 0; k < svd.singularValues().size(); ++k) rank += svd.singularValues()[k] > 1e-10;
        EXPECT_LE(rank, 2);
    }
}

} // namespace
} // namespace qload
