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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qload/circuit.hpp"
#include "qload/random.hpp"

namespace qload {

enum class SpinModel { TFIM, XXZ };

/**
 * Nearest-neighbour spin Hamiltonian with open boundaries on a rows x cols
 * grid (rows = 1 for a chain); site (r, c) is qubit r * cols + c.
 *   TFIM: H = -J sum Z_i Z_j - g sum X_i - field_eps sum X_i
 *   XXZ:  H = sum Jxy (X_i X_j + Y_i Y_j) + Jz Z_i Z_j
 */
struct SpinHamiltonianSpec {
    SpinModel model{SpinModel::TFIM};
    int rows{1};
    int cols{2};
    double J{1.0};
    double g{1.0};
    double Jxy{1.0};
    double Jz{1.0};
    /// Tiny symmetric field selecting the even-parity TFIM ground state.
    double field_eps{1e-10};
    /// Seed of the random start vector (XXZ only).
    std::uint64_t seed{0};

    static SpinHamiltonianSpec tfim_chain(int n, double J, double g);
    static SpinHamiltonianSpec xxz_grid(int rows, int cols, double Jxy, double Jz);

    int num_sites() const { return rows * cols; }
    std::vector<std::pair<int, int>> edges() const;
};

/// y = H x for a real vector.
void hamiltonian_apply(const SpinHamiltonianSpec &spec, std::span<const double> x,
                       std::span<double> y);

/// Dense real Hamiltonian (small N only).
Eigen::MatrixXd hamiltonian_dense(const SpinHamiltonianSpec &spec);

struct GroundState {
    StateVector state{1};
    double energy{0.0};
    double residual{0.0};
    int iterations{0};
};

/// Restarted Lanczos with full reorthogonalization; throws ConvergenceError
/// when the residual stays above `tol` after `max_iter` matrix-vector products.
GroundState ground_state(const SpinHamiltonianSpec &spec, double tol = 1e-8,
                         int max_iter = 500);

/// Dense diagonalization path (N <= 12).
GroundState ground_state_dense(const SpinHamiltonianSpec &spec);

StateVector ghz(int num_qubits);

/// Gate list of a random circuit with `w` CZ gates on independently sampled
/// distinct pairs and 3w rotations about a random axis by Uniform[0, 2 pi),
/// uniformly shuffled. X rotations are realized as H RZ H.
Circuit random_circuit(int num_qubits, int w, Rng &rng);
StateVector random_circuit_state(int num_qubits, int w, std::uint64_t seed);

/// Layers of per-qubit random rotations followed by CZ on one of the four
/// nearest-neighbour tilings (horizontal even, horizontal odd, vertical
/// even, vertical odd), cycling with the layer index.
Circuit random_circuit_2d(int rows, int cols, int depth, Rng &rng);
StateVector random_circuit_state_2d(int rows, int cols, int depth, std::uint64_t seed);

/// Grid edges of tiling `t` in [0, 4).
std::vector<std::pair<int, int>> grid_tiling(int rows, int cols, int t);

struct IqpSpec {
    int num_qubits{1};
    std::vector<std::pair<int, int>> edges;
    std::vector<double> angles;

    void validate() const;
    int max_degree() const;
};

/// H^N prod_e exp(-i w_e Z Z / 2) H^N |0...0>.
Circuit iqp_circuit(const IqpSpec &spec);
StateVector iqp_state(const IqpSpec &spec);

/// Zero-pads to a power of two (at least 2) and normalizes.
StateVector amplitude_encode(std::span<const cplx> v);
StateVector amplitude_encode(std::span<const double> v);

/// Amplitude j = v_j + i v_{j + 2^N} for a length-2^{N+1} real vector, normalized.
StateVector compact_encode(std::span<const double> v);

/// Zero-pads a rows x cols image into a pad_rows x pad_cols frame (top-left
/// aligned), flattens row-major and normalizes.
std::vector<double> pad_flatten_normalize(std::span<const double> image, int rows, int cols,
                                          int pad_rows, int pad_cols);

/// Reads a vector of raw little-endian f64 values.
std::vector<double> read_f64_vector(const std::filesystem::path &path);

/// Reads all numeric fields of a CSV file in order.
std::vector<double> read_csv_vector(const std::filesystem::path &path);

/// Random state with bond dimension at most `chi` across every cut.
StateVector random_mps_state(int num_qubits, int chi, Rng &rng);

/// (1/N) sum_n <X_n>.
double magnetization(const StateVector &state);

/// K_ij = |<psi_i|psi_j>|^2.
Eigen::MatrixXd kernel_matrix(const std::vector<StateVector> &states);

} // namespace qload
