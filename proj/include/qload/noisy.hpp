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
#include <span>
#include <string_view>
#include <vector>

#include "qload/circuit.hpp"
#include "qload/random.hpp"
#include "qload/rdm.hpp"

namespace qload {

/// Largest register the dense density-matrix backend accepts.
inline constexpr int kMaxDensityQubits = 10;

/**
 * Dense N-qubit density matrix. Element (r, c) is stored at r * 2^N + c, so
 * the storage is a 2N-qubit vector whose low N bits index the column and
 * whose high N bits index the row.
 */
class DensityMatrix {
  public:
    /// |0...0><0...0|.
    explicit DensityMatrix(int num_qubits);

    static DensityMatrix from_state(const StateVector &state);

    /// Validates Hermiticity and unit trace within 1e-10.
    static DensityMatrix from_matrix(const Eigen::MatrixXcd &m);

    /// I / 2^N.
    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }

    cplx operator()(std::size_t r, std::size_t c) const { return data_[r * dim() + c]; }
    std::span<const cplx> data() const { return data_; }
    std::span<cplx> mutable_data() { return data_; }

    Eigen::MatrixXcd matrix() const;

    double trace() const;
    double purity() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;

    Rdm1 rdm1(int q) const;

    /// <psi| rho |psi>.
    double expectation(const StateVector &psi) const;

  private:
    int num_qubits_{0};
    std::vector<cplx> data_;
};

/// rho -> U rho U^dag for the gate at `angle`.
void evolve_unitary_inplace(DensityMatrix &rho, const GateOp &gate, double angle);
DensityMatrix evolve_unitary(DensityMatrix rho, const GateOp &gate);

/// (1 - p) rho + p (I_A / d_A) (x) Tr_A rho on the one or two qubits A.
void depolarize_inplace(DensityMatrix &rho, std::span<const int> qubits, double p);
DensityMatrix depolarize(DensityMatrix rho, std::span<const int> qubits, double p);

/// (1 - p) rho + p I / 2^N.
void depolarize_global_inplace(DensityMatrix &rho, double p);

/// Sum of single-qubit Renyi-2 entropies.
double entanglement_total(const DensityMatrix &rho);

enum class NoisePlacement { PerGate, PerLayer };

NoisePlacement noise_placement_from_string(std::string_view name);
std::string_view to_string(NoisePlacement placement);

/**
 * Local depolarizing noise. PerGate: each one-qubit gate is followed by a
 * rate-p1 channel on its qubit and each two-qubit gate by a rate-p2 channel
 * on its pair. PerLayer: ops are grouped greedily into layers of disjoint
 * gates of one arity; after a layer every qubit is depolarized, the pairs of
 * a two-qubit layer jointly at p2 and all remaining qubits at the layer rate.
 */
struct NoiseModel {
    double p1{0.0};
    double p2{0.0};
    NoisePlacement placement{NoisePlacement::PerGate};

    void validate() const;
};

/// Evolves |0...0> through `circuit` under `noise`.
DensityMatrix run_noisy(const Circuit &circuit, std::span<const double> params,
                        const NoiseModel &noise);

/// 1 - <target| rho_out |target>.
double noisy_load_eval(const StateVector &target, const Circuit &circuit,
                       std::span<const double> params, const NoiseModel &noise);

/// Random density matrix of rank `rank` (rank 1 gives a pure state).
DensityMatrix random_density_matrix(int num_qubits, int rank, Rng &rng);

struct DepolBoundsReport {
    int checks{0};
    int violations{0};
    double max_violation{0.0};
};

/// Checks the depolarizing entropy envelope on random pure and mixed states
/// with N in [1, max_qubits]; a violation exceeds the envelope by > 1e-9.
DepolBoundsReport verify_depol_bounds(int max_qubits, int trials,
                                      std::span<const double> p_grid, std::uint64_t seed);

struct NoisyBoundsReport {
    int checks{0};
    int violations{0};
    double max_violation{0.0};
};

/**
 * Layered-noise envelope check on random instances: forward and backward
 * circuits of `layers` random layers with a global rate-p depolarizing
 * channel around every layer, the envelope widened by (L + 1) * 2 * (2p).
 * The lower side is checked for the constructed and for random product
 * states, the upper side for the constructed one.
 */
NoisyBoundsReport verify_noisy_bounds(int num_qubits, int layers, int trials, double p,
                                      std::uint64_t seed);

} // namespace qload
