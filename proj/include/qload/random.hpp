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
#include <random>
#include <string_view>

#include "qload/state_vector.hpp"

namespace qload {

using Rng = std::mt19937_64;

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Independent generator for the named component of a run seeded by `master`.
Rng substream(std::uint64_t master, std::string_view name, std::uint64_t index = 0);

/// Haar-random pure state.
StateVector random_state(int num_qubits, Rng &rng);

/// Haar-random 4x4 unitary.
Mat4 random_unitary4(Rng &rng);

/// Random single-qubit density matrix (uniform in the Bloch ball).
Mat2 random_rdm1(Rng &rng);

} // namespace qload
