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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qload/circuit.hpp"

namespace qload {

/**
 * QSV1 state file:
 *   bytes 0-3  "QSV1"
 *   byte  4    format version (1)
 *   bytes 5-8  num_qubits, u32 little-endian
 *   then 2^N records of (re, im) as f64 little-endian.
 */
void write_state(const std::filesystem::path &path, const StateVector &state);
StateVector read_state(const std::filesystem::path &path);

std::string encode_state(const StateVector &state);
StateVector decode_state(const std::string &bytes);

/// Circuit JSON: {"num_qubits": N, "ops": [{"kind", "qubits", "param",
/// "slot", "matrix", "scale"}...]}. "scale" may be omitted (default 1).
nlohmann::json circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &j);

} // namespace qload
