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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qload {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Precondition violated by the caller (bad index, wrong size, ...).
class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string &what) : Error(what) {}
};

/// A numerical routine failed to reach its tolerance.
class ConvergenceError : public Error {
  public:
    explicit ConvergenceError(const std::string &what) : Error(what) {}
};

/// Malformed or truncated input file.
class FormatError : public Error {
  public:
    explicit FormatError(const std::string &what) : Error(what) {}
};

inline constexpr std::size_t dim_of(int num_qubits) {
    return std::size_t{1} << num_qubits;
}

} // namespace qload
