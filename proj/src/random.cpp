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

#include "qload/random.hpp"

#include <cmath>

#include "qload/rdm.hpp"

namespace qload {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng substream(std::uint64_t master, std::string_view name, std::uint64_t index) {
    const std::uint64_t tag = fnv1a(name);
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

StateVector random_state(int num_qubits, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> amps(dim_of(num_qubits));
    for (cplx &a : amps) a = cplx(g(rng), g(rng));
    return StateVector::normalized(std::move(amps));
}

Mat4 random_unitary4(Rng &rng) {
    std::normal_distribution<double> g;
    Mat4 z;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) z(i, j) = cplx(g(rng), g(rng));
    }
    Eigen::HouseholderQR<Mat4> qr(z);
    Mat4 q = qr.householderQ();
    const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 4; ++j) {
        const cplx d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

Mat2 random_rdm1(Rng &rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    double x = g(rng), y = g(rng), z = g(rng);
    const double n = std::sqrt(x * x + y * y + z * z);
    const double r = std::cbrt(u(rng));
    return rdm1_from_bloch(r * x / n, r * y / n, r * z / n);
}

} // namespace qload
