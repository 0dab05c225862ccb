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

#include "qload/rdm.hpp"

#include <bit>
#include <cmath>

namespace qload {

namespace {

int qubits_of(std::span<const cplx> amps) { return std::countr_zero(amps.size()); }

void check_qubit(std::span<const cplx> amps, int q) {
    if (q < 0 || q >= qubits_of(amps)) {
        throw InvalidArgument("qubit " + std::to_string(q) + " out of range");
    }
}

} // namespace

Pauli pauli_from_char(char c) {
    switch (c) {
    case 'X':
    case 'x': return Pauli::X;
    case 'Y':
    case 'y': return Pauli::Y;
    case 'Z':
    case 'z': return Pauli::Z;
    default: throw InvalidArgument(std::string("unknown Pauli axis '") + c + "'");
    }
}

Mat2 pauli_matrix(Pauli p) {
    Mat2 m;
    switch (p) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Rdm1 rdm1(std::span<const cplx> amps, int q) {
    check_qubit(amps, q);
    const std::size_t m = std::size_t{1} << q;
    double p0 = 0.0, p1 = 0.0;
    cplx c10{0.0, 0.0};
    for (std::size_t hi = 0; hi < amps.size(); hi += 2 * m) {
        for (std::size_t lo = 0; lo < m; ++lo) {
            const cplx a = amps[hi + lo];
            const cplx b = amps[hi + lo + m];
            p0 += std::norm(a);
            p1 += std::norm(b);
            c10 += b * std::conj(a);
        }
    }
    Rdm1 r;
    r << p0, std::conj(c10), c10, p1;
    return r;
}

Rdm2 rdm2(std::span<const cplx> amps, int q1, int q2) {
    check_qubit(amps, q1);
    check_qubit(amps, q2);
    if (q1 == q2) throw InvalidArgument("rdm2 needs two distinct qubits");
    const std::size_t m1 = std::size_t{1} << q1;
    const std::size_t m2 = std::size_t{1} << q2;
    const std::size_t both = m1 | m2;
    Rdm2 r = Rdm2::Zero();
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & both) continue;
        const cplx v[4] = {amps[base], amps[base | m1], amps[base | m2], amps[base | both]};
        for (int a = 0; a < 4; ++a) {
            for (int b = a; b < 4; ++b) r(a, b) += v[a] * std::conj(v[b]);
        }
    }
    for (int a = 0; a < 4; ++a) {
        r(a, a) = r(a, a).real();
        for (int b = a + 1; b < 4; ++b) r(b, a) = std::conj(r(a, b));
    }
    return r;
}

Rdm1 rdm1(const StateVector &state, int q) { return rdm1(state.amplitudes(), q); }

Rdm2 rdm2(const StateVector &state, int q1, int q2) {
    return rdm2(state.amplitudes(), q1, q2);
}

std::vector<Rdm1> all_rdm1(std::span<const cplx> amps) {
    const int n = qubits_of(amps);
    std::vector<Rdm1> out;
    out.reserve(n);
    for (int q = 0; q < n; ++q) out.push_back(rdm1(amps, q));
    return out;
}

Rdm1 trace_out_second(const Rdm2 &rho) {
    Rdm1 r;
    r(0, 0) = rho(0, 0) + rho(2, 2);
    r(0, 1) = rho(0, 1) + rho(2, 3);
    r(1, 0) = rho(1, 0) + rho(3, 2);
    r(1, 1) = rho(1, 1) + rho(3, 3);
    return r;
}

Rdm1 trace_out_first(const Rdm2 &rho) {
    Rdm1 r;
    r(0, 0) = rho(0, 0) + rho(1, 1);
    r(0, 1) = rho(0, 2) + rho(1, 3);
    r(1, 0) = rho(2, 0) + rho(3, 1);
    r(1, 1) = rho(2, 2) + rho(3, 3);
    return r;
}

double pauli_expectation(const Rdm1 &rho, Pauli axis) {
    switch (axis) {
    case Pauli::X: return 2.0 * rho(1, 0).real();
    case Pauli::Y: return 2.0 * rho(1, 0).imag();
    case Pauli::Z: return (rho(0, 0) - rho(1, 1)).real();
    }
    return 0.0;
}

double pauli_expectation(const StateVector &state, Pauli axis, int q) {
    return pauli_expectation(rdm1(state, q), axis);
}

Rdm1 rdm1_from_bloch(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1.0) {
        x /= r;
        y /= r;
        z /= r;
    }
    Rdm1 rho;
    rho << 0.5 * (1.0 + z), cplx(0.5 * x, -0.5 * y), cplx(0.5 * x, 0.5 * y), 0.5 * (1.0 - z);
    return rho;
}

} // namespace qload
