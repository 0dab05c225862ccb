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

#include "qload/kernels.hpp"

#include <cmath>

namespace qload::kernels {

namespace {

// Visits every index with bit q cleared, passing (i0, i1 = i0 | bit q).
template <typename F>
inline void for_each_pair(std::size_t dim, int q, F &&f) {
    const std::size_t m = std::size_t{1} << q;
    for (std::size_t hi = 0; hi < dim; hi += 2 * m) {
        for (std::size_t lo = 0; lo < m; ++lo) {
            const std::size_t i0 = hi + lo;
            f(i0, i0 + m);
        }
    }
}

// Visits every index with both bits cleared.
template <typename F>
inline void for_each_quad_base(std::size_t dim, int q0, int q1, F &&f) {
    const int lo_q = q0 < q1 ? q0 : q1;
    const int hi_q = q0 < q1 ? q1 : q0;
    const std::size_t ml = std::size_t{1} << lo_q;
    const std::size_t mh = std::size_t{1} << hi_q;
    for (std::size_t a = 0; a < dim; a += 2 * mh) {
        for (std::size_t b = 0; b < mh; b += 2 * ml) {
            for (std::size_t c = 0; c < ml; ++c) {
                f(a + b + c);
            }
        }
    }
}

inline double parity_sign(std::size_t i, std::size_t m0, std::size_t m1) {
    const bool b0 = (i & m0) != 0;
    const bool b1 = (i & m1) != 0;
    return b0 == b1 ? 1.0 : -1.0;
}

} // namespace

void apply_1q(std::span<cplx> amps, int q, const Mat2 &u) {
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for_each_pair(amps.size(), q, [&](std::size_t i0, std::size_t i1) {
        const cplx a = amps[i0];
        const cplx b = amps[i1];
        amps[i0] = u00 * a + u01 * b;
        amps[i1] = u10 * a + u11 * b;
    });
}

void apply_2q(std::span<cplx> amps, int q0, int q1, const Mat4 &u) {
    const std::size_t m0 = std::size_t{1} << q0;
    const std::size_t m1 = std::size_t{1} << q1;
    for_each_quad_base(amps.size(), q0, q1, [&](std::size_t base) {
        const std::size_t idx[4] = {base, base | m0, base | m1, base | m0 | m1};
        cplx in[4];
        for (int k = 0; k < 4; ++k) in[k] = amps[idx[k]];
        for (int r = 0; r < 4; ++r) {
            amps[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] +
                           u(r, 3) * in[3];
        }
    });
}

void apply_ry(std::span<cplx> amps, int q, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for_each_pair(amps.size(), q, [&](std::size_t i0, std::size_t i1) {
        const cplx a = amps[i0];
        const cplx b = amps[i1];
        amps[i0] = c * a - s * b;
        amps[i1] = s * a + c * b;
    });
}

void apply_rz(std::span<cplx> amps, int q, double theta) {
    const cplx p0 = std::polar(1.0, -0.5 * theta);
    const cplx p1 = std::conj(p0);
    for_each_pair(amps.size(), q, [&](std::size_t i0, std::size_t i1) {
        amps[i0] *= p0;
        amps[i1] *= p1;
    });
}

void apply_rzz(std::span<cplx> amps, int q0, int q1, double theta) {
    const cplx same = std::polar(1.0, -0.5 * theta);
    const cplx diff = std::conj(same);
    const std::size_t m0 = std::size_t{1} << q0;
    const std::size_t m1 = std::size_t{1} << q1;
    for_each_quad_base(amps.size(), q0, q1, [&](std::size_t base) {
        amps[base] *= same;
        amps[base | m0] *= diff;
        amps[base | m1] *= diff;
        amps[base | m0 | m1] *= same;
    });
}

void apply_cz(std::span<cplx> amps, int q0, int q1) {
    const std::size_t m0 = std::size_t{1} << q0;
    const std::size_t m1 = std::size_t{1} << q1;
    for_each_quad_base(amps.size(), q0, q1,
                       [&](std::size_t base) { amps[base | m0 | m1] = -amps[base | m0 | m1]; });
}

void apply_h(std::span<cplx> amps, int q) {
    const double r = 1.0 / std::sqrt(2.0);
    for_each_pair(amps.size(), q, [&](std::size_t i0, std::size_t i1) {
        const cplx a = amps[i0];
        const cplx b = amps[i1];
        amps[i0] = r * (a + b);
        amps[i1] = r * (a - b);
    });
}

void apply_x(std::span<cplx> amps, int q) {
    for_each_pair(amps.size(), q,
                  [&](std::size_t i0, std::size_t i1) { std::swap(amps[i0], amps[i1]); });
}

void apply(std::span<cplx> amps, const GateOp &gate, double angle, bool conjugate) {
    const int q0 = gate.qubits[0];
    const int q1 = gate.qubits[1];
    // RY, CZ, H and X are real; conjugating RZ/RZZ flips the angle.
    const double a = conjugate ? -angle : angle;
    switch (gate.kind) {
    case GateKind::RY: apply_ry(amps, q0, angle); break;
    case GateKind::RZ: apply_rz(amps, q0, a); break;
    case GateKind::RZZ: apply_rzz(amps, q0, q1, a); break;
    case GateKind::CZ: apply_cz(amps, q0, q1); break;
    case GateKind::H: apply_h(amps, q0); break;
    case GateKind::X: apply_x(amps, q0); break;
    case GateKind::U2Q:
        if (conjugate) {
            apply_2q(amps, q0, q1, gate.matrix->conjugate());
        } else {
            apply_2q(amps, q0, q1, *gate.matrix);
        }
        break;
    }
}

void apply_inverse(std::span<cplx> amps, const GateOp &gate, double angle) {
    switch (gate.kind) {
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ: apply(amps, gate, -angle); break;
    case GateKind::CZ:
    case GateKind::H:
    case GateKind::X: apply(amps, gate, 0.0); break;
    case GateKind::U2Q:
        apply_2q(amps, gate.qubits[0], gate.qubits[1], gate.matrix->adjoint());
        break;
    }
}

cplx generator_expectation(std::span<const cplx> bra, std::span<const cplx> ket,
                           GateKind kind, int q0, int q1) {
    cplx acc{0.0, 0.0};
    switch (kind) {
    case GateKind::RZ:
        for_each_pair(ket.size(), q0, [&](std::size_t i0, std::size_t i1) {
            acc += std::conj(bra[i0]) * ket[i0] - std::conj(bra[i1]) * ket[i1];
        });
        break;
    case GateKind::RY: {
        // Y|0> = i|1>, Y|1> = -i|0>
        const cplx i{0.0, 1.0};
        for_each_pair(ket.size(), q0, [&](std::size_t i0, std::size_t i1) {
            acc += std::conj(bra[i0]) * (-i * ket[i1]) + std::conj(bra[i1]) * (i * ket[i0]);
        });
        break;
    }
    case GateKind::RZZ: {
        const std::size_t m0 = std::size_t{1} << q0;
        const std::size_t m1 = std::size_t{1} << q1;
        for (std::size_t k = 0; k < ket.size(); ++k) {
            acc += parity_sign(k, m0, m1) * std::conj(bra[k]) * ket[k];
        }
        break;
    }
    default: throw InvalidArgument("generator_expectation: gate kind has no generator");
    }
    return acc;
}

} // namespace qload::kernels
