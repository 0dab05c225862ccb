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

#include "qload/gate.hpp"

#include <cmath>

namespace qload {

std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::RZZ: return "RZZ";
    case GateKind::CZ: return "CZ";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::U2Q: return "U2Q";
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    for (GateKind k : {GateKind::RY, GateKind::RZ, GateKind::RZZ, GateKind::CZ, GateKind::H,
                       GateKind::X, GateKind::U2Q}) {
        if (to_string(k) == name) return k;
    }
    throw InvalidArgument("unknown gate kind '" + std::string(name) + "'");
}

int arity(GateKind kind) {
    switch (kind) {
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::H:
    case GateKind::X: return 1;
    default: return 2;
    }
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::RZZ;
}

double unitarity_defect(const Mat4 &u) {
    return (u.adjoint() * u - Mat4::Identity()).cwiseAbs().maxCoeff();
}

void validate_gate(const GateOp &gate, int num_qubits) {
    const int k = arity(gate.kind);
    for (int i = 0; i < k; ++i) {
        const int q = gate.qubits[i];
        if (q < 0 || q >= num_qubits) {
            throw InvalidArgument("gate " + std::string(to_string(gate.kind)) + ": qubit " +
                                  std::to_string(q) + " out of range for " +
                                  std::to_string(num_qubits) + " qubits");
        }
    }
    if (k == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw InvalidArgument("two-qubit gate on a repeated qubit");
    }
    if (!std::isfinite(gate.param)) {
        throw InvalidArgument("gate angle is not finite");
    }
    if (gate.kind == GateKind::U2Q) {
        if (!gate.matrix) throw InvalidArgument("U2Q gate without a matrix");
        const double defect = unitarity_defect(*gate.matrix);
        if (!(defect <= 1e-10)) {
            throw InvalidArgument("U2Q matrix is not unitary (defect " + std::to_string(defect) +
                                  ")");
        }
    }
}

Mat2 ry_matrix(double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

Mat2 rz_matrix(double theta) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::polar(1.0, -0.5 * theta);
    m(1, 1) = std::polar(1.0, 0.5 * theta);
    return m;
}

Eigen::MatrixXcd local_matrix(const GateOp &gate) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (gate.kind) {
    case GateKind::RY: return ry_matrix(gate.param);
    case GateKind::RZ: return rz_matrix(gate.param);
    case GateKind::H: {
        Mat2 m;
        m << r, r, r, -r;
        return m;
    }
    case GateKind::X: {
        Mat2 m;
        m << 0, 1, 1, 0;
        return m;
    }
    case GateKind::RZZ: {
        Mat4 m = Mat4::Zero();
        const cplx same = std::polar(1.0, -0.5 * gate.param);
        m(0, 0) = same;
        m(1, 1) = std::conj(same);
        m(2, 2) = std::conj(same);
        m(3, 3) = same;
        return m;
    }
    case GateKind::CZ: {
        Mat4 m = Mat4::Identity();
        m(3, 3) = -1.0;
        return m;
    }
    case GateKind::U2Q: return *gate.matrix;
    }
    return {};
}

} // namespace qload
