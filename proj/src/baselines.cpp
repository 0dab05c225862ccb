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

#include "qload/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "qload/gradients.hpp"
#include "qload/io.hpp"
#include "qload/kernels.hpp"
#include "qload/optimizers.hpp"
#include "qload/random.hpp"

namespace qload {

namespace {

struct ThinSvd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd s;
    Eigen::MatrixXcd v;
};

ThinSvd thin_svd(const Eigen::MatrixXcd &m, bool real) {
    ThinSvd out;
    if (real) {
        const Eigen::MatrixXd mr = m.real();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(mr, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.u = svd.matrixU().cast<cplx>();
        out.s = svd.singularValues();
        out.v = svd.matrixV().cast<cplx>();
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.u = svd.matrixU();
        out.s = svd.singularValues();
        out.v = svd.matrixV();
    }
    return out;
}

// (I (x) u) on the local index bit(q0) + 2 bit(q1): u acts on the low bit.
Mat4 low_bit_lift(const Mat2 &u) {
    Mat4 out = Mat4::Zero();
    for (int hi = 0; hi < 2; ++hi) out.block<2, 2>(2 * hi, 2 * hi) = u;
    return out;
}

Mat2 complete_unitary2(const Eigen::MatrixXcd &given) {
    Mat2 u = Mat2::Zero();
    u.col(0) = given.col(0);
    if (given.cols() > 1) {
        u.col(1) = given.col(1);
    } else {
        // (a, b) -> (-conj(b), conj(a)) is orthonormal to (a, b).
        u(0, 1) = -std::conj(u(1, 0));
        u(1, 1) = std::conj(u(0, 0));
    }
    return u;
}

using Units = std::vector<std::pair<std::pair<int, int>, Mat4>>;

Circuit units_circuit(int num_qubits, const Units &units) {
    Circuit c(num_qubits);
    for (const auto &[pq, u] : units) c.add(GateOp::u2q(pq.first, pq.second, u));
    return c;
}

} // namespace

GateCountMethod gate_count_method_from_string(std::string_view name) {
    if (name == "aqce-complex" || name == "aqce_c") return GateCountMethod::AqceComplex;
    if (name == "aqce-real" || name == "aqce_r") return GateCountMethod::AqceReal;
    if (name == "mps-complex" || name == "mps_c") return GateCountMethod::MpsComplex;
    if (name == "mps-real" || name == "mps_r") return GateCountMethod::MpsReal;
    if (name == "hec") return GateCountMethod::Hec;
    if (name == "aqer") return GateCountMethod::Aqer;
    throw InvalidArgument("unknown gate-count method '" + std::string(name) + "'");
}

int gate_count_table(GateCountMethod method, int num_qubits, int k) {
    if (k < 1) throw InvalidArgument("gate_count_table needs k >= 1");
    switch (method) {
    case GateCountMethod::AqceComplex: return 15 * k;
    case GateCountMethod::AqceReal: return 10 * k;
    case GateCountMethod::MpsComplex: return 3 * (num_qubits - 1) * k;
    case GateCountMethod::MpsReal: return 2 * (num_qubits - 1) * k;
    case GateCountMethod::Hec: return (num_qubits * k + 1) / 2;
    case GateCountMethod::Aqer: return k;
    }
    throw InvalidArgument("unknown gate-count method");
}

bool is_real_state(const StateVector &state, double tol) {
    return std::all_of(state.amplitudes().begin(), state.amplitudes().end(),
                       [tol](const cplx &a) { return std::abs(a.imag()) <= tol; });
}

Mat4 complete_unitary(const Eigen::Matrix<cplx, 4, Eigen::Dynamic> &given,
                      const std::vector<int> &cols) {
    if (static_cast<int>(cols.size()) != given.cols()) {
        throw InvalidArgument("one target column index per given column required");
    }
    Mat4 u = Mat4::Zero();
    std::vector<bool> filled(4, false);
    std::vector<Eigen::Vector4cd> basis;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        u.col(cols[i]) = given.col(i);
        filled[cols[i]] = true;
        basis.emplace_back(given.col(i));
    }
    for (int slot = 0; slot < 4; ++slot) {
        if (filled[slot]) continue;
        Eigen::Vector4cd best = Eigen::Vector4cd::Zero();
        double best_norm = -1.0;
        for (int e = 0; e < 4; ++e) {
            Eigen::Vector4cd r = Eigen::Vector4cd::Unit(e);
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &b : basis) r -= b * b.dot(r);
            }
            const double n = r.norm();
            if (n > best_norm + 1e-12) {
                best_norm = n;
                best = r;
            }
        }
        best /= best_norm;
        u.col(slot) = best;
        basis.push_back(best);
        filled[slot] = true;
    }
    return u;
}

Circuit Mps2Layer::circuit(int num_qubits) const { return units_circuit(num_qubits, unitaries); }

MpsExtraction mps_layer_extract(const StateVector &state) {
    const int n = state.num_qubits();
    if (n < 2) throw InvalidArgument("MPS extraction needs at least two qubits");
    const bool real = is_real_state(state);
    const auto amps = state.amplitudes();

    // Left-canonical isometries U_k, rows a + chi_left * s, and the remainder.
    std::vector<Eigen::MatrixXcd> iso;
    std::vector<int> chi_left(n, 1);
    Eigen::MatrixXcd rem = Eigen::Map<const Eigen::MatrixXcd>(amps.data(), 1, amps.size());
    for (int k = 0; k + 1 < n; ++k) {
        const Eigen::Index rows = rem.rows() * 2;
        const Eigen::Index cols = rem.size() / rows;
        const Eigen::MatrixXcd m = Eigen::Map<const Eigen::MatrixXcd>(rem.data(), rows, cols);
        const ThinSvd svd = thin_svd(m, real);
        const Eigen::Index chi = std::min<Eigen::Index>({2, rows, cols});
        iso.push_back(svd.u.leftCols(chi));
        rem = svd.s.head(chi).cast<cplx>().asDiagonal() * svd.v.leftCols(chi).adjoint();
        chi_left[k + 1] = static_cast<int>(chi);
    }

    Mps2Layer layer;
    // Last site: column 0 of the gate on (N-2, N-1) is the normalized remainder.
    {
        Eigen::Matrix<cplx, 4, Eigen::Dynamic> v = Eigen::Matrix<cplx, 4, 1>::Zero();
        const int cl = chi_left[n - 1];
        for (int a = 0; a < cl; ++a) {
            for (int s = 0; s < 2; ++s) v(a + 2 * s, 0) = rem(a, s);
        }
        v /= v.norm();
        layer.unitaries.push_back({{n - 2, n - 1}, complete_unitary(v, {0})});
    }
    // Middle sites: the bond value b on qubit k maps through column 2b.
    for (int k = n - 2; k >= 1; --k) {
        const Eigen::MatrixXcd &uk = iso[k];
        const int cl = chi_left[k];
        const int cr = static_cast<int>(uk.cols());
        Eigen::Matrix<cplx, 4, Eigen::Dynamic> p = Eigen::Matrix<cplx, 4, Eigen::Dynamic>::Zero(4, cr);
        std::vector<int> cols;
        for (int b = 0; b < cr; ++b) {
            for (int a = 0; a < cl; ++a) {
                for (int s = 0; s < 2; ++s) p(a + 2 * s, b) = uk(a + cl * s, b);
            }
            cols.push_back(2 * b);
        }
        layer.unitaries.push_back({{k - 1, k}, complete_unitary(p, cols)});
    }
    // First site: a single-qubit isometry folded into the gate on (0, 1).
    const Mat2 u0 = complete_unitary2(iso[0]);
    auto &last = layer.unitaries.back();
    last.second = low_bit_lift(u0) * last.second;

    MpsExtraction out;
    out.layer = std::move(layer);
    const Circuit c = out.layer.circuit(n);
    out.residual = apply_circuit(state, c, {}, /*adjoint=*/true);
    return out;
}

LoaderResult mps_loader(const StateVector &target, int layers) {
    if (layers < 1) throw InvalidArgument("MPS loader needs at least one layer");
    const int n = target.num_qubits();
    std::vector<Circuit> stack;
    StateVector cur = target;
    for (int l = 0; l < layers; ++l) {
        MpsExtraction ex = mps_layer_extract(cur);
        stack.push_back(ex.layer.circuit(n));
        cur = std::move(ex.residual);
    }
    LoaderResult r;
    r.circuit = Circuit(n);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) r.circuit.append(*it);
    r.infidelity = 1.0 - fidelity(target, prepare(r.circuit, {}));
    r.G = gate_count_table(is_real_state(target) ? GateCountMethod::MpsReal
                                                 : GateCountMethod::MpsComplex,
                           n, layers);
    return r;
}

std::vector<std::pair<int, int>> hec_pairs(int num_qubits, int layer) {
    std::vector<std::pair<int, int>> out;
    const int off = layer % 2;
    for (int n = 0; 2 * n + off < num_qubits; ++n) {
        const int a = 2 * n + off;
        const int b = (2 * n + off + 1) % num_qubits;
        if (a != b) out.emplace_back(a, b);
    }
    return out;
}

Circuit hec_build(int num_qubits, int layers) {
    if (num_qubits < 2) throw InvalidArgument("HEC needs at least two qubits");
    if (layers < 1) throw InvalidArgument("HEC needs at least one layer");
    Circuit c(num_qubits);
    int slot = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < num_qubits; ++q) c.add_bound(GateOp::ry(q, 0.0), slot++);
        for (int q = 0; q < num_qubits; ++q) c.add_bound(GateOp::rz(q, 0.0), slot++);
        for (const auto &[ctrl, tgt] : hec_pairs(num_qubits, l)) {
            c.add(GateOp::h(tgt));
            c.add(GateOp::cz(ctrl, tgt));
            c.add(GateOp::h(tgt));
        }
    }
    return c;
}

HecResult hec_train(const StateVector &target, const Circuit &circuit, std::uint64_t seed,
                    int iters, double lr) {
    Rng rng = substream(seed, "hec-init");
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    std::vector<double> x0(circuit.num_params());
    for (double &x : x0) x = u(rng);
    InfidelityGradient eng(target, circuit);
    AdamOptions opts;
    opts.lr = lr;
    opts.iters = iters;
    const OptResult r = adam(
        [&](std::span<const double> x, std::span<double> g) { return eng.adjoint(x, g); },
        std::move(x0), opts);
    HecResult out;
    out.theta = r.best_params;
    out.infidelity = infidelity_loss(target, circuit, out.theta);
    return out;
}

AqceResult aqce_run(const StateVector &target, int total_units, const AqceOptions &opts) {
    if (total_units < 1) throw InvalidArgument("AQCE needs at least one unit");
    if (opts.units_per_expansion < 1 || opts.sweeps_per_expansion < 0) {
        throw InvalidArgument("bad AQCE expansion schedule");
    }
    const int n = target.num_qubits();
    if (n < 2) throw InvalidArgument("AQCE needs at least two qubits");
    const bool real = is_real_state(target);
    const std::size_t dim = target.dim();
    const auto tgt = target.amplitudes();

    AqceResult res;
    Units &units = res.state.unitaries;
    std::vector<cplx> left(dim), right(dim);

    auto reset_left = [&] {
        std::fill(left.begin(), left.end(), cplx{0.0, 0.0});
        left[0] = 1.0;
    };
    auto apply_unit = [&](std::vector<cplx> &v, std::size_t m, bool adjoint) {
        const auto &[pq, u] = units[m];
        kernels::apply_2q(v, pq.first, pq.second, adjoint ? Mat4(u.adjoint()) : u);
    };

    // Chooses the best (pair, unitary) for slot m given the boundary states.
    auto update = [&](std::size_t m) {
        double best_tr = -1.0;
        std::pair<int, int> best_pair{0, 1};
        Mat4 best_u = Mat4::Identity();
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::size_t mp = std::size_t{1} << p;
                const std::size_t mq = std::size_t{1} << q;
                Mat4 f = Mat4::Zero();
                for (std::size_t base = 0; base < dim; ++base) {
                    if (base & (mp | mq)) continue;
                    const std::size_t idx[4] = {base, base | mp, base | mq, base | mp | mq};
                    for (int a = 0; a < 4; ++a) {
                        const cplx ra = right[idx[a]];
                        for (int b = 0; b < 4; ++b) f(a, b) += ra * std::conj(left[idx[b]]);
                    }
                }
                Mat4 g;
                double tr = 0.0;
                if (real) {
                    Eigen::JacobiSVD<Eigen::Matrix4d> svd(f.real(),
                                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
                    g = (svd.matrixU() * svd.matrixV().transpose()).cast<cplx>();
                    tr = svd.singularValues().sum();
                } else {
                    Eigen::JacobiSVD<Mat4> svd(f, Eigen::ComputeFullU | Eigen::ComputeFullV);
                    g = svd.matrixU() * svd.matrixV().adjoint();
                    tr = svd.singularValues().sum();
                }
                if (tr > best_tr + 1e-14) {
                    best_tr = tr;
                    best_pair = {p, q};
                    best_u = g;
                }
            }
        }
        units[m] = {best_pair, best_u};
        res.state.fidelity_trace.push_back(best_tr * best_tr);
        if (opts.check_updates) {
            const Circuit c = units_circuit(n, units);
            res.state.checked_trace.push_back(fidelity(target, prepare(c, {})));
        }
    };

    while (static_cast<int>(units.size()) < total_units) {
        const int add = std::min<int>(opts.units_per_expansion,
                                      total_units - static_cast<int>(units.size()));
        for (int i = 0; i < add; ++i) units.push_back({{0, 1}, Mat4::Identity()});
        const std::size_t count = units.size();
        for (int sweep = 0; sweep < opts.sweeps_per_expansion; ++sweep) {
            // Forward: left = G_{m-1}...G_1|0>, right = G_{m+1}^dag...G_M^dag |target>.
            reset_left();
            std::copy(tgt.begin(), tgt.end(), right.begin());
            for (std::size_t m = count; m-- > 1;) apply_unit(right, m, true);
            for (std::size_t m = 0; m < count; ++m) {
                update(m);
                apply_unit(left, m, false);
                if (m + 1 < count) apply_unit(right, m + 1, false);
            }
            // Backward.
            std::copy(tgt.begin(), tgt.end(), right.begin());
            apply_unit(left, count - 1, true);
            for (std::size_t m = count; m-- > 0;) {
                update(m);
                apply_unit(right, m, true);
                if (m > 0) apply_unit(left, m - 1, true);
            }
        }
    }
    res.circuit = units_circuit(n, units);
    res.infidelity = 1.0 - fidelity(target, prepare(res.circuit, {}));
    res.G = (real ? 2 : 3) * static_cast<int>(units.size());
    return res;
}

nlohmann::json loader_to_json(std::string_view method, const LoaderResult &r) {
    return nlohmann::json{{"method", std::string(method)},
                          {"infidelity_final", r.infidelity},
                          {"G", r.G},
                          {"circuit", circuit_to_json(r.circuit)}};
}

} // namespace qload
