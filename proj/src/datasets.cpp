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

#include "qload/datasets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "qload/rdm.hpp"

namespace qload {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Fixes the overall sign so the largest-magnitude amplitude is positive.
StateVector real_to_state(std::span<const double> x) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (std::abs(x[i]) > std::abs(x[arg]) + 1e-12) arg = i;
    }
    const double sign = x[arg] < 0.0 ? -1.0 : 1.0;
    std::vector<cplx> amps(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) amps[i] = sign * x[i];
    return StateVector::normalized(std::move(amps));
}

void check_spec(const SpinHamiltonianSpec &spec) {
    if (spec.rows < 1 || spec.cols < 1) throw InvalidArgument("lattice dimensions must be >= 1");
    if (spec.num_sites() > 20) throw InvalidArgument("at most 20 sites are supported");
}

} // namespace

SpinHamiltonianSpec SpinHamiltonianSpec::tfim_chain(int n, double J, double g) {
    SpinHamiltonianSpec s;
    s.model = SpinModel::TFIM;
    s.rows = 1;
    s.cols = n;
    s.J = J;
    s.g = g;
    return s;
}

SpinHamiltonianSpec SpinHamiltonianSpec::xxz_grid(int rows, int cols, double Jxy, double Jz) {
    SpinHamiltonianSpec s;
    s.model = SpinModel::XXZ;
    s.rows = rows;
    s.cols = cols;
    s.Jxy = Jxy;
    s.Jz = Jz;
    s.field_eps = 0.0;
    return s;
}

std::vector<std::pair<int, int>> SpinHamiltonianSpec::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int q = r * cols + c;
            if (c + 1 < cols) e.emplace_back(q, q + 1);
            if (r + 1 < rows) e.emplace_back(q, q + cols);
        }
    }
    return e;
}

void hamiltonian_apply(const SpinHamiltonianSpec &spec, std::span<const double> x,
                       std::span<double> y) {
    check_spec(spec);
    const int n = spec.num_sites();
    const std::size_t dim = dim_of(n);
    if (x.size() != dim || y.size() != dim) throw InvalidArgument("vector size mismatch");
    const auto edges = spec.edges();
    std::vector<std::size_t> masks;
    for (const auto &[a, b] : edges) masks.push_back((std::size_t{1} << a) | (std::size_t{1} << b));

    if (spec.model == SpinModel::TFIM) {
        const double field = spec.g + spec.field_eps;
        for (std::size_t i = 0; i < dim; ++i) {
            double diag = 0.0;
            for (std::size_t m : masks) diag += std::popcount(i & m) == 1 ? 1.0 : -1.0;
            double acc = spec.J * diag * x[i];
            for (int q = 0; q < n; ++q) acc -= field * x[i ^ (std::size_t{1} << q)];
            y[i] = acc;
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) {
            double diag = 0.0;
            double acc = 0.0;
            for (std::size_t m : masks) {
                if (std::popcount(i & m) == 1) {
                    diag -= 1.0;
                    acc += 2.0 * spec.Jxy * x[i ^ m];
                } else {
                    diag += 1.0;
                }
            }
            y[i] = acc + spec.Jz * diag * x[i];
        }
    }
}

Eigen::MatrixXd hamiltonian_dense(const SpinHamiltonianSpec &spec) {
    check_spec(spec);
    if (spec.num_sites() > 12) throw InvalidArgument("dense Hamiltonian limited to 12 sites");
    const std::size_t dim = dim_of(spec.num_sites());
    Eigen::MatrixXd h(dim, dim);
    std::vector<double> e(dim, 0.0), col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        e[j] = 1.0;
        hamiltonian_apply(spec, e, col);
        for (std::size_t i = 0; i < dim; ++i) h(i, j) = col[i];
        e[j] = 0.0;
    }
    return h;
}

GroundState ground_state(const SpinHamiltonianSpec &spec, double tol, int max_iter) {
    check_spec(spec);
    const std::size_t dim = dim_of(spec.num_sites());
    std::vector<double> v(dim);
    if (spec.model == SpinModel::TFIM) {
        std::fill(v.begin(), v.end(), 1.0);
    } else {
        Rng rng = substream(spec.seed, "lanczos-start");
        std::normal_distribution<double> g;
        for (double &a : v) a = g(rng);
    }
    {
        const double n = norm2(v);
        for (double &a : v) a /= n;
    }
    const std::size_t budget_vectors = std::max<std::size_t>(10, (std::size_t{1} << 25) / dim);
    const int m = static_cast<int>(std::min<std::size_t>({60, dim, budget_vectors}));

    GroundState out;
    std::vector<double> w(dim), hx(dim);
    std::vector<std::vector<double>> basis;
    int total = 0;
    while (true) {
        basis.assign(1, v);
        std::vector<double> alpha, beta;
        for (int j = 0; j < m; ++j) {
            hamiltonian_apply(spec, basis[j], w);
            ++total;
            alpha.push_back(dot(basis[j], w));
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &b : basis) axpy(-dot(b, w), b, w);
            }
            const double bn = norm2(w);
            if (bn < 1e-12 || j + 1 == m || total >= max_iter) break;
            beta.push_back(bn);
            for (double &a : w) a /= bn;
            basis.push_back(w);
        }
        const int k = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        std::fill(v.begin(), v.end(), 0.0);
        for (int i = 0; i < k; ++i) axpy(es.eigenvectors()(i, 0), basis[i], v);
        const double vn = norm2(v);
        for (double &a : v) a /= vn;
        hamiltonian_apply(spec, v, hx);
        ++total;
        const double energy = dot(v, hx);
        axpy(-energy, v, hx);
        const double res = norm2(hx);
        if (res < tol) {
            out.state = real_to_state(v);
            out.energy = energy;
            out.residual = res;
            out.iterations = total;
            return out;
        }
        if (total >= max_iter) {
            throw ConvergenceError("Lanczos residual " + std::to_string(res) + " after " +
                                   std::to_string(total) + " iterations");
        }
    }
}

GroundState ground_state_dense(const SpinHamiltonianSpec &spec) {
    const Eigen::MatrixXd h = hamiltonian_dense(spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd v = es.eigenvectors().col(0);
    GroundState out;
    out.state = real_to_state(std::span<const double>(v.data(), v.size()));
    out.energy = es.eigenvalues()(0);
    out.residual = (h * v - out.energy * v).norm();
    return out;
}

StateVector ghz(int num_qubits) {
    std::vector<cplx> amps(dim_of(num_qubits), 0.0);
    amps.front() = 1.0 / std::sqrt(2.0);
    amps.back() = 1.0 / std::sqrt(2.0);
    return StateVector::from_amplitudes(std::move(amps));
}

Circuit random_circuit(int num_qubits, int w, Rng &rng) {
    if (num_qubits < 2) throw InvalidArgument("random circuits need at least two qubits");
    if (w < 0) throw InvalidArgument("negative gate count");
    struct Item {
        int kind;  // 0 = CZ, 1 = X, 2 = Y, 3 = Z rotation
        int p, q;
        double theta;
    };
    std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
    std::uniform_int_distribution<int> other(0, num_qubits - 2);
    std::uniform_int_distribution<int> axis(1, 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<Item> items;
    for (int i = 0; i < w; ++i) {
        const int p = qubit(rng);
        int q = other(rng);
        if (q >= p) ++q;
        items.push_back({0, p, q, 0.0});
    }
    for (int i = 0; i < 3 * w; ++i) {
        const int a = axis(rng);
        const int p = qubit(rng);
        items.push_back({a, p, -1, angle(rng)});
    }
    std::shuffle(items.begin(), items.end(), rng);
    Circuit c(num_qubits);
    for (const Item &it : items) {
        switch (it.kind) {
        case 0: c.add(GateOp::cz(it.p, it.q)); break;
        case 1:
            c.add(GateOp::h(it.p));
            c.add(GateOp::rz(it.p, it.theta));
            c.add(GateOp::h(it.p));
            break;
        case 2: c.add(GateOp::ry(it.p, it.theta)); break;
        default: c.add(GateOp::rz(it.p, it.theta)); break;
        }
    }
    return c;
}

StateVector random_circuit_state(int num_qubits, int w, std::uint64_t seed) {
    Rng rng = substream(seed, "dataset");
    return prepare(random_circuit(num_qubits, w, rng), {});
}

std::vector<std::pair<int, int>> grid_tiling(int rows, int cols, int t) {
    std::vector<std::pair<int, int>> e;
    const int parity = t % 2;
    if (t % 4 < 2) {
        for (int r = 0; r < rows; ++r) {
            for (int c = parity; c + 1 < cols; c += 2) e.emplace_back(r * cols + c, r * cols + c + 1);
        }
    } else {
        for (int r = parity; r + 1 < rows; r += 2) {
            for (int c = 0; c < cols; ++c) e.emplace_back(r * cols + c, (r + 1) * cols + c);
        }
    }
    return e;
}

Circuit random_circuit_2d(int rows, int cols, int depth, Rng &rng) {
    if (rows < 1 || cols < 1 || rows * cols < 2) throw InvalidArgument("grid needs >= 2 sites");
    const int n = rows * cols;
    std::uniform_int_distribution<int> axis(1, 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    Circuit c(n);
    for (int layer = 0; layer < depth; ++layer) {
        for (int q = 0; q < n; ++q) {
            const int a = axis(rng);
            const double th = angle(rng);
            if (a == 1) {
                c.add(GateOp::h(q));
                c.add(GateOp::rz(q, th));
                c.add(GateOp::h(q));
            } else if (a == 2) {
                c.add(GateOp::ry(q, th));
            } else {
                c.add(GateOp::rz(q, th));
            }
        }
        // Degenerate grids fall back to whichever tiling has edges.
        auto edges = grid_tiling(rows, cols, layer % 4);
        if (edges.empty()) edges = grid_tiling(rows, cols, rows == 1 ? 0 : 2);
        for (const auto &[a, b] : edges) c.add(GateOp::cz(a, b));
    }
    return c;
}

StateVector random_circuit_state_2d(int rows, int cols, int depth, std::uint64_t seed) {
    Rng rng = substream(seed, "dataset");
    return prepare(random_circuit_2d(rows, cols, depth, rng), {});
}

void IqpSpec::validate() const {
    if (num_qubits < 1) throw InvalidArgument("IQP spec needs at least one qubit");
    if (edges.size() != angles.size()) throw InvalidArgument("one angle per IQP edge required");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
            throw InvalidArgument("IQP edge out of range");
        }
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) throw InvalidArgument("duplicate IQP edge");
    }
}

int IqpSpec::max_degree() const {
    std::vector<int> deg(num_qubits, 0);
    for (const auto &[a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Circuit iqp_circuit(const IqpSpec &spec) {
    spec.validate();
    Circuit c(spec.num_qubits);
    for (int q = 0; q < spec.num_qubits; ++q) c.add(GateOp::h(q));
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        c.add(GateOp::rzz(spec.edges[e].first, spec.edges[e].second, spec.angles[e]));
    }
    for (int q = 0; q < spec.num_qubits; ++q) c.add(GateOp::h(q));
    return c;
}

StateVector iqp_state(const IqpSpec &spec) { return prepare(iqp_circuit(spec), {}); }

StateVector amplitude_encode(std::span<const cplx> v) {
    if (v.empty()) throw InvalidArgument("cannot encode an empty vector");
    const std::size_t dim = std::max<std::size_t>(2, std::bit_ceil(v.size()));
    std::vector<cplx> amps(dim, 0.0);
    std::copy(v.begin(), v.end(), amps.begin());
    return StateVector::normalized(std::move(amps));
}

StateVector amplitude_encode(std::span<const double> v) {
    std::vector<cplx> c(v.begin(), v.end());
    return amplitude_encode(c);
}

StateVector compact_encode(std::span<const double> v) {
    if (v.size() < 4 || !std::has_single_bit(v.size())) {
        throw InvalidArgument("compact encoding needs a length 2^(N+1) >= 4");
    }
    const std::size_t half = v.size() / 2;
    std::vector<cplx> amps(half);
    for (std::size_t j = 0; j < half; ++j) amps[j] = cplx(v[j], v[j + half]);
    return StateVector::normalized(std::move(amps));
}

std::vector<double> pad_flatten_normalize(std::span<const double> image, int rows, int cols,
                                          int pad_rows, int pad_cols) {
    if (rows < 1 || cols < 1 || pad_rows < rows || pad_cols < cols ||
        image.size() != static_cast<std::size_t>(rows) * cols) {
        throw InvalidArgument("inconsistent image and padding sizes");
    }
    std::vector<double> out(static_cast<std::size_t>(pad_rows) * pad_cols, 0.0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) out[r * pad_cols + c] = image[r * cols + c];
    }
    const double n = norm2(out);
    if (!(n > 0.0)) throw InvalidArgument("cannot normalize an all-zero image");
    for (double &a : out) a /= n;
    return out;
}

std::vector<double> read_f64_vector(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    const std::string bytes = buf.str();
    if (bytes.size() % 8 != 0) throw FormatError("raw f64 file size is not a multiple of 8");
    std::vector<double> out(bytes.size() / 8);
    std::memcpy(out.data(), bytes.data(), bytes.size());
    return out;
}

std::vector<double> read_csv_vector(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path.string());
    std::vector<double> out;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            const auto b = field.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            const auto e = field.find_last_not_of(" \t\r");
            const std::string tok = field.substr(b, e - b + 1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec == std::errc() && ptr == tok.data() + tok.size()) out.push_back(v);
        }
    }
    return out;
}

StateVector random_mps_state(int num_qubits, int chi, Rng &rng) {
    if (num_qubits < 1 || chi < 1) throw InvalidArgument("bad MPS dimensions");
    std::normal_distribution<double> g;
    // psi(index over the first k qubits, right bond)
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Ones(1, 1);
    for (int k = 0; k < num_qubits; ++k) {
        const int left = static_cast<int>(psi.cols());
        const int right = k + 1 == num_qubits ? 1 : chi;
        Eigen::MatrixXcd next(psi.rows() * 2, right);
        for (int s = 0; s < 2; ++s) {
            Eigen::MatrixXcd a(left, right);
            for (int i = 0; i < left; ++i) {
                for (int j = 0; j < right; ++j) a(i, j) = cplx(g(rng), g(rng));
            }
            next.middleRows(s * psi.rows(), psi.rows()) = psi * a;
        }
        psi = std::move(next);
    }
    std::vector<cplx> amps(psi.data(), psi.data() + psi.size());
    return StateVector::normalized(std::move(amps));
}

double magnetization(const StateVector &state) {
    double s = 0.0;
    for (int q = 0; q < state.num_qubits(); ++q) s += pauli_expectation(state, Pauli::X, q);
    return s / state.num_qubits();
}

Eigen::MatrixXd kernel_matrix(const std::vector<StateVector> &states) {
    const std::size_t m = states.size();
    Eigen::MatrixXd k(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        k(i, i) = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) k(i, j) = k(j, i) = fidelity(states[i], states[j]);
    }
    return k;
}

} // namespace qload
