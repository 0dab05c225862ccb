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

#include "qload/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace qload {

namespace {

static_assert(std::endian::native == std::endian::little, "QSV1 I/O assumes a little-endian host");

constexpr char kMagic[4] = {'Q', 'S', 'V', '1'};
constexpr unsigned char kVersion = 1;
constexpr std::size_t kHeader = 9;

} // namespace

std::string encode_state(const StateVector &state) {
    std::string out(kHeader + 16 * state.dim(), '\0');
    std::memcpy(out.data(), kMagic, 4);
    out[4] = static_cast<char>(kVersion);
    const std::uint32_t n = static_cast<std::uint32_t>(state.num_qubits());
    std::memcpy(out.data() + 5, &n, 4);
    char *p = out.data() + kHeader;
    for (const cplx &a : state.amplitudes()) {
        const double re = a.real(), im = a.imag();
        std::memcpy(p, &re, 8);
        std::memcpy(p + 8, &im, 8);
        p += 16;
    }
    return out;
}

StateVector decode_state(const std::string &bytes) {
    if (bytes.size() < kHeader || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw FormatError("bad magic: not a QSV1 state file");
    }
    if (static_cast<unsigned char>(bytes[4]) != kVersion) {
        throw FormatError("unsupported QSV1 version " +
                          std::to_string(static_cast<unsigned char>(bytes[4])));
    }
    std::uint32_t n = 0;
    std::memcpy(&n, bytes.data() + 5, 4);
    if (n < 1 || n > 30) throw FormatError("unsupported qubit count " + std::to_string(n));
    const std::size_t want = kHeader + 16 * dim_of(static_cast<int>(n));
    if (bytes.size() < want) {
        throw FormatError("truncated payload: expected " + std::to_string(want) + " bytes, got " +
                          std::to_string(bytes.size()));
    }
    if (bytes.size() > want) throw FormatError("trailing bytes after QSV1 payload");
    std::vector<cplx> amps(dim_of(static_cast<int>(n)));
    const char *p = bytes.data() + kHeader;
    double norm2 = 0.0;
    for (cplx &a : amps) {
        double re = 0.0, im = 0.0;
        std::memcpy(&re, p, 8);
        std::memcpy(&im, p + 8, 8);
        a = cplx(re, im);
        norm2 += re * re + im * im;
        p += 16;
    }
    const double norm = std::sqrt(norm2);
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "payload is not normalized (norm " << norm << ")";
        throw FormatError(msg.str());
    }
    return StateVector::from_amplitudes(std::move(amps));
}

void write_state(const std::filesystem::path &path, const StateVector &state) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    const std::string bytes = encode_state(state);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error("write to " + path.string() + " failed");
}

StateVector read_state(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return decode_state(buf.str());
}

nlohmann::json circuit_to_json(const Circuit &circuit) {
    using nlohmann::json;
    json ops = json::array();
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const GateOp &g = circuit.op(i);
        json o;
        o["kind"] = std::string(to_string(g.kind));
        json qs = json::array();
        for (int k = 0; k < arity(g.kind); ++k) qs.push_back(g.qubits[k]);
        o["qubits"] = qs;
        const auto &b = circuit.binding(i);
        o["param"] = is_rotation(g.kind) && !b ? json(g.param) : json(nullptr);
        o["slot"] = b ? json(b->slot) : json(nullptr);
        if (b && b->scale != 1.0) o["scale"] = b->scale;
        if (g.matrix) {
            json m = json::array();
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    m.push_back(json::array({(*g.matrix)(r, c).real(), (*g.matrix)(r, c).imag()}));
                }
            }
            o["matrix"] = m;
        } else {
            o["matrix"] = nullptr;
        }
        ops.push_back(o);
    }
    return json{{"num_qubits", circuit.num_qubits()}, {"ops", ops}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(j.at("num_qubits").get<int>());
        for (const auto &o : j.at("ops")) {
            GateOp g;
            g.kind = gate_kind_from_string(o.at("kind").get<std::string>());
            const auto &qs = o.at("qubits");
            if (static_cast<int>(qs.size()) != arity(g.kind)) {
                throw FormatError("gate " + std::string(to_string(g.kind)) +
                                  " has the wrong number of qubits");
            }
            for (std::size_t k = 0; k < qs.size(); ++k) g.qubits[k] = qs[k].get<int>();
            if (o.contains("param") && !o["param"].is_null()) g.param = o["param"].get<double>();
            if (o.contains("matrix") && !o["matrix"].is_null()) {
                const auto &m = o["matrix"];
                if (m.size() != 16) throw FormatError("U2Q matrix needs 16 entries");
                Mat4 u;
                for (int k = 0; k < 16; ++k) {
                    u(k / 4, k % 4) = cplx(m[k].at(0).get<double>(), m[k].at(1).get<double>());
                }
                g.matrix = u;
            }
            if (o.contains("slot") && !o["slot"].is_null()) {
                const double scale = o.value("scale", 1.0);
                c.add_bound(g, o["slot"].get<int>(), scale);
            } else {
                c.add(g);
            }
        }
        c.check_slots();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("malformed circuit JSON: ") + e.what());
    }
}

} // namespace qload
