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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_config.hpp"
#include "qload/aqer.hpp"
#include "qload/baselines.hpp"
#include "qload/checks.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/io.hpp"
#include "qload/iqp.hpp"
#include "qload/noisy.hpp"
#include "report.hpp"

namespace qload::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Common {
    std::uint64_t seed{0};
    std::string out{"-"};
    bool omit_timing{false};
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--config", "JSON file of option values (command-line flags win)")
        ->check(CLI::ExistingFile);
    sub->parse_complete_callback([sub] {
        const CLI::Option *config = sub->get_option("--config");
        if (config->count() > 0) JsonConfig::apply(*sub, config->as<std::string>());
    });
    sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
    sub->add_option("--out,-o", c.out, "Output path ('-' for stdout)")->capture_default_str();
    sub->add_flag("--omit-timing", c.omit_timing,
                  "Leave timing fields empty so repeated runs are byte-identical");
}

struct DatasetOptions {
    std::string kind{"tfim"};
    std::string input;
    int n{10};
    double J{1.0};
    double g{1.0};
    double jxy{1.0};
    double jz{1.0};
    int w{40};
    int rows{2};
    int cols{3};
    int depth{4};
    bool compact{false};
};

void add_dataset_options(CLI::App *sub, DatasetOptions &d, bool multi_kind = false,
                         std::vector<std::string> *kinds = nullptr) {
    const auto kind_check =
        CLI::IsMember({"tfim", "xxz", "ghz", "srqc", "srqc2d", "file", "amplitude"});
    if (multi_kind) {
        sub->add_option("--dataset", *kinds, "Dataset kinds (tfim, xxz, ghz, srqc, srqc2d, file)")
            ->check(kind_check)
            ->capture_default_str();
    } else {
        sub->add_option("--dataset,--kind", d.kind, "Dataset kind")
            ->check(kind_check)
            ->capture_default_str();
    }
    sub->add_option("--input", d.input, "QSV1 state file (file) or vector file (amplitude)");
    sub->add_option("--n", d.n, "Number of qubits (chain datasets)")->capture_default_str();
    sub->add_option("--J", d.J, "TFIM coupling J")->capture_default_str();
    sub->add_option("--g", d.g, "TFIM transverse field g")->capture_default_str();
    sub->add_option("--jxy", d.jxy, "XXZ in-plane coupling")->capture_default_str();
    sub->add_option("--jz", d.jz, "XXZ axial coupling")->capture_default_str();
    sub->add_option("--w", d.w, "Random-circuit CZ count W")->capture_default_str();
    sub->add_option("--rows", d.rows, "Grid rows (xxz, srqc2d)")->capture_default_str();
    sub->add_option("--cols", d.cols, "Grid columns (xxz, srqc2d)")->capture_default_str();
    sub->add_option("--depth", d.depth, "Layer count (srqc2d)")->capture_default_str();
    sub->add_flag("--compact", d.compact, "Compact (real + imaginary) amplitude encoding");
}

struct Dataset {
    std::string label;
    StateVector state{1};
    std::optional<double> energy;
};

Dataset make_dataset(const DatasetOptions &d, const std::string &kind, std::uint64_t seed) {
    Dataset out;
    if (kind == "tfim") {
        const GroundState gs = ground_state(SpinHamiltonianSpec::tfim_chain(d.n, d.J, d.g));
        out.label = "tfim_n" + std::to_string(d.n) + "_J" + format_number(d.J) + "_g" +
                    format_number(d.g);
        out.state = gs.state;
        out.energy = gs.energy;
    } else if (kind == "xxz") {
        SpinHamiltonianSpec spec = SpinHamiltonianSpec::xxz_grid(d.rows, d.cols, d.jxy, d.jz);
        spec.seed = seed;
        const GroundState gs = ground_state(spec);
        out.label = "xxz_" + std::to_string(d.rows) + "x" + std::to_string(d.cols) + "_jxy" +
                    format_number(d.jxy) + "_jz" + format_number(d.jz);
        out.state = gs.state;
        out.energy = gs.energy;
    } else if (kind == "ghz") {
        out.label = "ghz_n" + std::to_string(d.n);
        out.state = ghz(d.n);
    } else if (kind == "srqc") {
        out.label = "srqc_n" + std::to_string(d.n) + "_w" + std::to_string(d.w) + "_s" +
                    std::to_string(seed);
        out.state = random_circuit_state(d.n, d.w, seed);
    } else if (kind == "srqc2d") {
        out.label = "srqc2d_" + std::to_string(d.rows) + "x" + std::to_string(d.cols) + "_d" +
                    std::to_string(d.depth) + "_s" + std::to_string(seed);
        out.state = random_circuit_state_2d(d.rows, d.cols, d.depth, seed);
    } else if (kind == "file") {
        if (d.input.empty()) throw InvalidArgument("--input is required for file datasets");
        out.label = fs::path(d.input).stem().string();
        out.state = read_state(d.input);
    } else if (kind == "amplitude") {
        if (d.input.empty()) throw InvalidArgument("--input is required for amplitude datasets");
        const fs::path p(d.input);
        const std::vector<double> v =
            p.extension() == ".csv" ? read_csv_vector(p) : read_f64_vector(p);
        out.label = p.stem().string() + (d.compact ? "_compact" : "_amplitude");
        out.state = d.compact ? compact_encode(v) : amplitude_encode(v);
    } else {
        throw InvalidArgument("unknown dataset kind '" + kind + "'");
    }
    return out;
}

std::vector<std::string> argv_vector(int argc, char **argv) {
    return std::vector<std::string>(argv, argv + argc);
}

void finish_json(const Common &c, RunManifest &m, json result) {
    if (c.out != "-") m.add_output(c.out);
    result["manifest_hash"] = m.hash();
    write_text(c.out, result.dump(2) + "\n");
    if (c.out != "-") m.write(manifest_path(c.out), c.omit_timing);
}

void finish_csv(const Common &c, RunManifest &m, const CsvTable &table) {
    if (c.out != "-") m.add_output(c.out);
    write_text(c.out, table.render(m.hash()));
    if (c.out != "-") m.write(manifest_path(c.out), c.omit_timing);
}

// ---------------------------------------------------------------- gen-dataset

struct GenOptions {
    Common common;
    DatasetOptions data;
    std::string out_dir{"data"};
};

void cmd_gen_dataset(const GenOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    const Dataset ds = make_dataset(o.data, o.data.kind, o.common.seed);
    const fs::path file = fs::path(o.out_dir) / (ds.label + ".qsv");
    fs::create_directories(o.out_dir);
    write_state(file, ds.state);
    RunManifest m("gen-dataset", argv, JsonConfig::options_json(app), o.common.seed);
    if (o.data.kind == "file" || o.data.kind == "amplitude") m.add_input(o.data.input);
    m.add_output(file);
    m.extra() = {{"label", ds.label},
                 {"num_qubits", ds.state.num_qubits()},
                 {"S", entanglement_total(ds.state.amplitudes())},
                 {"state_fnv1a64", file_hash(file)}};
    if (ds.energy) m.extra()["energy"] = *ds.energy;
    m.write(manifest_path(file), o.common.omit_timing);
    std::cout << file.string() << "\n";
}

// ------------------------------------------------------------------------ run

struct MethodOptions {
    std::string method{"aqer"};
    int T{20};
    int T3{2000};
    double lr{1e-2};
    double nm_tol{1e-4};
    int nm_max_iter{500};
    long long shots{0};
    int layers{1};
    int units{5};
    int sweeps{200};
    int iters{2000};
};

void add_method_options(CLI::App *sub, MethodOptions &m, bool with_grid) {
    sub->add_option("--method", m.method, "Loader: aqer, mps, aqce or hec")
        ->check(CLI::IsMember({"aqer", "mps", "aqce", "hec"}))
        ->capture_default_str();
    if (!with_grid) {
        sub->add_option("--T", m.T, "AQER reduction blocks T")->capture_default_str();
        sub->add_option("--layers", m.layers, "MPS or HEC layer count")->capture_default_str();
        sub->add_option("--units", m.units, "AQCE two-qubit unit count")->capture_default_str();
        sub->add_option("--shots", m.shots, "Shots per estimate (0 = exact)")
            ->capture_default_str();
    }
    sub->add_option("--T3", m.T3, "Fine-tuning (Adam) iterations")->capture_default_str();
    sub->add_option("--lr", m.lr, "Adam learning rate")->capture_default_str();
    sub->add_option("--nm-tol", m.nm_tol, "Nelder-Mead tolerance")->capture_default_str();
    sub->add_option("--nm-max-iter", m.nm_max_iter, "Nelder-Mead iteration cap")
        ->capture_default_str();
    sub->add_option("--sweeps", m.sweeps, "AQCE sweeps per expansion")->capture_default_str();
    sub->add_option("--iters", m.iters, "HEC training iterations")->capture_default_str();
}

struct LoadOutcome {
    json report;
    int G{0};
    std::optional<double> s_final;
    double infidelity_initial{0.0};
    double infidelity_final{0.0};
    Circuit circuit;
    std::vector<double> params;
};

AqerConfig aqer_config(const MethodOptions &m, int T, long long shots, std::uint64_t seed) {
    AqerConfig cfg;
    cfg.T = T;
    cfg.T3 = m.T3;
    cfg.lr = m.lr;
    cfg.nm_tol = m.nm_tol;
    cfg.nm_max_iter = m.nm_max_iter;
    if (shots > 0) cfg.shots = shots;
    cfg.seed = seed;
    return cfg;
}

// `size` is T (aqer), layers (mps, hec) or units (aqce).
LoadOutcome run_method(const MethodOptions &m, const StateVector &target, int size,
                       long long shots, std::uint64_t seed) {
    LoadOutcome o;
    const double base = 1.0 - fidelity(target, StateVector(target.num_qubits()));
    if (m.method == "aqer") {
        const AqerConfig cfg = aqer_config(m, size, shots, seed);
        AqerResult r = run_aqer(target, cfg);
        o.report = to_json(r, cfg);
        o.G = r.G;
        o.s_final = r.s_trace.back();
        o.infidelity_initial = r.infidelity_initial;
        o.infidelity_final = r.infidelity_final;
        o.circuit = std::move(r.circuit);
        o.params = std::move(r.theta_star);
        return o;
    }
    if (shots > 0) throw InvalidArgument("shot mode is only available for aqer");
    LoaderResult lr;
    if (m.method == "mps") {
        lr = mps_loader(target, size);
    } else if (m.method == "aqce") {
        AqceOptions opts;
        opts.sweeps_per_expansion = m.sweeps;
        const AqceResult a = aqce_run(target, size, opts);
        lr = {a.circuit, a.infidelity, a.G};
    } else {
        const Circuit c = hec_build(target.num_qubits(), size);
        const HecResult h = hec_train(target, c, seed, m.iters, m.lr);
        lr = {c, h.infidelity, gate_count_table(GateCountMethod::Hec, target.num_qubits(), size)};
        o.params = h.theta;
    }
    o.report = loader_to_json(m.method, lr);
    if (m.method == "hec") o.report["theta"] = o.params;
    o.G = lr.G;
    o.infidelity_initial = base;
    o.infidelity_final = lr.infidelity;
    o.circuit = std::move(lr.circuit);
    return o;
}

struct RunOptions {
    Common common;
    DatasetOptions data;
    MethodOptions method;
};

void cmd_run(const RunOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    RunManifest m("run", argv, JsonConfig::options_json(app), o.common.seed);
    if (o.data.kind == "file" || o.data.kind == "amplitude") m.add_input(o.data.input);
    const Dataset ds = make_dataset(o.data, o.data.kind, o.common.seed);
    const int size = o.method.method == "aqer"   ? o.method.T
                     : o.method.method == "aqce" ? o.method.units
                                                 : o.method.layers;
    LoadOutcome r = run_method(o.method, ds.state, size, o.method.shots, o.common.seed);
    json result = std::move(r.report);
    result["dataset"] = ds.label;
    result["num_qubits"] = ds.state.num_qubits();
    result["seed"] = o.common.seed;
    finish_json(o.common, m, std::move(result));
}

// ---------------------------------------------------------------------- sweep

struct SweepOptions {
    Common common;
    DatasetOptions data;
    std::vector<std::string> kinds{"tfim"};
    MethodOptions method;
    std::vector<int> grid{5, 10, 20};
    std::vector<long long> shots{0};
    std::vector<std::uint64_t> seeds{0};
    int jobs{1};
};

// Runs `count` independent cells on `jobs` threads.
template <typename Fn>
void run_pool(std::size_t count, int jobs, Fn &&fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::vector<std::jthread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

void cmd_sweep(const SweepOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    RunManifest m("sweep", argv, JsonConfig::options_json(app), o.common.seed);
    if (std::find(o.kinds.begin(), o.kinds.end(), "file") != o.kinds.end()) {
        m.add_input(o.data.input);
    }
    struct Cell {
        std::size_t dataset;
        int size;
        long long shots;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (std::size_t d = 0; d < o.kinds.size(); ++d) {
        for (int size : o.grid) {
            for (long long s : o.shots) {
                for (std::uint64_t seed : o.seeds) cells.push_back({d, size, s, seed});
            }
        }
    }
    // Targets depend on the seed only for random datasets.
    std::map<std::pair<std::size_t, std::uint64_t>, Dataset> targets;
    for (const Cell &c : cells) {
        const auto key = std::make_pair(c.dataset, c.seed);
        if (!targets.count(key)) targets.emplace(key, make_dataset(o.data, o.kinds[c.dataset], c.seed));
    }

    CsvTable table({"dataset", "method", "T", "G", "shots", "seed", "S_final",
                    "infidelity_initial", "infidelity_final", "wall_ms"});
    std::mutex table_mutex;
    run_pool(cells.size(), o.jobs, [&](std::size_t i) {
        const Cell &c = cells[i];
        const Dataset &ds = targets.at({c.dataset, c.seed});
        const auto t0 = std::chrono::steady_clock::now();
        const LoadOutcome r = run_method(o.method, ds.state, c.size, c.shots, c.seed);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::vector<std::string> row{ds.label,
                                     o.method.method,
                                     std::to_string(c.size),
                                     std::to_string(r.G),
                                     c.shots > 0 ? std::to_string(c.shots) : "",
                                     std::to_string(c.seed),
                                     r.s_final ? format_number(*r.s_final) : "",
                                     format_number(r.infidelity_initial),
                                     format_number(r.infidelity_final),
                                     o.common.omit_timing ? "" : format_number(std::round(ms))};
        std::lock_guard<std::mutex> lock(table_mutex);
        table.add_row(std::move(row));
    });
    table.sort_by({0, 1, 2, 4, 5});
    finish_csv(o.common, m, table);
}

// --------------------------------------------------------------- bounds-table

struct BoundsOptions {
    Common common;
    int n{10};
    std::vector<double> s_grid;
    double s_step{0.25};
};

void cmd_bounds(const BoundsOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    RunManifest m("bounds-table", argv, JsonConfig::options_json(app), o.common.seed);
    std::vector<double> grid = o.s_grid;
    if (grid.empty()) {
        if (!(o.s_step > 0.0)) throw InvalidArgument("--s-step must be positive");
        const int steps = static_cast<int>(std::floor(o.n / o.s_step + 1e-9));
        for (int i = 0; i <= steps; ++i) grid.push_back(i * o.s_step);
    }
    CsvTable table({"S", "f1", "f2"});
    for (double s : grid) {
        table.add_row({format_number(s), format_number(bound_f1(s, o.n)), format_number(bound_f2(s))});
    }
    finish_csv(o.common, m, table);
}

// ---------------------------------------------------------------------- phase

struct PhaseOptions {
    Common common;
    MethodOptions method;
    int n{10};
    double J{1.0};
    std::vector<double> g_grid{0.8, 0.9, 1.0, 1.1, 1.2};
    std::vector<int> t_grid{40};
};

void cmd_phase(const PhaseOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    RunManifest m("phase", argv, JsonConfig::options_json(app), o.common.seed);
    CsvTable table({"g", "J", "T", "G", "magnetization_exact", "magnetization_loaded",
                    "infidelity_final"});
    for (double g : o.g_grid) {
        const StateVector target = ground_state(SpinHamiltonianSpec::tfim_chain(o.n, o.J, g)).state;
        const double exact = magnetization(target);
        for (int T : o.t_grid) {
            const AqerResult r = run_aqer(target, aqer_config(o.method, T, 0, o.common.seed));
            table.add_row({format_number(g), format_number(o.J), std::to_string(T),
                           std::to_string(r.G), format_number(exact),
                           format_number(magnetization(prepare(r.circuit, r.theta_star))),
                           format_number(r.infidelity_final)});
        }
    }
    finish_csv(o.common, m, table);
}

// ---------------------------------------------------------------- noise-sweep

struct NoiseOptions {
    Common common;
    DatasetOptions data;
    MethodOptions method;
    std::vector<int> t_grid{5, 10, 20, 40, 60, 100};
    std::vector<double> p1{1e-3};
    std::vector<double> p2{1e-2};
    std::string placement{"per-gate"};
};

void cmd_noise_sweep(const NoiseOptions &o, const CLI::App &app,
                     const std::vector<std::string> &argv) {
    RunManifest m("noise-sweep", argv, JsonConfig::options_json(app), o.common.seed);
    if (o.data.kind == "file" || o.data.kind == "amplitude") m.add_input(o.data.input);
    if (o.p1.size() != o.p2.size()) throw InvalidArgument("--p1 and --p2 need equal lengths");
    const NoisePlacement placement = noise_placement_from_string(o.placement);
    const Dataset ds = make_dataset(o.data, o.data.kind, o.common.seed);
    if (ds.state.num_qubits() > kMaxDensityQubits) {
        throw InvalidArgument("noisy simulation supports at most " +
                              std::to_string(kMaxDensityQubits) + " qubits");
    }
    CsvTable table({"dataset", "T", "G", "p1", "p2", "placement", "infidelity_noiseless",
                     "infidelity_noisy"});
    for (int T : o.t_grid) {
        const AqerResult r = run_aqer(ds.state, aqer_config(o.method, T, 0, o.common.seed));
        for (std::size_t i = 0; i < o.p1.size(); ++i) {
            const NoiseModel noise{o.p1[i], o.p2[i], placement};
            const double noisy = noisy_load_eval(ds.state, r.circuit, r.theta_star, noise);
            table.add_row({ds.label, std::to_string(T), std::to_string(r.G),
                           format_number(o.p1[i]), format_number(o.p2[i]), o.placement,
                           format_number(r.infidelity_final), format_number(noisy)});
        }
    }
    finish_csv(o.common, m, table);
}

// ------------------------------------------------------------------------ iqp

struct IqpOptions {
    Common common;
    std::string mode{"exact"};
    int n{8};
    int edges{10};
    int max_degree{0};
    int K{3};
    double eps{0.05};
    double delta{0.05};
    double c{200.0};
    bool calibrate{false};
    int calibration_trials{200};
};

void cmd_iqp(const IqpOptions &o, const CLI::App &app, const std::vector<std::string> &argv) {
    RunManifest m("iqp", argv, JsonConfig::options_json(app), o.common.seed);
    Rng rng = substream(o.common.seed, "iqp-instance");
    json result{{"mode", o.mode}, {"N", o.n}};
    IqpSpec spec;
    IqpLoadResult r;
    if (o.mode == "exact") {
        const IqpGrid grid(o.K);
        spec = random_iqp_spec(o.n, o.edges, o.max_degree, rng, [&](Rng &g) {
            int a = 0;
            while (a == 0) a = std::uniform_int_distribution<int>(-2 * o.K, 2 * o.K)(g);
            return grid.value(a);
        });
        result["K"] = o.K;
        try {
            r = iqp_exact_load(iqp_state(spec), o.K, static_cast<int>(spec.edges.size()));
            result["recovered"] = true;
        } catch (const ConvergenceError &e) {
            result["recovered"] = false;
            result["error"] = e.what();
        }
    } else if (o.mode == "approx") {
        const int D = std::max(1, o.max_degree);
        spec = random_iqp_spec(o.n, o.edges, D, rng, [](Rng &g) {
            return std::uniform_real_distribution<double>(-kPi, kPi)(g);
        });
        double floor_cos = 1.0;
        for (double w : spec.angles) floor_cos = std::min(floor_cos, std::abs(std::cos(w)));
        r = iqp_approx_load(iqp_state(spec), o.eps, D);
        result["eps"] = o.eps;
        result["K"] = IqpGrid::for_epsilon(D, o.n, o.eps).K;
        result["cosine_floor"] = floor_cos;
        result["within_eps"] = r.s_final <= o.eps;
    } else {
        const int D = std::max(1, o.max_degree);
        spec = random_iqp_spec(o.n, o.edges, D, rng, [](Rng &) { return kPi / 4; });
        double c = o.c;
        if (o.calibrate) {
            const IqpCalibration cal = iqp_calibrate_shot_constant(
                {12.5, 25.0, 50.0, 100.0, 200.0, 400.0}, o.calibration_trials, std::min(o.n, 5),
                std::min(D, 3), o.delta, o.common.seed);
            c = cal.c;
            result["calibration"] = {{"c", cal.c}, {"failure_rate", cal.failure_rate},
                                     {"trials", cal.trials}};
        }
        IqpShotOptions so;
        so.max_degree = D;
        so.delta = o.delta;
        so.c = c;
        so.seed = o.common.seed;
        r = iqp_shot_recover(iqp_state(spec), so);
        result["c"] = c;
        result["delta"] = o.delta;
        result["shots_per_estimate"] = iqp_shots_per_estimate(o.n, so);
    }
    std::vector<std::pair<int, int>> truth = spec.edges;
    std::sort(truth.begin(), truth.end());
    const json rj = to_json(r);
    for (const auto &[k, v] : rj.items()) result[k] = v;
    result["E_true"] = truth;
    result["edges_match"] = r.edges() == truth;
    finish_json(o.common, m, std::move(result));
}

// --------------------------------------------------------------------- verify

struct VerifyOptions {
    std::vector<int> only;
    std::uint64_t seed{20260101};
    bool list{false};
};

int cmd_verify(const VerifyOptions &o) {
    if (o.list) {
        for (const auto &c : checks::registry()) {
            std::cout << c.id << " " << c.name << ": " << c.summary << "\n";
        }
        return 0;
    }
    std::vector<int> ids = o.only;
    if (ids.empty()) {
        for (const auto &c : checks::registry()) ids.push_back(c.id);
    }
    int failed = 0;
    for (int id : ids) {
        const checks::CheckResult r = checks::run_check(id, o.seed);
        std::cout << checks::format_line(r) << std::endl;
        failed += !r.passed;
    }
    std::cout << (ids.size() - failed) << "/" << ids.size() << " checks passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

} // namespace
} // namespace qload::cli

int main(int argc, char **argv) {
    using namespace qload::cli;
    CLI::App app{"qload: entanglement-guided quantum state loading"};
    app.set_version_flag("--version", QLOAD_VERSION);
    app.require_subcommand(1);
    const std::vector<std::string> args = argv_vector(argc, argv);
    int status = 0;

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen-dataset", "Generate a target state file and manifest");
    add_common(gen_cmd, gen.common);
    add_dataset_options(gen_cmd, gen.data);
    gen_cmd->add_option("--out-dir", gen.out_dir, "Directory for the state file")
        ->capture_default_str();
    gen_cmd->callback([&] { cmd_gen_dataset(gen, *gen_cmd, args); });

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Load one target with one method");
    add_common(run_cmd, run.common);
    add_dataset_options(run_cmd, run.data);
    add_method_options(run_cmd, run.method, false);
    run_cmd->callback([&] { cmd_run(run, *run_cmd, args); });

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Grid of loader runs written as CSV");
    add_common(sweep_cmd, sweep.common);
    add_dataset_options(sweep_cmd, sweep.data, true, &sweep.kinds);
    add_method_options(sweep_cmd, sweep.method, true);
    sweep_cmd->add_option("--grid,--T-grid", sweep.grid,
                          "T (aqer), layers (mps, hec) or units (aqce)")
        ->capture_default_str();
    sweep_cmd->add_option("--shots", sweep.shots, "Shot counts (0 = exact)")->capture_default_str();
    sweep_cmd->add_option("--seeds", sweep.seeds, "Seeds")->capture_default_str();
    sweep_cmd->add_option("--jobs,-j", sweep.jobs, "Worker threads")->capture_default_str();
    sweep_cmd->callback([&] { cmd_sweep(sweep, *sweep_cmd, args); });

    BoundsOptions bounds;
    auto *bounds_cmd = app.add_subcommand("bounds-table", "Infidelity envelope (S, f1, f2) as CSV");
    add_common(bounds_cmd, bounds.common);
    bounds_cmd->add_option("--n", bounds.n, "Number of qubits")->capture_default_str();
    bounds_cmd->add_option("--S", bounds.s_grid, "Explicit S values");
    bounds_cmd->add_option("--s-step", bounds.s_step, "Grid step on [0, N]")->capture_default_str();
    bounds_cmd->callback([&] { cmd_bounds(bounds, *bounds_cmd, args); });

    PhaseOptions phase;
    auto *phase_cmd = app.add_subcommand("phase", "TFIM magnetization of loaded states as CSV");
    add_common(phase_cmd, phase.common);
    add_method_options(phase_cmd, phase.method, true);
    phase_cmd->add_option("--n", phase.n, "Number of qubits")->capture_default_str();
    phase_cmd->add_option("--J", phase.J, "Coupling J")->capture_default_str();
    phase_cmd->add_option("--g-grid", phase.g_grid, "Transverse fields g")->capture_default_str();
    phase_cmd->add_option("--T-grid", phase.t_grid, "AQER block counts")->capture_default_str();
    phase_cmd->callback([&] { cmd_phase(phase, *phase_cmd, args); });

    NoiseOptions noise;
    auto *noise_cmd = app.add_subcommand("noise-sweep", "Noisy infidelity versus T as CSV");
    add_common(noise_cmd, noise.common);
    add_dataset_options(noise_cmd, noise.data);
    add_method_options(noise_cmd, noise.method, true);
    noise_cmd->add_option("--T-grid", noise.t_grid, "AQER block counts")->capture_default_str();
    noise_cmd->add_option("--p1", noise.p1, "One-qubit depolarizing rates")->capture_default_str();
    noise_cmd->add_option("--p2", noise.p2, "Two-qubit depolarizing rates (paired with --p1)")
        ->capture_default_str();
    noise_cmd->add_option("--noise-placement", noise.placement, "per-gate or per-layer")
        ->check(CLI::IsMember({"per-gate", "per-layer"}))
        ->capture_default_str();
    noise_cmd->callback([&] { cmd_noise_sweep(noise, *noise_cmd, args); });

    IqpOptions iqp;
    auto *iqp_cmd = app.add_subcommand("iqp", "IQP-state recovery (exact, approx or shot)");
    add_common(iqp_cmd, iqp.common);
    iqp_cmd->add_option("--mode", iqp.mode, "exact, approx or shot")
        ->check(CLI::IsMember({"exact", "approx", "shot"}))
        ->capture_default_str();
    iqp_cmd->add_option("--n", iqp.n, "Number of qubits")->capture_default_str();
    iqp_cmd->add_option("--edges", iqp.edges, "Number of edges")->capture_default_str();
    iqp_cmd->add_option("--max-degree", iqp.max_degree, "Degree bound D (0 = none in exact mode)")
        ->capture_default_str();
    iqp_cmd->add_option("--K", iqp.K, "Angle grid size (exact)")->capture_default_str();
    iqp_cmd->add_option("--eps", iqp.eps, "Target S (approx)")->capture_default_str();
    iqp_cmd->add_option("--delta", iqp.delta, "Failure probability (shot)")->capture_default_str();
    iqp_cmd->add_option("--c", iqp.c, "Shot-budget constant (shot)")->capture_default_str();
    iqp_cmd->add_flag("--calibrate", iqp.calibrate, "Calibrate c before the shot run");
    iqp_cmd->add_option("--calibration-trials", iqp.calibration_trials, "Trials per candidate c")
        ->capture_default_str();
    iqp_cmd->callback([&] { cmd_iqp(iqp, *iqp_cmd, args); });

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
    verify_cmd->add_option("--only", verify.only, "Check ids to run (default: all)");
    verify_cmd->add_option("--seed", verify.seed, "Master seed")->capture_default_str();
    verify_cmd->add_flag("--list", verify.list, "List the checks and exit");
    verify_cmd->callback([&] { status = cmd_verify(verify); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
