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

#include "qload/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <sstream>

#include "qload/aqer.hpp"
#include "qload/baselines.hpp"
#include "qload/datasets.hpp"
#include "qload/entanglement.hpp"
#include "qload/gradients.hpp"
#include "qload/iqp.hpp"
#include "qload/noisy.hpp"
#include "qload/random.hpp"
#include "qload/rdm.hpp"

namespace qload::checks {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string join(const std::vector<double> &xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + num(xs[i]);
    return s + "]";
}

double mean(const std::vector<double> &xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size() / 2;
    return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

StateVector product_from(const std::vector<Rdm1> &rhos) {
    const int n = static_cast<int>(rhos.size());
    std::vector<Eigen::Vector2cd> qs;
    for (const Rdm1 &r : rhos) {
        const ProductParams p = product_params(r);
        qs.push_back(product_qubit(p.beta, p.gamma));
    }
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        cplx a = 1.0;
        for (int q = 0; q < n; ++q) a *= qs[q]((i >> q) & 1);
        amps[i] = a;
    }
    return StateVector::normalized(std::move(amps));
}

StateVector tfim(int n, double J, double g) {
    return ground_state(SpinHamiltonianSpec::tfim_chain(n, J, g)).state;
}

const std::vector<double> kCouplings{0.8, 0.9, 1.0, 1.1, 1.2};

struct Outcome {
    bool passed;
    std::string detail;
};

// 1. Infidelity sandwich of the product approximation.
Outcome check_sandwich(std::uint64_t seed) {
    Rng rng = substream(seed, "c1");
    std::uniform_int_distribution<int> pick_n(2, 6);
    int bad = 0;
    double worst = -1.0;
    for (int t = 0; t < 200; ++t) {
        const int n = pick_n(rng);
        const StateVector target = random_state(n, rng);
        const Circuit c = random_circuit(n, 2 * n, rng);
        const StateVector v = apply_circuit(target, c, {}, /*adjoint=*/true);
        const double s = entanglement_total(v.amplitudes());
        const double inf = infidelity(v, product_from(all_rdm1(v.amplitudes())));
        const double excess = std::max(bound_f1(s, n) - inf, inf - bound_f2(s));
        worst = std::max(worst, excess);
        if (excess > 1e-9) ++bad;
    }
    return {bad == 0, "200 pairs, violations=" + std::to_string(bad) +
                          ", max excess over envelope=" + num(worst)};
}

// 2. GHZ loading with nine blocks.
Outcome check_ghz(std::uint64_t seed) {
    AqerConfig cfg;
    cfg.T = 9;
    cfg.seed = seed;
    const AqerResult r = run_aqer(ghz(10), cfg);
    const double s = r.s_trace.back();
    return {s < 0.125 && r.infidelity_final < 1e-3,
            "S after reduction=" + num(s) + " (< 0.125), final infidelity=" +
                num(r.infidelity_final) + " (< 1e-3)"};
}

std::vector<double> aqer_tfim_row(const std::vector<int> &ts, std::uint64_t seed,
                                  std::vector<std::vector<double>> *per_j = nullptr) {
    std::vector<std::vector<double>> vals(ts.size());
    for (double J : kCouplings) {
        const StateVector target = tfim(10, J, 1.0);
        std::vector<double> row;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            AqerConfig cfg;
            cfg.T = ts[i];
            cfg.seed = seed;
            const double inf = run_aqer(target, cfg).infidelity_final;
            vals[i].push_back(inf);
            row.push_back(inf);
        }
        if (per_j) per_j->push_back(row);
    }
    std::vector<double> means;
    for (const auto &v : vals) means.push_back(mean(v));
    return means;
}

// 3. TFIM ground states, N = 10.
Outcome check_tfim_row(std::uint64_t seed) {
    const std::vector<int> ts{20, 40, 80};
    const std::vector<double> band{0.06, 0.025, 0.008};
    const std::vector<double> m = aqer_tfim_row(ts, seed);
    bool ok = true;
    for (std::size_t i = 0; i < ts.size(); ++i) ok = ok && m[i] <= band[i];
    return {ok, "mean infidelity at G=20/40/80: " + join(m) + " vs bands " + join(band)};
}

// 4. Random-circuit states, N = 10, W = 40.
Outcome check_srqc_row(std::uint64_t seed) {
    const std::vector<int> ts{20, 40, 80};
    const std::vector<double> band{0.45, 0.25, 0.15};
    std::vector<std::vector<double>> vals(ts.size());
    for (int s = 0; s < 10; ++s) {
        const StateVector target = random_circuit_state(10, 40, seed + s);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            AqerConfig cfg;
            cfg.T = ts[i];
            cfg.seed = seed + s;
            vals[i].push_back(run_aqer(target, cfg).infidelity_final);
        }
    }
    std::vector<double> m;
    bool ok = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        m.push_back(mean(vals[i]));
        ok = ok && m.back() <= band[i];
    }
    return {ok, "mean infidelity over 10 seeds at G=20/40/80: " + join(m) + " vs bands " +
                    join(band)};
}

// 5. Ordering against the reference loaders at matched gate counts.
Outcome check_baseline_order(std::uint64_t seed) {
    const std::vector<int> ts{20, 40, 80};
    const std::vector<double> aqer = aqer_tfim_row(ts, seed);
    // Real targets: AQCE costs 10 per expansion of 5 units, MPS 2(N-1) per layer.
    const std::vector<int> aqce_units{10, 20, 40};
    const std::vector<int> mps_layers{2, 3, 5};
    std::vector<std::vector<double>> aqce(3), mps(3);
    std::vector<int> aqce_g(3), mps_g(3);
    for (double J : kCouplings) {
        const StateVector target = tfim(10, J, 1.0);
        for (int i = 0; i < 3; ++i) {
            const AqceResult a = aqce_run(target, aqce_units[i]);
            aqce[i].push_back(a.infidelity);
            aqce_g[i] = a.G;
            const LoaderResult m = mps_loader(target, mps_layers[i]);
            mps[i].push_back(m.infidelity);
            mps_g[i] = m.G;
        }
    }
    std::vector<double> am, mm;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        am.push_back(mean(aqce[i]));
        mm.push_back(mean(mps[i]));
        ok = ok && aqer[i] <= am[i] && aqer[i] <= mm[i];
    }
    std::ostringstream d;
    d << "AQER G=20/40/80 " << join(aqer) << "; AQCE G=" << aqce_g[0] << "/" << aqce_g[1] << "/"
      << aqce_g[2] << " " << join(am) << "; MPS G=" << mps_g[0] << "/" << mps_g[1] << "/"
      << mps_g[2] << " " << join(mm);
    return {ok, d.str()};
}

// 6. Closed-form product angles against the eigenvalue oracle.
Outcome check_product_optimality(std::uint64_t seed) {
    Rng rng = substream(seed, "c6");
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Rdm1 rho = random_rdm1(rng);
        const ProductParams p = product_params(rho);
        const Eigen::Vector2cd psi = product_qubit(p.beta, p.gamma);
        const double f = (psi.adjoint() * rho * psi)(0, 0).real();
        Eigen::SelfAdjointEigenSolver<Mat2> es(rho, Eigen::EigenvaluesOnly);
        worst = std::max(worst, std::abs(f - es.eigenvalues().maxCoeff()));
    }
    return {worst <= 1e-9, "1000 matrices, max |F - lambda_max|=" + num(worst)};
}

// Random parameterized circuit with shared slots and fixed gates.
Circuit random_param_circuit(int n, int params, Rng &rng) {
    std::uniform_int_distribution<int> q(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_real_distribution<double> scale(-2.0, 2.0);
    Circuit c(n);
    for (int s = 0; s < params; ++s) {
        const int uses = 1 + static_cast<int>(rng() % 2);
        for (int u = 0; u < uses; ++u) {
            const int a = q(rng);
            int b = q(rng);
            while (b == a) b = q(rng);
            const double sc = u == 0 ? 1.0 : scale(rng);
            switch (kind(rng)) {
            case 0: c.add_bound(GateOp::ry(a, 0.0), s, sc); break;
            case 1: c.add_bound(GateOp::rz(a, 0.0), s, sc); break;
            case 2: c.add_bound(GateOp::rzz(a, b, 0.0), s, sc); break;
            case 3: c.add(GateOp::cz(a, b)); c.add_bound(GateOp::ry(b, 0.0), s, sc); break;
            case 4: c.add(GateOp::h(a)); c.add_bound(GateOp::rz(a, 0.0), s, sc); break;
            default: c.add(GateOp::x(b)); c.add_bound(GateOp::rzz(b, a, 0.0), s, sc); break;
            }
        }
    }
    return c;
}

// 7. Gradient engines against finite differences and each other.
Outcome check_gradients(std::uint64_t seed) {
    Rng rng = substream(seed, "c7");
    std::uniform_int_distribution<int> pick_n(1, 6), pick_p(1, 40);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst_fd = 0.0, worst_ps = 0.0;
    const double h = 1e-5;
    for (int t = 0; t < 100; ++t) {
        const int n = std::max(2, pick_n(rng));
        const int p = pick_p(rng);
        const Circuit c = random_param_circuit(n, p, rng);
        const StateVector target = random_state(n, rng);
        std::vector<double> x(p);
        for (double &v : x) v = angle(rng);
        const LossGrad adj = adjoint_gradient(target, c, x);
        const LossGrad ps = paramshift_gradient(target, c, x);
        double gmax = 0.0, dfd = 0.0, dps = 0.0;
        for (int i = 0; i < p; ++i) {
            std::vector<double> xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const double fd = (infidelity_loss(target, c, xp) - infidelity_loss(target, c, xm)) /
                              (2.0 * h);
            gmax = std::max(gmax, std::abs(fd));
            dfd = std::max(dfd, std::abs(fd - adj.grad[i]));
            dps = std::max(dps, std::abs(ps.grad[i] - adj.grad[i]));
        }
        worst_fd = std::max(worst_fd, dfd / std::max(gmax, 1e-3));
        worst_ps = std::max(worst_ps, dps);
    }
    return {worst_fd < 1e-6 && worst_ps <= 1e-10,
            "100 circuits, max rel. error vs central differences=" + num(worst_fd) +
                ", max |shift - adjoint|=" + num(worst_ps)};
}

// 8. Environment-SVD update identity and monotone trace.
Outcome check_aqce(std::uint64_t seed) {
    Rng rng = substream(seed, "c8");
    double worst_id = 0.0, worst_drop = 0.0;
    AqceOptions o;
    o.units_per_expansion = 5;
    o.sweeps_per_expansion = 2;
    o.check_updates = true;
    for (int t = 0; t < 50; ++t) {
        const AqceResult r = aqce_run(random_state(6, rng), 10, o);
        const auto &f = r.state.fidelity_trace;
        const auto &g = r.state.checked_trace;
        for (std::size_t i = 0; i < f.size(); ++i) {
            worst_id = std::max(worst_id, std::abs(f[i] - g[i]));
            if (i) worst_drop = std::max(worst_drop, f[i - 1] - f[i]);
        }
    }
    return {worst_id <= 1e-10 && worst_drop <= 1e-10,
            "50 targets, max |F - (Tr D)^2|=" + num(worst_id) + ", max decrease=" +
                num(worst_drop)};
}

// 9. One MPS layer is exact on bond-2 states.
Outcome check_mps(std::uint64_t seed) {
    Rng rng = substream(seed, "c9");
    std::uniform_int_distribution<int> pick_n(2, 10);
    double worst = mps_loader(ghz(10), 1).infidelity;
    const double ghz_inf = worst;
    for (int t = 0; t < 50; ++t) {
        const StateVector s = random_mps_state(pick_n(rng), 2, rng);
        worst = std::max(worst, mps_loader(s, 1).infidelity);
    }
    return {worst < 1e-9, "GHZ infidelity=" + num(ghz_inf) + ", max over 50 bond-2 states=" +
                              num(worst)};
}

// 10. Entropy envelope under depolarizing.
Outcome check_depol(std::uint64_t seed) {
    const std::vector<double> grid{0.0, 0.05, 0.2, 0.5, 1.0};
    const DepolBoundsReport r = verify_depol_bounds(6, 200, grid, seed);
    return {r.violations == 0, std::to_string(r.checks) + " checks, violations=" +
                                   std::to_string(r.violations) + ", max excess=" +
                                   num(r.max_violation)};
}

// 11. Noise-dependent optimal circuit size.
Outcome check_noise_sweep(std::uint64_t seed) {
    const StateVector target = tfim(10, 1.0, 1.0);
    const std::vector<int> ts{5, 10, 20, 40, 60, 100};
    const NoiseModel noise{1e-3, 1e-2, NoisePlacement::PerGate};
    std::vector<double> inf;
    for (int t : ts) {
        AqerConfig cfg;
        cfg.T = t;
        cfg.seed = seed;
        const AqerResult r = run_aqer(target, cfg);
        inf.push_back(noisy_load_eval(target, r.circuit, r.theta_star, noise));
    }
    const auto it = std::min_element(inf.begin(), inf.end());
    const std::size_t k = static_cast<std::size_t>(it - inf.begin());
    const bool interior = k > 0 && k + 1 < inf.size() && *it < inf.front() && *it < inf.back();
    return {interior, "noisy infidelity over T=5..100: " + join(inf) + ", minimum at T=" +
                          std::to_string(ts[k])};
}

// 12. Exact recovery of grid IQP states.
Outcome check_iqp_exact(std::uint64_t seed) {
    Rng rng = substream(seed, "c12");
    std::uniform_int_distribution<int> pick_n(2, 10), pick_k(1, 3), pick_e(0, 12);
    int failures = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int n = pick_n(rng);
        const IqpGrid grid(pick_k(rng));
        const IqpSpec spec = random_iqp_spec(n, pick_e(rng), 0, rng, [&](Rng &r) {
            return grid.value(std::uniform_int_distribution<int>(-2 * grid.K, 2 * grid.K)(r));
        });
        const int e = static_cast<int>(spec.edges.size());
        try {
            const IqpLoadResult r = iqp_exact_load(iqp_state(spec), grid.K, e);
            worst = std::max(worst, r.infidelity);
            if (!(r.infidelity < 1e-9) || r.iterations > e) ++failures;
        } catch (const ConvergenceError &) {
            ++failures;
        }
    }
    return {failures == 0, "100 instances, failures=" + std::to_string(failures) +
                               ", max infidelity=" + num(worst)};
}

// 13. Product formula for the residual X expectations.
Outcome check_iqp_formula(std::uint64_t seed) {
    Rng rng = substream(seed, "c13");
    std::uniform_int_distribution<int> pick_n(2, 8);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = pick_n(rng);
        const int e = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
        const IqpSpec spec = random_iqp_spec(n, e, 0, rng, [](Rng &r) {
            return std::uniform_real_distribution<double>(-kPi, kPi)(r);
        });
        const StateVector v = iqp_residual_state(spec);
        for (int q = 0; q < n; ++q) {
            worst = std::max({worst,
                              std::abs(iqp_x_formula(spec, q) - pauli_expectation(v, Pauli::X, q)),
                              std::abs(pauli_expectation(v, Pauli::Y, q)),
                              std::abs(pauli_expectation(v, Pauli::Z, q))});
        }
    }
    return {worst <= 1e-12, "200 specs, max deviation=" + num(worst)};
}

// 14. Median infidelity falls with the shot count.
Outcome check_shot_scaling(std::uint64_t seed) {
    const StateVector target = tfim(10, 1.0, 1.0);
    const std::vector<long long> shots{100, 1000, 10000, 100000};
    std::vector<double> med;
    for (long long m : shots) {
        std::vector<double> v;
        for (int s = 0; s < 5; ++s) {
            AqerConfig cfg;
            cfg.T = 40;
            cfg.shots = m;
            cfg.seed = seed + s;
            v.push_back(run_aqer(target, cfg).infidelity_final);
        }
        med.push_back(median(v));
    }
    bool ok = true;
    for (std::size_t i = 1; i < med.size(); ++i) ok = ok && med[i] < med[i - 1];
    return {ok, "median infidelity at 1e2..1e5 shots: " + join(med)};
}

// 15. Loaded magnetization across the transition.
Outcome check_phase(std::uint64_t seed) {
    std::vector<double> loaded, exact;
    double worst = 0.0;
    for (double g : kCouplings) {
        const StateVector target = tfim(10, 1.0, g);
        AqerConfig cfg;
        cfg.T = 40;
        cfg.seed = seed;
        const AqerResult r = run_aqer(target, cfg);
        loaded.push_back(magnetization(prepare(r.circuit, r.theta_star)));
        exact.push_back(magnetization(target));
        worst = std::max(worst, std::abs(loaded.back() - exact.back()));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < loaded.size(); ++i) monotone = monotone && loaded[i] > loaded[i - 1];
    return {worst <= 0.05 && monotone, "<X> loaded " + join(loaded) + ", exact " + join(exact) +
                                           ", max gap=" + num(worst)};
}

// 16. Initial fine-tuning gradients do not vanish with N.
Outcome check_gradient_scaling(std::uint64_t seed) {
    const std::vector<int> ns{6, 8, 10, 12};
    std::vector<double> norms;
    for (int n : ns) {
        const StateVector target = tfim(n, 1.0, 1.0);
        AqerConfig cfg;
        cfg.T = 2 * n;
        cfg.seed = seed;
        const Step1Result s1 = aqer_step1(target, cfg);
        const Step2Result w = aqer_step2(s1.v_T, cfg);
        const Circuit c = aqer_circuit(n, s1.blocks);
        const LossGrad lg = adjoint_gradient(target, c, aqer_initial_params(s1.blocks, w));
        double sq = 0.0;
        for (double g : lg.grad) sq += g * g;
        norms.push_back(std::sqrt(sq));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = ns[i], y = std::log2(norms[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(ns.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const bool ok = *std::min_element(norms.begin(), norms.end()) > 1e-3 && slope >= -0.2;
    return {ok, "gradient norms at N=6/8/10/12: " + join(norms) + ", log2 slope=" + num(slope)};
}

using CheckFn = Outcome (*)(std::uint64_t);

struct Entry {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<Entry> &entries() {
    static const std::vector<Entry> e{
        {{1, "sandwich", "Step-II infidelity inside the entropy envelope"}, check_sandwich},
        {{2, "ghz", "GHZ_10 with nine blocks"}, check_ghz},
        {{3, "tfim-row", "TFIM N=10 infidelity bands at G=20/40/80"}, check_tfim_row},
        {{4, "srqc-row", "random-circuit N=10 infidelity bands"}, check_srqc_row},
        {{5, "baseline-order", "AQER at or below AQCE and MPS at matched G"},
         check_baseline_order},
        {{6, "product-optimality", "closed-form product angles are optimal"},
         check_product_optimality},
        {{7, "gradients", "adjoint vs differences and parameter shift"}, check_gradients},
        {{8, "aqce-updates", "AQCE update identity and monotone trace"}, check_aqce},
        {{9, "mps-exact", "one MPS layer is exact on bond-2 states"}, check_mps},
        {{10, "depol-entropy", "entropy envelope under depolarizing"}, check_depol},
        {{11, "noise-sweep", "interior optimum of T under noise"}, check_noise_sweep},
        {{12, "iqp-exact", "exact recovery of grid IQP states"}, check_iqp_exact},
        {{13, "iqp-formula", "IQP residual X product formula"}, check_iqp_formula},
        {{14, "shot-scaling", "median infidelity decreases with shots"}, check_shot_scaling},
        {{15, "phase", "loaded magnetization tracks the exact one"}, check_phase},
        {{16, "gradient-scaling", "initial gradients do not vanish with N"},
         check_gradient_scaling},
    };
    return e;
}

} // namespace

const std::vector<CheckInfo> &registry() {
    static const std::vector<CheckInfo> r = [] {
        std::vector<CheckInfo> out;
        for (const Entry &e : entries()) out.push_back(e.info);
        return out;
    }();
    return r;
}

CheckResult run_check(int id, std::uint64_t seed) {
    const auto &e = entries();
    if (id < 1 || id > static_cast<int>(e.size())) {
        throw std::out_of_range("no check with id " + std::to_string(id));
    }
    const Entry &entry = e[id - 1];
    CheckResult r;
    r.id = id;
    r.name = entry.info.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome o = entry.fn(seed);
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception &ex) {
        r.passed = false;
        r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string format_line(const CheckResult &r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name +
           ": " + r.detail + " (" + secs + "s)";
}

} // namespace qload::checks
