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

#include "qload/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qload/types.hpp"

namespace qload {

namespace {

double checked(double v) {
    if (!std::isfinite(v)) throw InvalidArgument("objective returned a non-finite value");
    return v;
}

} // namespace

OptResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &opts) {
    if (!(opts.tol > 0.0)) throw InvalidArgument("Nelder-Mead tolerance must be positive");
    for (double v : x0) {
        if (!std::isfinite(v)) throw InvalidArgument("Nelder-Mead start point is not finite");
    }
    const std::size_t n = x0.size();
    OptResult res;
    if (n == 0) {
        res.best_value = checked(f(x0));
        res.evaluations = 1;
        res.converged = true;
        res.best_params = std::move(x0);
        return res;
    }

    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
    std::vector<double> vals(n + 1);
    auto eval = [&](const std::vector<double> &x) {
        ++res.evaluations;
        return checked(f(x));
    };
    for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            p2[i] = std::move(pts[order[i]]);
            v2[i] = vals[order[i]];
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };
    auto combine = [&](std::vector<double> &out, double a, double b) {
        // out = a * centroid + b * worst
        for (std::size_t i = 0; i < n; ++i) out[i] = a * centroid[i] + b * pts[n][i];
    };

    sort_simplex();
    int it = 0;
    for (; it < opts.max_iter; ++it) {
        if (opts.record_trace) res.trace.emplace_back(it, vals[0]);
        double spread_x = 0.0;
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t i = 0; i < n; ++i) {
                spread_x = std::max(spread_x, std::abs(pts[v][i] - pts[0][i]));
            }
        }
        if (vals[n] - vals[0] < opts.tol && spread_x < opts.tol) {
            res.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[v][i];
        }
        for (double &c : centroid) c /= static_cast<double>(n);

        combine(xr, 2.0, -1.0);
        const double fr = eval(xr);
        bool shrink = false;
        if (fr < vals[0]) {
            combine(xe, 3.0, -2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if (fr < vals[n - 1]) {
            pts[n] = xr;
            vals[n] = fr;
        } else if (fr < vals[n]) {
            combine(xc, 1.5, -0.5);
            const double fc = eval(xc);
            if (fc <= fr) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                shrink = true;
            }
        } else {
            combine(xc, 0.5, 0.5);
            const double fc = eval(xc);
            if (fc < vals[n]) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            for (std::size_t v = 1; v <= n; ++v) {
                for (std::size_t i = 0; i < n; ++i) {
                    pts[v][i] = pts[0][i] + 0.5 * (pts[v][i] - pts[0][i]);
                }
                vals[v] = eval(pts[v]);
            }
        }
        sort_simplex();
    }
    res.iterations = it;
    res.best_params = pts[0];
    res.best_value = vals[0];
    return res;
}

OptResult adam(const LossAndGrad &f, std::vector<double> x0, const AdamOptions &opts) {
    if (!(opts.lr > 0.0)) throw InvalidArgument("Adam learning rate must be positive");
    if (opts.iters < 0) throw InvalidArgument("Adam iteration count must be non-negative");
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0), g(n), m(n, 0.0), v(n, 0.0);
    OptResult res;
    res.trace.reserve(opts.iters + 1);
    res.best_value = std::numeric_limits<double>::infinity();

    auto step_eval = [&](int it) {
        const double loss = f(x, g);
        ++res.evaluations;
        if (!std::isfinite(loss)) throw InvalidArgument("Adam loss is not finite");
        for (double gi : g) {
            if (!std::isfinite(gi)) throw InvalidArgument("Adam gradient is not finite");
        }
        res.trace.emplace_back(it, loss);
        if (loss < res.best_value) {
            res.best_value = loss;
            res.best_params = x;
        }
    };

    double b1t = 1.0, b2t = 1.0;
    for (int it = 0; it < opts.iters; ++it) {
        step_eval(it);
        b1t *= opts.beta1;
        b2t *= opts.beta2;
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = opts.beta1 * m[i] + (1.0 - opts.beta1) * g[i];
            v[i] = opts.beta2 * v[i] + (1.0 - opts.beta2) * g[i] * g[i];
            const double mh = m[i] / (1.0 - b1t);
            const double vh = v[i] / (1.0 - b2t);
            x[i] -= opts.lr * mh / (std::sqrt(vh) + opts.eps);
        }
    }
    step_eval(opts.iters);
    res.iterations = opts.iters;

    if (opts.rescore) {
        const double best = opts.rescore(res.best_params);
        const double last = opts.rescore(x);
        res.evaluations += 2;
        if (last < best) {
            res.best_params = x;
            res.best_value = last;
        } else {
            res.best_value = best;
        }
    }
    res.converged = true;
    return res;
}

} // namespace qload
