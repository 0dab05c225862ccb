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

#include <cmath>

#include <gtest/gtest.h>

#include "qload/optimizers.hpp"
#include "qload/types.hpp"

namespace qload {
namespace {

TEST(NelderMead, quadratic_1d) {
    NelderMeadOptions o;
    o.tol = 1e-6;
    const OptResult r = nelder_mead([](std::span<const double> x) { return x[0] * x[0]; }, {1.0}, o);
    EXPECT_LT(std::abs(r.best_params[0]), 1e-3);
    EXPECT_TRUE(r.converged);
}

TEST(NelderMead, shifted_bowl_2d) {
    NelderMeadOptions o;
    o.tol = 1e-8;
    const OptResult r = nelder_mead(
        [](std::span<const double> x) {
            return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 2.0) * (x[1] + 2.0);
        },
        {0.0, 0.0}, o);
    EXPECT_NEAR(r.best_params[0], 1.0, 1e-3);
    EXPECT_NEAR(r.best_params[1], -2.0, 1e-3);
}

TEST(NelderMead, rosenbrock_5d) {
    NelderMeadOptions o;
    o.tol = 1e-10;
    o.max_iter = 2000;
    const OptResult r = nelder_mead(
        [](std::span<const double> x) {
            double f = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                f += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
            }
            return f;
        },
        std::vector<double>(5, 0.0), o);
    EXPECT_LT(r.best_value, 1e-2);
    EXPECT_LE(r.iterations, 2000);
}

TEST(NelderMead, trace_is_monotone) {
    const OptResult r = nelder_mead(
        [](std::span<const double> x) { return std::cos(x[0]) + x[1] * x[1]; }, {0.3, 1.0});
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        EXPECT_LE(r.trace[i].second, r.trace[i - 1].second);
    }
}

TEST(NelderMead, rejects_non_finite) {
    EXPECT_THROW(nelder_mead([](std::span<const double>) { return NAN; }, {0.0}),
                 InvalidArgument);
}

TEST(Adam, quadratic_bowl) {
    AdamOptions o;
    o.lr = 0.1;
    o.iters = 500;
    const OptResult r = adam(
        [](std::span<const double> x, std::span<double> g) {
            g[0] = 2.0 * (x[0] - 3.0);
            g[1] = 2.0 * x[1];
            return (x[0] - 3.0) * (x[0] - 3.0) + x[1] * x[1];
        },
        {0.0, 1.0}, o);
    EXPECT_LT(r.best_value, 1e-4);
}

TEST(Adam, zero_gradient_returns_start) {
    const OptResult r = adam(
        [](std::span<const double>, std::span<double> g) {
            g[0] = 0.0;
            return 1.0;
        },
        {0.25});
    EXPECT_DOUBLE_EQ(r.best_params[0], 0.25);
}

TEST(Adam, sine_1d) {
    AdamOptions o;
    o.lr = 0.01;
    o.iters = 2000;
    const OptResult r = adam(
        [](std::span<const double> x, std::span<double> g) {
            g[0] = std::cos(x[0]);
            return std::sin(x[0]);
        },
        {1.0}, o);
    EXPECT_NEAR(std::remainder(r.best_params[0] + kPi / 2, 2 * kPi), 0.0, 1e-2);
    EXPECT_NEAR(r.best_value, -1.0, 1e-4);
}

TEST(Adam, rescore_picks_lower) {
    AdamOptions o;
    o.iters = 50;
    o.rescore = [](std::span<const double> x) { return x[0] * x[0]; };
    const OptResult r = adam(
        [](std::span<const double> x, std::span<double> g) {
            g[0] = 2.0 * x[0];
            return x[0] * x[0];
        },
        {1.0}, o);
    EXPECT_LT(r.best_value, 1.0);
}

} // namespace
} // namespace qload
