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

#include "qload/datasets.hpp"
#include "qload/gradients.hpp"
#include "qload/random.hpp"

namespace qload {
namespace {

Circuit single_ry() {
    Circuit c(1);
    c.add_bound(GateOp::ry(0, 0.0), 0);
    return c;
}

// Layered ansatz with a shared slot and negative scales.
Circuit ansatz(int n, int layers) {
    Circuit c(n);
    int slot = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n; ++q) {
            c.add_bound(GateOp::ry(q, 0.0), slot++);
            c.add_bound(GateOp::rz(q, 0.0), slot++, -1.0);
        }
        for (int q = 0; q + 1 < n; ++q) {
            c.add_bound(GateOp::rzz(q, q + 1, 0.0), slot, 0.5);
            c.add(GateOp::cz(q, q + 1));
        }
        c.add_bound(GateOp::ry(0, 0.0), slot++, 2.0);
        c.add(GateOp::h(n - 1));
    }
    return c;
}

std::vector<double> random_params(int p, Rng &rng) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    std::vector<double> x(p);
    for (double &v : x) v = u(rng);
    return x;
}

TEST(AdjointGradient, single_ry_closed_form) {
    const StateVector one = StateVector::basis(1, 1);
    const std::vector<double> p{kPi / 2};
    const LossGrad lg = adjoint_gradient(one, single_ry(), p);
    EXPECT_NEAR(lg.loss, 1.0 - std::pow(std::sin(kPi / 4), 2), 1e-15);
    EXPECT_NEAR(lg.grad[0], -0.5, 1e-14);
}

TEST(AdjointGradient, zero_at_global_minimum) {
    Rng rng = substream(1, "test-grad");
    const Circuit c = ansatz(3, 2);
    const std::vector<double> x = random_params(c.num_params(), rng);
    const LossGrad lg = adjoint_gradient(prepare(c, x), c, x);
    EXPECT_LT(lg.loss, 1e-10);
    for (double g : lg.grad) EXPECT_LT(std::abs(g), 1e-10);
}

TEST(AdjointGradient, matches_central_differences) {
    Rng rng = substream(2, "test-grad");
    const double h = 1e-5;
    for (int t = 0; t < 5; ++t) {
        const Circuit c = ansatz(4, 2);
        const StateVector target = random_state(4, rng);
        const std::vector<double> x = random_params(c.num_params(), rng);
        const LossGrad lg = adjoint_gradient(target, c, x);
        EXPECT_NEAR(lg.loss, infidelity_loss(target, c, x), 1e-14);
        for (int i = 0; i < c.num_params(); ++i) {
            std::vector<double> xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const double fd =
                (infidelity_loss(target, c, xp) - infidelity_loss(target, c, xm)) / (2 * h);
            EXPECT_LE(std::abs(fd - lg.grad[i]), 1e-6 * std::max(std::abs(fd), 1e-3));
        }
    }
}

TEST(ParamShift, exact_matches_adjoint) {
    Rng rng = substream(3, "test-grad");
    const Circuit c = ansatz(3, 3);
    const StateVector target = random_state(3, rng);
    const std::vector<double> x = random_params(c.num_params(), rng);
    const LossGrad a = adjoint_gradient(target, c, x);
    const LossGrad p = paramshift_gradient(target, c, x);
    for (int i = 0; i < c.num_params(); ++i) EXPECT_NEAR(a.grad[i], p.grad[i], 1e-10);
}

// The shift rule evaluated by resimulating the circuit at theta +/- pi/2 per op.
TEST(ParamShift, matches_explicit_resimulation) {
    Rng rng = substream(4, "test-grad");
    const Circuit c = ansatz(3, 2);
    const StateVector target = random_state(3, rng);
    const std::vector<double> x = random_params(c.num_params(), rng);
    std::vector<double> want(c.num_params(), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto &b = c.binding(i);
        if (!b) continue;
        auto shifted = [&](double s) {
            Circuit d(c.num_qubits());
            for (std::size_t k = 0; k < c.size(); ++k) {
                GateOp g = c.op(k);
                if (c.binding(k)) g.param = c.angle(k, x) + (k == i ? s : 0.0);
                d.add(g);
            }
            return 1.0 - fidelity(target, prepare(d, {}));
        };
        want[b->slot] += b->scale * 0.5 * (shifted(kPi / 2) - shifted(-kPi / 2));
    }
    const LossGrad p = paramshift_gradient(target, c, x);
    for (int k = 0; k < c.num_params(); ++k) EXPECT_NEAR(p.grad[k], want[k], 1e-12);
}

TEST(ParamShift, trivial_zero_gradient) {
    const std::vector<double> p{0.0};
    EXPECT_NEAR(paramshift_gradient(StateVector(1), single_ry(), p).grad[0], 0.0, 1e-15);
}

TEST(ParamShift, shot_noise_within_binomial_bound) {
    Rng rng = substream(5, "test-grad");
    const Circuit c = ansatz(3, 1);
    const StateVector target = random_state(3, rng);
    const std::vector<double> x = random_params(c.num_params(), rng);
    const LossGrad exact = paramshift_gradient(target, c, x);
    const long long shots = 100000;
    Rng srng = substream(6, "shots");
    const LossGrad noisy = paramshift_gradient(target, c, x, shots, &srng);
    for (int i = 0; i < c.num_params(); ++i) {
        const auto uses = std::count_if(c.bindings().begin(), c.bindings().end(),
                                        [&](const auto &b) { return b && b->slot == i; });
        double scale = 0.0;
        for (const auto &b : c.bindings()) {
            if (b && b->slot == i) scale += std::abs(b->scale);
        }
        ASSERT_GT(uses, 0);
        EXPECT_LT(std::abs(noisy.grad[i] - exact.grad[i]), 5.0 * scale / std::sqrt(shots));
    }
    EXPECT_THROW(paramshift_gradient(target, c, x, shots, nullptr), InvalidArgument);
}

TEST(InfidelityGradient, reusable_buffers) {
    Rng rng = substream(7, "test-grad");
    const Circuit c = ansatz(4, 1);
    const StateVector target = random_state(4, rng);
    InfidelityGradient ig(target, c);
    std::vector<double> g(c.num_params());
    for (int t = 0; t < 3; ++t) {
        const std::vector<double> x = random_params(c.num_params(), rng);
        const double l = ig.adjoint(x, g);
        const LossGrad ref = adjoint_gradient(target, c, x);
        EXPECT_NEAR(l, ref.loss, 1e-15);
        for (int i = 0; i < c.num_params(); ++i) EXPECT_NEAR(g[i], ref.grad[i], 1e-14);
    }
    std::vector<double> wrong(1);
    EXPECT_THROW(ig.adjoint(std::vector<double>(c.num_params()), wrong), InvalidArgument);
}

} // namespace
} // namespace qload
