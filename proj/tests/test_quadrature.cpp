// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "besselbound/quadrature.hpp"
#include "doctest.h"

using namespace besselbound;

namespace {
double moment(int k) { return (k % 2 == 0) ? 2.0 / (k + 1) : 0.0; }
}  // namespace

TEST_CASE("gk15: weights and polynomial exactness") {
    double wk = quad::kWeightsK[7];
    double wg = quad::kWeightsG[3];
    for (int i = 0; i < 7; ++i) {
        wk += 2.0 * quad::kWeightsK[i];
        if (i % 2 == 1) wg += 2.0 * quad::kWeightsG[i / 2];
    }
    CHECK(std::abs(wk - 2.0) < 1e-15);
    CHECK(std::abs(wg - 2.0) < 1e-15);

    for (int k = 0; k <= 22; ++k) {
        const auto p = quad::gk15([k](double x) { return std::pow(x, k); }, -1.0, 1.0);
        CHECK(std::abs(p.value - moment(k)) < 1e-14);
        if (k <= 13) CHECK(p.err < 1e-13);  // Gauss half agrees too
    }
}

TEST_CASE("adaptive: reference integrals") {
    const auto r1 = quad::integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12, 1e-12);
    CHECK(r1.converged);
    CHECK(std::abs(r1.value - 2.0) < 1e-12);

    const auto r2 = quad::integrate_adaptive([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-13, 1e-13);
    CHECK(std::abs(r2.value - M_PI) < 1e-12);

    // integrable endpoint singularities (the rule never samples endpoints)
    const auto r3 = quad::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-11, 1e-11);
    CHECK(r3.converged);
    CHECK(std::abs(r3.value - 2.0) < 1e-10);

    const auto r4 = quad::integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 1e-11, 1e-11);
    CHECK(std::abs(r4.value + 1.0) < 1e-10);
}

TEST_CASE("adaptive: failure is reported, not hidden") {
    const auto r = quad::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                            1e-14, 1e-14, 8);
    CHECK_FALSE(r.converged);
    CHECK(r.abs_err > 1e-14);
    CHECK(std::abs(r.value - 2.0) < 0.1);  // best estimate still sane
}

TEST_CASE("adaptive: deterministic") {
    const auto f = [](double x) { return std::exp(-x) * std::cos(10.0 * x); };
    const auto a = quad::integrate_adaptive(f, 0.0, 20.0, 1e-12, 1e-12);
    const auto b = quad::integrate_adaptive(f, 0.0, 20.0, 1e-12, 1e-12);
    CHECK(a.value == b.value);
    CHECK(a.abs_err == b.abs_err);
    CHECK(a.subdivisions == b.subdivisions);
}
