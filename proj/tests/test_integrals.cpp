// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "besselbound/bessel.hpp"
#include "besselbound/gamma.hpp"
#include "besselbound/integrals.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace besselbound;

namespace {
double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
}  // namespace

TEST_CASE("integral_i_exp: frozen references") {
    for (const auto& r : refs::kIntIExp) {
        const auto q = integral_i_exp(r.a, r.b, r.c);
        CHECK(q.converged);
        CHECK_MESSAGE(rel_diff(q.value, r.value) < 1e-9, "nu=", r.a, " beta=", r.b, " x=", r.c);
    }
}

TEST_CASE("integral_i_exp: small-x leading order and simpson oracle") {
    // orders with a vanishing integrand at 0, where plain Simpson is safe
    for (double nu : {0.5, 2.0}) {
        for (double x : {0.5, 3.0}) {
            const auto q = integral_i_exp(nu, 0.0, x);
            const double ref = oracles::simpson_oracle(
                [nu](double t) { return t <= 0.0 ? 0.0 : std::pow(t, nu) * oracles::i_series_oracle(nu, t); },
                0.0, x, 1e-12);
            CHECK_MESSAGE(rel_diff(q.value, ref) < 1e-9, "nu=", nu, " x=", x);
        }
    }
    // term-by-term series integration gives int ~ sum_k (x/2)^{nu+2k} x^{nu+1} / ...
    const double nu = 0.5;
    const double x = 1e-3;
    const auto q = integral_i_exp(nu, 0.0, x);
    const double lead = std::pow(0.5 * x, nu) / gamma_fn(nu + 1.0).value * std::pow(x, nu + 1.0) /
                        (2.0 * nu + 1.0);
    CHECK(rel_diff(q.value, lead) < 1e-5);
}

TEST_CASE("integral_k_exp: frozen references") {
    for (const auto& r : refs::kIntKExp) {
        const auto q = integral_k_exp(r.a, r.b, r.c);
        CHECK(q.converged);
        CHECK(q.truncation_point > r.c);
        CHECK_MESSAGE(rel_diff(q.value, r.value) < 1e-9, "nu=", r.a, " beta=", r.b, " x=", r.c);
    }
}

TEST_CASE("integral_k_exp: spherical closed form") {
    // int_x^inf t^{1/2} K_{1/2} dt = x^{1/2} K_{1/2}(x)
    for (double x : {0.5, 1.0, 4.0}) {
        const auto q = integral_k_exp(0.5, 0.0, x);
        const double exact = std::sqrt(x) * bessel_k(0.5, x).value;
        CHECK(rel_diff(q.value, exact) < 1e-10);
    }
}

TEST_CASE("integral_k_exp: half-line consistency with the definite oracle") {
    // split the half line at 1e-4; head + tail must reproduce the closed form
    for (double nu : {0.5, 1.0, 2.0}) {
        const double x = 1e-4;
        const auto tail = integral_k_exp(nu, 0.0, x, 1e-9);
        const auto head = quad::integrate_adaptive(
            [nu](double t) { return std::pow(t, nu) * bessel_k(nu, t).value; }, 0.0, x, 1e-12, 1e-9);
        const auto oracle = definite_k_oracle(nu, 0.0);
        REQUIRE(oracle.has_half_line);
        CHECK(rel_diff(tail.value + head.value, oracle.half_line.value) < 1e-7);
    }
}

TEST_CASE("definite_k_oracle: closed-form anchors") {
    const auto a = definite_k_oracle(0.5, 0.0);
    CHECK(rel_diff(a.full_line.value, std::sqrt(2.0 * M_PI)) < 1e-13);
    CHECK(rel_diff(a.half_line.value, 0.5 * std::sqrt(2.0 * M_PI)) < 1e-13);
    const auto b = definite_k_oracle(1.0, 0.0);
    CHECK(rel_diff(b.half_line.value, 0.5 * M_PI) < 1e-13);
    const auto c = definite_k_oracle(0.5, 0.6);
    CHECK(rel_diff(c.full_line.value, std::sqrt(M_PI) * std::sqrt(2.0) / 0.64) < 1e-13);
    CHECK_FALSE(c.has_half_line);
    CHECK_THROWS_AS(definite_k_oracle(-0.6, 0.0), domain_error);
    CHECK_THROWS_AS(definite_k_oracle(1.0, 1.0), domain_error);
}

TEST_CASE("repeated_integral_i: frozen references and structure") {
    for (const auto& r : refs::kTower) {
        const auto q = repeated_integral_i(r.a, r.b, static_cast<int>(r.c), r.d);
        CHECK(q.converged);
        CHECK_MESSAGE(rel_diff(q.value, r.value) < 1e-9, "nu=", r.a, " gamma=", r.b, " n=", r.c,
                      " x=", r.d);
    }
    // depth 0 is the integrand itself
    const auto q0 = repeated_integral_i(1.5, 0.3, 0, 2.0);
    CHECK(rel_diff(q0.value, std::exp(-0.6) * std::pow(2.0, 1.5) * bessel_i(1.5, 2.0).value) < 1e-13);
    // depth 1 at gamma = 0 coincides with integral_i_exp
    const auto q1 = repeated_integral_i(0.5, 0.0, 1, 1.0);
    const auto q1b = integral_i_exp(0.5, 0.0, 1.0);
    CHECK(rel_diff(q1.value, q1b.value) < 1e-9);
    CHECK_THROWS_AS(repeated_integral_i(1.0, 0.0, 7, 1.0), domain_error);
    CHECK_THROWS_AS(repeated_integral_i(-0.1, 0.0, 1, 1.0), domain_error);
    CHECK_THROWS_AS(repeated_integral_i(1.0, 1.0, 1, 1.0), domain_error);
}

TEST_CASE("repeated_integral_i: tower consistency across depths") {
    // the (n+1)-level value equals the cumulative integral of the n-level one
    for (int n : {0, 1, 2}) {
        const double nu = 1.0, g = 0.25, x = 2.0;
        const auto direct = repeated_integral_i(nu, g, n + 1, x);
        const auto cumulative = quad::integrate_adaptive(
            [nu, g, n](double y) { return repeated_integral_i(nu, g, n, y, 1e-11).value; }, 0.0, x,
            1e-9, 1e-9, 600);
        CHECK(rel_diff(direct.value, cumulative.value) < 1e-7);
    }
}

TEST_CASE("integral_i_shifted: frozen references") {
    for (const auto& r : refs::kIntIShifted) {
        const auto q = integral_i_shifted(r.a, r.b, r.c);
        CHECK(q.converged);
        CHECK_MESSAGE(rel_diff(q.value, r.value) < 1e-9, "nu=", r.a, " n=", r.b, " x=", r.c);
    }
    // n = 0 reduces to the plain integral
    const auto a = integral_i_shifted(0.75, 0.0, 2.0);
    const auto b = integral_i_exp(0.75, 0.0, 2.0);
    CHECK(rel_diff(a.value, b.value) < 1e-9);
}

TEST_CASE("struve_m: frozen references") {
    for (const auto& r : refs::kStruveM) {
        const FnValue m = struve_m(r.a, r.b);
        CHECK_MESSAGE(rel_diff(m.value, r.value) < 2e-9, "nu=", r.a, " x=", r.b);
        CHECK(std::abs(m.value - r.value) <= std::max(m.abs_err * 4.0, 1e-13 * std::abs(r.value)));
    }
    // half-integer closed forms
    for (double x : {0.5, 12.0}) {
        CHECK(rel_diff(struve_m(0.5, x).value, std::sqrt(2.0 / (M_PI * x)) * std::expm1(-x)) < 1e-13);
        CHECK(rel_diff(struve_m(-0.5, x).value, -std::sqrt(2.0 / (M_PI * x)) * std::exp(-x)) < 1e-13);
    }
}

TEST_CASE("struve_bessel_cross: frozen references") {
    for (const auto& r : refs::kCrossTerm) {
        const FnValue d = struve_bessel_cross(r.a, r.b);
        CHECK_MESSAGE(rel_diff(d.value, r.value) < 5e-10, "nu=", r.a, " x=", r.b);
    }
}

TEST_CASE("closed_form_int_i: equivalence with quadrature") {
    for (double nu : {-0.25, 0.0, 0.5, 1.0, 2.0, 5.0}) {
        for (double x : {0.1, 1.0, 5.0, 20.0}) {
            const auto q = integral_i_exp(nu, 0.0, x);
            const FnValue c = closed_form_int_i(nu, x);
            CHECK_MESSAGE(rel_diff(q.value, c.value) < 1e-8, "nu=", nu, " x=", x);
        }
    }
    // x -> 0 limit of the cross term
    CHECK(std::abs(closed_form_int_i(1.0, 1e-6).value) < 1e-12);
}

TEST_CASE("integrals: additivity across a split point") {
    const double nu = 0.75, x1 = 1.5, x2 = 6.0;
    const auto whole = integral_i_exp(nu, 0.25, x2);
    const auto left = integral_i_exp(nu, 0.25, x1);
    const auto right = quad::integrate_adaptive(
        [nu](double t) { return std::exp(0.25 * t) * std::pow(t, nu) * bessel_i(nu, t).value; }, x1,
        x2, 1e-11, 1e-11);
    CHECK(std::abs(whole.value - (left.value + right.value)) <
          10.0 * (whole.abs_err + left.abs_err + right.abs_err) + 1e-12);
}

TEST_CASE("integrals: domain errors") {
    CHECK_THROWS_AS(integral_i_exp(-0.5, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(integral_i_exp(1.0, 1.5, 1.0), domain_error);
    CHECK_THROWS_AS(integral_i_exp(1.0, 0.0, -1.0), domain_error);
    CHECK_THROWS_AS(integral_k_exp(1.0, -1.0, 1.0), domain_error);
    CHECK_THROWS_AS(integral_i_shifted(1.0, -0.5, 1.0), domain_error);
    CHECK_THROWS_AS(struve_bessel_cross(-0.5, 1.0), domain_error);
    CHECK_THROWS_AS(closed_form_int_i(1.0, 0.0), domain_error);
    CHECK_THROWS_AS(struve_m(-1.5, 1.0), domain_error);
}
