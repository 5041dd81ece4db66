// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/deriv.hpp"

#include <cmath>

#include "besselbound/bessel.hpp"
#include "besselbound/fn_value.hpp"

namespace besselbound {

namespace {

double rel_residual(double fd, double rhs) {
    return std::abs(fd - rhs) / std::max(std::abs(rhs), 1e-300);
}

template <class F>
double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

DerivResiduals deriv_checks(double nu, double x) {
    if (!(nu > 0.0)) throw domain_error("deriv_checks: requires nu > 0");
    if (!(x > 0.0)) throw domain_error("deriv_checks: requires x > 0");
    const double h = 1e-5 * std::max(1.0, x);

    const auto xnu_i = [nu](double t) { return std::pow(t, nu) * bessel_i(nu, t).value; };
    const auto xnu_k = [nu](double t) { return std::pow(t, nu) * bessel_k(nu, t).value; };
    const auto k = [nu](double t) { return bessel_k(nu, t).value; };

    const double kd = central_diff(k, x, h);
    const double knu = bessel_k(nu, x).value;
    const double km1 = bessel_k(nu - 1.0, x).value;
    const double kp1 = bessel_k(nu + 1.0, x).value;

    DerivResiduals r;
    r.x_nu_i = rel_residual(central_diff(xnu_i, x, h),
                            std::pow(x, nu) * bessel_i(nu - 1.0, x).value);
    r.x_nu_k = rel_residual(central_diff(xnu_k, x, h), -std::pow(x, nu) * km1);
    r.k_symmetric = rel_residual(kd, -0.5 * (kp1 + km1));
    r.k_lower = rel_residual(kd, -km1 - (nu / x) * knu);
    r.k_upper = rel_residual(kd, -kp1 + (nu / x) * knu);
    return r;
}

}  // namespace besselbound
