// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/struve.hpp"

#include <cmath>
#include <limits>

namespace besselbound {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

FnValue struve_l(double nu, double x) {
    if (!std::isfinite(nu) || !(nu > -1.5))
        throw domain_error("struve_l: requires nu > -3/2");
    if (!std::isfinite(x) || !(x > 0.0))
        throw domain_error("struve_l: requires x > 0");
    if (x > 695.0) {
        return {std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }

    // L_nu(x) = sum_k (x/2)^{nu+2k+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
    double term;
    const double lp = (nu + 1.0) * std::log(0.5 * x);
    if (std::abs(lp) < 680.0 && nu + 1.5 < 170.0) {
        term = std::pow(0.5 * x, nu + 1.0) / (std::tgamma(1.5) * std::tgamma(nu + 1.5));
    } else {
        int s = 0;
        term = std::exp(lp - ::lgamma_r(1.5, &s) - ::lgamma_r(nu + 1.5, &s));
    }

    const double q = 0.25 * x * x;
    double sum = term;
    double comp = 0.0;
    for (int k = 0; k < 4000; ++k) {
        term *= q / ((k + 1.5) * (k + nu + 1.5));
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (term < kEps * sum && k > 2) break;
    }
    return {sum, std::max(term, 4.0 * kEps * sum)};
}

}  // namespace besselbound
