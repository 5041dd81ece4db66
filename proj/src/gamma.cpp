// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/gamma.hpp"

#include <cmath>
#include <limits>

namespace besselbound {

namespace {

// lgamma_r keeps us reentrant; std::lgamma writes the global signgam.
double lgamma_threadsafe(double a, int* sign) {
    return ::lgamma_r(a, sign);
}

bool is_nonpositive_integer(double a) {
    return a <= 0.0 && a == std::floor(a);
}

}  // namespace

FnValue gamma_fn(double a) {
    if (!std::isfinite(a)) throw domain_error("gamma_fn: argument must be finite");
    if (is_nonpositive_integer(a)) throw domain_error("gamma_fn: pole at non-positive integer");
    const double v = std::tgamma(a);
    return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v)};
}

FnValue log_gamma(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw domain_error("log_gamma: requires a > 0");
    int sign = 0;
    const double v = lgamma_threadsafe(a, &sign);
    return {v, 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(v) + 1.0)};
}

double gamma_ratio(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw domain_error("gamma_ratio: requires p, q > 0");
    int sp = 0, sq = 0;
    return std::exp(lgamma_threadsafe(p, &sp) - lgamma_threadsafe(q, &sq));
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("beta_fn: requires a, b > 0");
    int s = 0;
    return std::exp(lgamma_threadsafe(a, &s) + lgamma_threadsafe(b, &s) -
                    lgamma_threadsafe(a + b, &s));
}

}  // namespace besselbound
