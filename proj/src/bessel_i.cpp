// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/bessel.hpp"

#include <cmath>
#include <limits>

namespace besselbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SeriesSum {
    double value;
    double abs_err;
};

// First tail term (x/2)^{t+2k0} / (k0! Gamma(t+k0+1)); t+k0+1 > 0.25 here.
double tail_start_term(double t, int k0, double x) {
    const double g = t + k0 + 1.0;
    double kf = 1.0;
    for (int k = 2; k <= k0; ++k) kf *= k;
    const double lp = (t + 2.0 * k0) * std::log(0.5 * x);
    if (std::abs(lp) < 690.0 && g < 170.0) {
        return std::pow(0.5 * x, t + 2.0 * k0) / (kf * std::tgamma(g));
    }
    int sign = 0;
    return std::exp(lp - ::lgamma_r(g, &sign) - std::log(kf));
}

// I_t(x) = sum_k (x/2)^{t+2k} / (k! Gamma(t+k+1)).  For t > -1 every term is
// positive and the sum is cancellation-free at any x below the overflow
// edge.  For -2 < t < -1 the first one or two terms carry Gamma of a
// negative argument; they are evaluated individually and the positive tail
// is accumulated with compensation.
SeriesSum i_series(double t, double x) {
    const double q = 0.25 * x * x;
    int k0 = 0;
    while (t + k0 + 1.0 <= 0.25) ++k0;

    double head = 0.0;
    double head_scale = 0.0;
    double kf = 1.0;
    for (int k = 0; k < k0; ++k) {
        if (k >= 2) kf *= k;
        const double term = std::pow(0.5 * x, t + 2.0 * k) / (kf * std::tgamma(t + k + 1.0));
        head += term;
        head_scale = std::max(head_scale, std::abs(term));
    }

    double term = tail_start_term(t, k0, x);
    double sum = term;
    double comp = 0.0;
    double max_term = term;
    double last = term;
    for (int k = k0; k < 4000; ++k) {
        last *= q / ((k + 1.0) * (t + k + 1.0));
        const double y = last - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        max_term = std::max(max_term, last);
        if (last < kEps * sum && k > k0 + 2) break;
    }

    const double total = head + sum;
    const double err =
        std::max(last, 4.0 * kEps * std::abs(total)) + 2.0 * kEps * (head_scale + max_term);
    return {total, err};
}

// Scaled large-x expansion: e^{-x} I_t(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(t)/x^k.
// Returns false when the smallest term cannot reach a 1e-13 target.
bool i_asym_scaled(double t, double x, SeriesSum* out) {
    const double mu = 4.0 * t * t;
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev && std::abs(term) > 1e-13 * std::abs(sum)) return false;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    if (std::abs(term) > 1e-13 * std::abs(sum)) return false;
    const double pre = 1.0 / std::sqrt(2.0 * M_PI * x);
    out->value = pre * sum;
    out->abs_err = pre * (std::abs(term) + 4.0 * kEps * std::abs(sum));
    return true;
}

void check_i_domain(double nu, double x) {
    if (!std::isfinite(nu) || !(nu > -1.0))
        throw domain_error("bessel_i: requires nu > -1");
    if (!std::isfinite(x) || !(x > 0.0))
        throw domain_error("bessel_i: requires x > 0");
}

}  // namespace

FnValue bessel_i(double nu, double x) {
    check_i_domain(nu, x);
    if (x > 695.0) {
        // beyond the double range; bessel_i_scaled stays finite
        return {std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    const SeriesSum s = i_series(nu, x);
    return {s.value, s.abs_err};
}

FnValue bessel_i_scaled(double nu, double x) {
    check_i_domain(nu, x);
    if (x >= 45.0) {
        SeriesSum a;
        if (i_asym_scaled(nu, x, &a)) return {a.value, a.abs_err};
    }
    if (x > 695.0)
        throw domain_error("bessel_i_scaled: order too large for this x");
    const SeriesSum s = i_series(nu, x);
    const double e = std::exp(-x);
    return {e * s.value, e * s.abs_err + 4.0 * kEps * std::abs(e * s.value)};
}

namespace detail {

FnValue bessel_i_series_any_order(double t, double x) {
    if (!std::isfinite(t) || !std::isfinite(x) || !(x > 0.0))
        throw domain_error("bessel_i_series_any_order: requires finite t and x > 0");
    if (t <= 0.0 && t == std::floor(t)) t = -t;  // I_{-n} = I_n
    const SeriesSum s = i_series(t, x);
    return {s.value, s.abs_err};
}

}  // namespace detail

}  // namespace besselbound
