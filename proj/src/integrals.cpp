// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/integrals.hpp"

#include <cmath>
#include <limits>

#include "besselbound/bessel.hpp"
#include "besselbound/gamma.hpp"
#include "besselbound/struve.hpp"

namespace besselbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kSqrtPi = std::sqrt(M_PI);

void check_positive_x(double x, const char* who) {
    if (!std::isfinite(x) || !(x > 0.0)) throw domain_error(std::string(who) + ": requires x > 0");
}

void check_tol(double tol, const char* who) {
    if (!(tol > 0.0)) throw domain_error(std::string(who) + ": requires tol > 0");
}

// e^{beta t} t^nu K_nu(t), routed through the scaled K so large t never
// underflows prematurely.
double k_integrand(double nu, double beta, double t) {
    const double l = (beta - 1.0) * t + nu * std::log(t);
    if (l < -740.0) return 0.0;
    return std::exp(l) * bessel_k_scaled(nu, t).value;
}

// Certified upper bound on int_T^inf e^{beta t} t^nu K_nu(t) dt.
double k_tail_bound(double nu, double beta, double T) {
    if (beta == 0.0) {
        // tail < T^nu K_{nu+1}(T), valid for every real order
        const double l = nu * std::log(T) - T;
        if (l < -740.0) return 0.0;
        return std::exp(l) * bessel_k_scaled(nu + 1.0, T).value;
    }
    const double g = k_integrand(nu, beta, T);
    if (nu < 0.5) return g / (1.0 - std::abs(beta));
    const double c = 2.0 * kSqrtPi * gamma_ratio(nu + 0.5, nu) /
                     std::pow(1.0 - beta * beta, nu + 0.5);
    return c * g;
}

}  // namespace

QuadratureResult integral_i_exp(double nu, double beta, double x, double tol) {
    if (!(nu > -0.5)) throw domain_error("integral_i_exp: requires nu > -1/2");
    if (!(beta <= 1.0)) throw domain_error("integral_i_exp: requires beta <= 1");
    check_positive_x(x, "integral_i_exp");
    check_tol(tol, "integral_i_exp");

    const auto f = [nu, beta](double t) {
        return std::exp(beta * t) * std::pow(t, nu) * bessel_i(nu, t).value;
    };
    QuadratureResult r;
    if (nu < 0.5) {
        // t = s^2 softens the t^{2 nu} endpoint behavior
        const auto g = [&f](double s) { return 2.0 * s * f(s * s); };
        r = quad::integrate_adaptive(g, 0.0, std::sqrt(x), tol, tol);
    } else {
        r = quad::integrate_adaptive(f, 0.0, x, tol, tol);
    }
    return r;
}

QuadratureResult integral_k_exp(double nu, double beta, double x, double tol) {
    if (!(beta > -1.0 && beta < 1.0)) throw domain_error("integral_k_exp: requires -1 < beta < 1");
    check_positive_x(x, "integral_k_exp");
    check_tol(tol, "integral_k_exp");

    const auto f = [nu, beta](double t) { return k_integrand(nu, beta, t); };

    // cheap certified under-estimate of the integral for the relative goal
    double T = std::max(std::max(2.0 * x, 30.0 + 2.0 * std::max(nu, 0.0)), x + 5.0);
    const double quick = quad::gk15(f, x, std::min(T, x + 5.0)).value;
    const double tail_target = 0.5 * std::max(tol, tol * quick);

    while (k_tail_bound(nu, beta, T) > tail_target && T < 1e6) T *= 2.0;
    const double tail = k_tail_bound(nu, beta, T);

    QuadratureResult r = quad::integrate_adaptive(f, x, T, tail_target, 0.5 * tol, 4000);
    r.truncation_point = T;
    r.abs_err += tail;
    r.converged = r.converged && tail <= tail_target;
    return r;
}

QuadratureResult repeated_integral_i(double nu, double gamma, int n, double x, double tol) {
    if (!(nu >= 0.0)) throw domain_error("repeated_integral_i: requires nu >= 0");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw domain_error("repeated_integral_i: requires 0 <= gamma < 1");
    if (n < 0) throw domain_error("repeated_integral_i: requires n >= 0");
    if (n > kMaxTowerDepth) throw domain_error("repeated_integral_i: unsupported depth (max 6)");
    check_positive_x(x, "repeated_integral_i");
    check_tol(tol, "repeated_integral_i");

    if (n == 0) {
        const FnValue iv = bessel_i(nu, x);
        const double w = std::exp(-gamma * x) * std::pow(x, nu);
        QuadratureResult r;
        r.value = w * iv.value;
        r.abs_err = w * iv.abs_err + 4.0 * kEps * std::abs(r.value);
        return r;
    }

    double fact = 1.0;
    for (int k = 2; k < n; ++k) fact *= k;
    const auto f = [nu, gamma, n, fact, x](double y) {
        const double kern = std::pow(x - y, n - 1) / fact;
        return kern * std::exp(-gamma * y) * std::pow(y, nu) * bessel_i(nu, y).value;
    };
    if (nu < 0.5) {
        const auto g = [&f](double s) { return 2.0 * s * f(s * s); };
        return quad::integrate_adaptive(g, 0.0, std::sqrt(x), tol, tol);
    }
    return quad::integrate_adaptive(f, 0.0, x, tol, tol);
}

QuadratureResult integral_i_shifted(double nu, double n, double x, double tol) {
    if (!(nu > -0.5)) throw domain_error("integral_i_shifted: requires nu > -1/2");
    if (!(n >= 0.0)) throw domain_error("integral_i_shifted: requires n >= 0");
    check_positive_x(x, "integral_i_shifted");
    check_tol(tol, "integral_i_shifted");

    const auto f = [nu, n](double t) {
        return std::pow(t, nu) * bessel_i(nu + n, t).value;
    };
    if (2.0 * nu + n < 1.0) {
        const auto g = [&f](double s) { return 2.0 * s * f(s * s); };
        return quad::integrate_adaptive(g, 0.0, std::sqrt(x), tol, tol);
    }
    return quad::integrate_adaptive(f, 0.0, x, tol, tol);
}

FnValue struve_m(double nu, double x) {
    if (!(nu > -1.5)) throw domain_error("struve_m: requires nu > -3/2");
    check_positive_x(x, "struve_m");

    // half-integer closed forms
    if (std::abs(nu - 0.5) <= 1e-12) {
        const double v = std::sqrt(2.0 / (M_PI * x)) * std::expm1(-x);
        return {v, 8.0 * kEps * std::abs(v)};
    }
    if (std::abs(nu + 0.5) <= 1e-12) {
        const double v = -std::sqrt(2.0 / (M_PI * x)) * std::exp(-x);
        return {v, 8.0 * kEps * std::abs(v)};
    }

    if (nu <= -0.4) {
        // step down from orders where the direct routes apply:
        // M_{s-1} = M_{s+1} + (2s/x) M_s + (x/2)^s / (sqrt(pi) Gamma(s+3/2))
        const double s = nu + 1.0;
        const FnValue up2 = struve_m(nu + 2.0, x);
        const FnValue up1 = struve_m(nu + 1.0, x);
        const double inhom = std::pow(0.5 * x, s) / (kSqrtPi * std::tgamma(s + 1.5));
        const double v = up2.value + (2.0 * s / x) * up1.value + inhom;
        const double err = up2.abs_err + std::abs(2.0 * s / x) * up1.abs_err +
                           8.0 * kEps * (std::abs(up2.value) +
                                         std::abs(2.0 * s / x * up1.value) + inhom);
        return {v, err};
    }

    if (x <= 8.0) {
        const FnValue l = struve_l(nu, x);
        const FnValue i = detail::bessel_i_series_any_order(nu, x);
        const double v = l.value - i.value;
        return {v, l.abs_err + i.abs_err + 2.0 * kEps * (std::abs(l.value) + std::abs(i.value))};
    }

    // integral representation; the endpoint weight (1-u^2)^{nu-1/2} is tamed
    // by a power substitution near u = 1
    const double expo = nu - 0.5;
    const auto phi = [x, expo](double u) {
        return std::exp(-x * u) * std::pow(1.0 - u * u, expo);
    };
    const QuadratureResult j1 = quad::integrate_adaptive(phi, 0.0, 0.75, 1e-280, 1e-13);
    int p = 1;
    if (nu < 0.5) p = static_cast<int>(std::ceil(2.0 / (nu + 0.5)));
    const double zmax = std::pow(0.25, 1.0 / p);
    const auto phi2 = [x, expo, p](double z) {
        const double v = std::pow(z, p);  // v = 1 - u
        return std::exp(-x * (1.0 - v)) * std::pow(v * (2.0 - v), expo) * p *
               std::pow(z, p - 1);
    };
    const QuadratureResult j2 =
        quad::integrate_adaptive(phi2, 0.0, zmax, 1e-280 + 1e-16 * j1.value, 1e-13);
    const double j = j1.value + j2.value;
    const double pre = -2.0 * std::pow(0.5 * x, nu) / (kSqrtPi * std::tgamma(nu + 0.5));
    const double v = pre * j;
    const double err = std::abs(pre) * (j1.abs_err + j2.abs_err) + 8.0 * kEps * std::abs(v);
    return {v, err};
}

FnValue struve_bessel_cross(double nu, double x) {
    if (!(nu > -0.5)) throw domain_error("struve_bessel_cross: requires nu > -1/2");
    check_positive_x(x, "struve_bessel_cross");

    if (x <= 8.0) {
        const FnValue inu = detail::bessel_i_series_any_order(nu, x);
        const FnValue inum1 = detail::bessel_i_series_any_order(nu - 1.0, x);
        const FnValue lnu = struve_l(nu, x);
        const FnValue lnum1 = struve_l(nu - 1.0, x);
        const double t1 = inu.value * lnum1.value;
        const double t2 = inum1.value * lnu.value;
        const double v = t1 - t2;
        const double err = std::abs(inu.value) * lnum1.abs_err + std::abs(lnum1.value) * inu.abs_err +
                           std::abs(inum1.value) * lnu.abs_err + std::abs(lnu.value) * inum1.abs_err +
                           4.0 * kEps * (std::abs(t1) + std::abs(t2));
        return {v, err};
    }

    // I_nu M_{nu-1} - I_{nu-1} M_nu; same identity, no exponential cancellation
    const FnValue inu = detail::bessel_i_series_any_order(nu, x);
    const FnValue inum1 = detail::bessel_i_series_any_order(nu - 1.0, x);
    const FnValue mnu = struve_m(nu, x);
    const FnValue mnum1 = struve_m(nu - 1.0, x);
    const double t1 = inu.value * mnum1.value;
    const double t2 = inum1.value * mnu.value;
    const double v = t1 - t2;
    const double err = std::abs(inu.value) * mnum1.abs_err + std::abs(mnum1.value) * inu.abs_err +
                       std::abs(inum1.value) * mnu.abs_err + std::abs(mnu.value) * inum1.abs_err +
                       4.0 * kEps * (std::abs(t1) + std::abs(t2));
    return {v, err};
}

FnValue closed_form_int_i(double nu, double x) {
    if (!(nu > -0.5)) throw domain_error("closed_form_int_i: requires nu > -1/2");
    check_positive_x(x, "closed_form_int_i");
    const FnValue d = struve_bessel_cross(nu, x);
    const double pre = kSqrtPi * std::pow(2.0, nu - 1.0) * std::tgamma(nu + 0.5) * x;
    return {pre * d.value, std::abs(pre) * d.abs_err + 4.0 * kEps * std::abs(pre * d.value)};
}

DefiniteKValues definite_k_oracle(double nu, double beta) {
    if (!(nu > -0.5)) throw domain_error("definite_k_oracle: requires nu > -1/2");
    if (!(std::abs(beta) < 1.0)) throw domain_error("definite_k_oracle: requires |beta| < 1");
    DefiniteKValues out;
    const double g = std::tgamma(nu + 0.5);
    const double full = kSqrtPi * g * std::pow(2.0, nu) / std::pow(1.0 - beta * beta, nu + 0.5);
    out.full_line = {full, 8.0 * kEps * full};
    if (beta == 0.0) {
        out.has_half_line = true;
        const double half = kSqrtPi * g * std::pow(2.0, nu - 1.0);
        out.half_line = {half, 8.0 * kEps * half};
    }
    return out;
}

}  // namespace besselbound
