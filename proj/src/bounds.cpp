// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "besselbound/bessel.hpp"
#include "besselbound/gamma.hpp"
#include "besselbound/integrals.hpp"

namespace besselbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kSqrtPi = std::sqrt(M_PI);

void check_x(double x, const char* who) {
    if (!std::isfinite(x) || !(x > 0.0)) throw domain_error(std::string(who) + ": requires x > 0");
}

void finalize(BoundReport* r) {
    double best_lo = -std::numeric_limits<double>::infinity();
    double best_up = std::numeric_limits<double>::infinity();
    const BoundEntry* lo = nullptr;
    const BoundEntry* up = nullptr;
    for (const BoundEntry& e : r->entries) {
        if (e.is_upper && e.value < best_up) {
            best_up = e.value;
            up = &e;
        }
        if (!e.is_upper && e.value > best_lo) {
            best_lo = e.value;
            lo = &e;
        }
    }
    for (BoundEntry& e : r->entries) e.tightest = (&e == lo || &e == up);
    if (lo) {
        r->lower = best_lo;
        r->strict_lower = lo->strict;
    }
    if (up) {
        r->upper = best_up;
        r->strict_upper = up->strict;
    }
}

}  // namespace

double bound_m_const(double nu) {
    if (!(nu > 0.0)) throw domain_error("bound_m_const: requires nu > 0");
    return kSqrtPi * gamma_ratio(nu + 0.5, nu);
}

double bound_n_const(double nu, double beta) {
    if (!(nu > 0.0)) throw domain_error("bound_n_const: requires nu > 0");
    if (!(std::abs(beta) < 1.0)) throw domain_error("bound_n_const: requires |beta| < 1");
    return 2.0 * kSqrtPi * gamma_ratio(nu + 0.5, nu) / std::pow(1.0 - beta * beta, nu + 0.5);
}

double int_i_lower(double nu, double x) {
    if (!(nu > -0.5)) throw domain_error("int_i_lower: requires nu > -1/2");
    check_x(x, "int_i_lower");
    return std::pow(x, nu) * bessel_i(nu + 1.0, x).value;
}

double int_i_upper_halfplus(double nu, double x) {
    if (!(nu >= 0.5)) throw domain_error("int_i_upper_halfplus: requires nu >= 1/2");
    check_x(x, "int_i_upper_halfplus");
    return std::pow(x, nu) * bessel_i(nu, x).value;
}

double repeated_i_exp_bound(double nu, double gamma, int n, double x) {
    if (!(nu >= 0.5)) throw domain_error("repeated_i_exp_bound: requires nu >= 1/2");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw domain_error("repeated_i_exp_bound: requires 0 <= gamma < 1");
    if (n < 0) throw domain_error("repeated_i_exp_bound: requires n >= 0");
    check_x(x, "repeated_i_exp_bound");
    const double tower = repeated_integral_i(nu, 0.0, n, x).value;
    return std::pow(1.0 - gamma, -n) * std::exp(-gamma * x) * tower;
}

double int_i_shifted_upper(double nu, double n, double x) {
    if (!(nu > -0.5)) throw domain_error("int_i_shifted_upper: requires nu > -1/2");
    if (!(n >= 0.0)) throw domain_error("int_i_shifted_upper: requires n >= 0");
    check_x(x, "int_i_shifted_upper");
    const double coeff = 2.0 * (nu + n + 1.0) / (2.0 * nu + n + 1.0);
    return coeff * std::pow(x, nu) * bessel_i(nu + n + 1.0, x).value;
}

namespace {
double order_product(double nu, int n) {
    double p = 1.0;
    for (int k = 1; k <= n; ++k) p *= (2.0 * nu + 2.0 * k) / (2.0 * nu + k);
    return p;
}
}  // namespace

double repeated_i_product_upper(double nu, int n, double x) {
    if (!(nu >= 0.0)) throw domain_error("repeated_i_product_upper: requires nu >= 0");
    if (n < 1) throw domain_error("repeated_i_product_upper: requires n >= 1");
    check_x(x, "repeated_i_product_upper");
    return order_product(nu, n) * std::pow(x, nu) * bessel_i(nu + n, x).value;
}

double repeated_i_exp_product_upper(double nu, double gamma, int n, double x) {
    if (!(nu >= 0.5)) throw domain_error("repeated_i_exp_product_upper: requires nu >= 1/2");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw domain_error("repeated_i_exp_product_upper: requires 0 <= gamma < 1");
    if (n < 1) throw domain_error("repeated_i_exp_product_upper: requires n >= 1");
    check_x(x, "repeated_i_exp_product_upper");
    return std::pow(1.0 - gamma, -n) * order_product(nu, n) * std::exp(-gamma * x) *
           std::pow(x, nu) * bessel_i(nu + n, x).value;
}

BoundReport int_k_bounds(double nu, double beta, double x) {
    if (!(beta > -1.0 && beta < 1.0)) throw domain_error("int_k_bounds: requires -1 < beta < 1");
    check_x(x, "int_k_bounds");

    BoundReport r;
    const double xnu_k = std::pow(x, nu) * bessel_k(nu, x).value;
    if (beta == 0.0) {
        r.entries.push_back(
            {"int_k_upper_next_order", std::pow(x, nu) * bessel_k(nu + 1.0, x).value, true, true, false});
        if (nu < 0.5) {
            r.entries.push_back({"int_k_upper_same_order", xnu_k, true, true, false});
            r.entries.push_back({"int_k_exp_upper_small_order", xnu_k, true, true, false});
        } else {
            r.entries.push_back({"int_k_upper_m_const", bound_m_const(nu) * xnu_k, true, false, false});
            r.entries.push_back(
                {"int_k_exp_upper_n_const", bound_n_const(nu, 0.0) * xnu_k, true, false, false});
        }
        r.domain_note = "beta = 0: order-shift bound plus the order-gated constants";
    } else {
        const double base = std::exp(beta * x) * xnu_k;
        if (nu < 0.5) {
            r.entries.push_back(
                {"int_k_exp_upper_small_order", base / (1.0 - std::abs(beta)), true, true, false});
            r.domain_note = "beta != 0, nu < 1/2";
        } else {
            r.entries.push_back(
                {"int_k_exp_upper_n_const", bound_n_const(nu, beta) * base, true, false, false});
            r.domain_note = "beta != 0, nu >= 1/2";
        }
    }
    finalize(&r);
    return r;
}

BoundReport struve_cross_bounds(double nu, double x) {
    if (!(nu > -0.5)) throw domain_error("struve_cross_bounds: requires nu > -1/2");
    check_x(x, "struve_cross_bounds");
    BoundReport r;
    const double a = std::pow(x, nu - 1.0) * bessel_i(nu + 1.0, x).value;
    const double pre = kSqrtPi * std::pow(2.0, nu - 1.0);
    const double lower = a / (pre * std::tgamma(nu + 0.5));
    const double upper = (nu + 1.0) * a / (pre * std::tgamma(nu + 1.5));
    r.entries.push_back({"struve_cross_lower", lower, false, true, false});
    r.entries.push_back({"struve_cross_upper", upper, true, true, false});
    r.domain_note = "sandwich for I_nu L_{nu-1} - I_{nu-1} L_nu";
    finalize(&r);
    return r;
}

double k_ratio(double nu, double x) {
    check_x(x, "k_ratio");
    // scaled values: the e^{-x} factors cancel exactly
    return bessel_k_scaled(nu - 1.0, x).value / bessel_k_scaled(nu, x).value;
}

double turanian(double nu, double x) {
    check_x(x, "turanian");
    const double knu = bessel_k_scaled(nu, x).value;
    const double km1 = bessel_k_scaled(nu - 1.0, x).value;
    const double kp1 = bessel_k_scaled(nu + 1.0, x).value;
    const double e = std::exp(-x);
    return (knu * knu - km1 * kp1) * e * e;
}

RootResult solve_k_ratio_root(double nu, double alpha) {
    if (!(nu > 0.5)) throw domain_error("solve_k_ratio_root: requires nu > 1/2");
    if (!(alpha > 1.0)) throw domain_error("solve_k_ratio_root: requires alpha > 1");

    const auto g = [nu, alpha](double x) {
        return bessel_k_scaled(nu, x).value - alpha * bessel_k_scaled(nu - 1.0, x).value;
    };

    // expand from [1e-6, 1] until the sign change is straddled
    double lo = 1e-6;
    double hi = 1.0;
    double glo = g(lo);
    double ghi = g(hi);
    int guard = 0;
    while (ghi > 0.0 && guard++ < 60) {
        lo = hi;
        glo = ghi;
        hi *= 2.0;
        ghi = g(hi);
    }
    if (!(glo > 0.0) || !(ghi < 0.0))
        throw domain_error("solve_k_ratio_root: failed to bracket a sign change");

    RootResult out;
    out.bracket = {lo, hi};
    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, a); ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if (gm > 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    out.x_star = 0.5 * (a + b);
    const double knu = bessel_k_scaled(nu, out.x_star).value;
    out.residual = std::abs(knu - alpha * bessel_k_scaled(nu - 1.0, out.x_star).value) / knu;
    return out;
}

FnValue u_diag_full(double nu, double x) {
    if (!(nu > 0.5)) throw domain_error("u_diag: requires nu > 1/2");
    check_x(x, "u_diag");
    const FnValue k = bessel_k(nu, x);
    const double bound = bound_m_const(nu) * std::pow(x, nu) * k.value;
    const QuadratureResult q = integral_k_exp(nu, 0.0, x, 1e-10);
    const double v = bound - q.value;
    const double err = q.abs_err + bound_m_const(nu) * std::pow(x, nu) * k.abs_err +
                       4.0 * kEps * std::abs(bound);
    return {v, err};
}

double u_diag(double nu, double x) { return u_diag_full(nu, x).value; }

FnValue v_diag_full(double nu, double beta, double x) {
    if (!(nu > 0.5)) throw domain_error("v_diag: requires nu > 1/2");
    if (!(beta > 0.0 && beta < 1.0)) throw domain_error("v_diag: requires 0 < beta < 1");
    check_x(x, "v_diag");
    const FnValue k = bessel_k(nu, x);
    const double w = bound_n_const(nu, beta) * std::exp(beta * x) * std::pow(x, nu);
    const double bound = w * k.value;
    const QuadratureResult q = integral_k_exp(nu, beta, x, 1e-10);
    const double v = bound - q.value;
    return {v, q.abs_err + w * k.abs_err + 4.0 * kEps * std::abs(bound)};
}

double v_diag(double nu, double beta, double x) { return v_diag_full(nu, beta, x).value; }

double k_gap(double nu, double x) {
    if (!(nu > 0.0)) throw domain_error("k_gap: requires nu > 0");
    check_x(x, "k_gap");
    const double k = bessel_k(nu, x).value;
    return 1.0 / (x * x) -
           std::pow(x, nu - 2.0) * k / (std::pow(2.0, nu - 1.0) * std::tgamma(nu));
}

BoundReport k_gap_bounds(double nu) {
    if (!(nu > 0.0)) throw domain_error("k_gap_bounds: requires nu > 0");
    BoundReport r;
    r.entries.push_back({"k_gap_positive", 0.0, false, true, false});
    if (nu > 1.0) {
        r.entries.push_back({"k_gap_upper", 1.0 / (4.0 * (nu - 1.0)), true, false, false});
        r.domain_note = "upper attained only in the x -> 0 limit";
    } else {
        r.domain_note = "only the positivity floor applies for 0 < nu <= 1";
    }
    finalize(&r);
    return r;
}

BoundReport xnu_k_envelope(double nu, double x) {
    if (!(nu > 0.0)) throw domain_error("xnu_k_envelope: requires nu > 0");
    check_x(x, "xnu_k_envelope");
    BoundReport r;
    const double c = std::pow(2.0, nu - 1.0) * std::tgamma(nu);
    // x^nu K_nu e^x is increasing in x only when K_nu >= K_{nu-1}, so the
    // e^{-x} lower holds for nu >= 1/2 (equality throughout at nu = 1/2).
    if (nu >= 0.5) {
        r.entries.push_back({"k_envelope_lower", c * std::exp(-x), false, nu > 0.5, false});
    }
    if (nu >= 1.0) {
        r.entries.push_back(
            {"k_envelope_refined_lower", c * x * bessel_k(1.0, x).value, false, false, false});
    }
    r.entries.push_back({"k_envelope_upper", c, true, true, false});
    r.domain_note = (nu >= 1.0)   ? "refined lower active (equality at nu = 1)"
                    : (nu >= 0.5) ? "refined lower needs nu >= 1"
                                  : "only the constant cap applies below nu = 1/2";
    finalize(&r);
    return r;
}

BoundReport k0_bounds(double x) {
    check_x(x, "k0_bounds");
    BoundReport r;
    const double gr = std::exp(log_gamma(x + 0.5).value - log_gamma(x + 1.0).value);
    r.entries.push_back({"k0_gamma_ratio_lower", gr, false, true, false});
    r.entries.push_back({"k0_sqrt_lower", 1.0 / std::sqrt(x + 0.5), false, true, false});
    r.entries.push_back({"k0_luke_lower", 8.0 * std::sqrt(x) / (8.0 * x + 1.0), false, true, false});
    r.entries.push_back({"k0_sqrt_upper", 1.0 / std::sqrt(x), true, true, false});
    r.entries.push_back(
        {"k0_luke_upper", (16.0 * x + 7.0) / ((16.0 * x + 9.0) * std::sqrt(x)), true, true, false});
    r.domain_note = "bounds on sqrt(2/pi) e^x K_0(x)";
    finalize(&r);
    return r;
}

}  // namespace besselbound
