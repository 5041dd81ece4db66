// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_BOUNDS_HPP
#define BESSELBOUND_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "besselbound/fn_value.hpp"

namespace besselbound {

/// One analytic bound with its tag and strictness.
struct BoundEntry {
    std::string id;
    double value = 0.0;
    bool is_upper = false;
    bool strict = false;
    bool tightest = false;
};

/// Applicable bounds for a query; lower/upper carry the tightest of each side.
struct BoundReport {
    std::optional<double> lower;
    std::optional<double> upper;
    bool strict_lower = false;
    bool strict_upper = false;
    std::vector<BoundEntry> entries;
    std::string domain_note;
};

/// Root of K_nu(x) = alpha K_{nu-1}(x).
struct RootResult {
    double x_star = 0.0;
    double residual = 0.0;  // relative to K_nu(x_star)
    std::pair<double, double> bracket{0.0, 0.0};
};

// sqrt(pi) Gamma(nu+1/2) / Gamma(nu), nu > 0; computed via log-gamma.
double bound_m_const(double nu);
// 2 sqrt(pi) Gamma(nu+1/2) / ((1-beta^2)^{nu+1/2} Gamma(nu)).
double bound_n_const(double nu, double beta);

// Lower bound x^nu I_{nu+1}(x) on int_0^x t^nu I_nu dt (nu > -1/2 here: the
// comparable quadrature needs integrability at 0).
double int_i_lower(double nu, double x);

// Upper bound x^nu I_nu(x), valid for nu >= 1/2.
double int_i_upper_halfplus(double nu, double x);

// (1-gamma)^{-n} e^{-gamma x} I_(nu,0,n)(x), bounding the tilted tower.
double repeated_i_exp_bound(double nu, double gamma, int n, double x);

// (2(nu+n+1)/(2nu+n+1)) x^nu I_{nu+n+1}(x); real shift n >= 0.
double int_i_shifted_upper(double nu, double n, double x);

// prod_{k=1}^n (2nu+2k)/(2nu+k) x^nu I_{nu+n}(x), nu >= 0, n >= 1.
double repeated_i_product_upper(double nu, int n, double x);
// same with the (1-gamma)^{-n} e^{-gamma x} tilt factors, nu >= 1/2.
double repeated_i_exp_product_upper(double nu, double gamma, int n, double x);

// All applicable upper bounds for int_x^inf e^{beta t} t^nu K_nu dt.
BoundReport int_k_bounds(double nu, double beta, double x);

// Sandwich for I_nu L_{nu-1} - I_{nu-1} L_nu, nu > -1/2.
BoundReport struve_cross_bounds(double nu, double x);

/// K_{nu-1}(x) / K_nu(x); monotone in x with regime set by sign(nu - 1/2).
double k_ratio(double nu, double x);

/// Turanian K_nu^2 - K_{nu-1} K_{nu+1}.
double turanian(double nu, double x);

// Unique positive root of K_nu(x) = alpha K_{nu-1}(x), nu > 1/2, alpha > 1.
RootResult solve_k_ratio_root(double nu, double alpha);

// Diagnostics: analytic bound minus the integral it dominates; non-negative
// and unimodal on their domains.
double u_diag(double nu, double x);
FnValue u_diag_full(double nu, double x);
double v_diag(double nu, double beta, double x);
FnValue v_diag_full(double nu, double beta, double x);

// 1/x^2 - x^{nu-2} K_nu(x) / (2^{nu-1} Gamma(nu)), nu > 0.
double k_gap(double nu, double x);
// range report: lower 0 for all nu > 0, upper 1/(4(nu-1)) for nu > 1.
BoundReport k_gap_bounds(double nu);

// Envelope for x^nu K_nu(x): e^{-x} and constant caps plus the x K_1 refinement.
BoundReport xnu_k_envelope(double nu, double x);

// Lower and upper bounds for sqrt(2/pi) e^x K_0(x).
BoundReport k0_bounds(double x);

}  // namespace besselbound

#endif
