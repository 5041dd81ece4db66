// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_INTEGRALS_HPP
#define BESSELBOUND_INTEGRALS_HPP

#include "besselbound/fn_value.hpp"
#include "besselbound/quadrature.hpp"

namespace besselbound {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kMaxTowerDepth = 6;

// int_0^x e^{beta t} t^nu I_nu(t) dt.  nu > -1/2 (integrable at 0), beta <= 1.
QuadratureResult integral_i_exp(double nu, double beta, double x, double tol = kDefaultTol);

// int_x^inf e^{beta t} t^nu K_nu(t) dt.  -1 < beta < 1; the truncation point
// is certified by the analytic tail bounds, so the discarded tail is below
// half the requested tolerance.
QuadratureResult integral_k_exp(double nu, double beta, double x, double tol = kDefaultTol);

// n-fold repeated integral of e^{-gamma t} t^nu I_nu(t) from 0, evaluated as
// a single weighted integral with the (x-y)^{n-1}/(n-1)! kernel.
// nu >= 0, 0 <= gamma < 1, 0 <= n <= kMaxTowerDepth.
QuadratureResult repeated_integral_i(double nu, double gamma, int n, double x,
                                     double tol = kDefaultTol);

// int_0^x t^nu I_{nu+n}(t) dt for real shift n >= 0, nu > -1/2.
QuadratureResult integral_i_shifted(double nu, double n, double x, double tol = kDefaultTol);

// sqrt(pi) 2^{nu-1} Gamma(nu+1/2) x (I_nu L_{nu-1} - I_{nu-1} L_nu), the
// closed form of int_0^x t^nu I_nu dt, evaluated from function values only
// (no quadrature of the defining integrand).
FnValue closed_form_int_i(double nu, double x);

/// Closed-form values of the exponential-weighted K integrals over the whole
/// line and, for beta = 0, the half line.
struct DefiniteKValues {
    FnValue full_line;
    bool has_half_line = false;
    FnValue half_line;
};
DefiniteKValues definite_k_oracle(double nu, double beta);

// L_nu(x) - I_nu(x), nu > -3/2.  Decays algebraically for large x, which is
// what makes the closed form above computable there: the exponentially large
// parts of L and I never meet in a subtraction.
FnValue struve_m(double nu, double x);

// I_nu L_{nu-1} - I_{nu-1} L_nu for nu > -1/2, grouped to avoid the e^{2x}
// cancellation of the raw products.
FnValue struve_bessel_cross(double nu, double x);

}  // namespace besselbound

#endif
