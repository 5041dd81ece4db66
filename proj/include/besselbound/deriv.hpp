// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_DERIV_HPP
#define BESSELBOUND_DERIV_HPP

namespace besselbound {

// Relative residuals of the five differentiation identities, evaluated by
// central finite differences against the analytic right-hand sides.
struct DerivResiduals {
    double x_nu_i;       // d/dx (x^nu I_nu)  vs  x^nu I_{nu-1}
    double x_nu_k;       // d/dx (x^nu K_nu)  vs  -x^nu K_{nu-1}
    double k_symmetric;  // K_nu'  vs  -(K_{nu+1} + K_{nu-1})/2
    double k_lower;      // K_nu'  vs  -K_{nu-1} - (nu/x) K_nu
    double k_upper;      // K_nu'  vs  -K_{nu+1} + (nu/x) K_nu
};

/// Requires nu > 0 (so I_{nu-1} is in range) and x > 0.
DerivResiduals deriv_checks(double nu, double x);

}  // namespace besselbound

#endif
