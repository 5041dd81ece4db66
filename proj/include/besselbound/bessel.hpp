// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_BESSEL_HPP
#define BESSELBOUND_BESSEL_HPP

#include "besselbound/fn_value.hpp"

namespace besselbound {

// Modified Bessel function of the first kind, I_nu(x).
//
// Domain: nu > -1, x > 0.  The power series is cancellation-free and is used
// up to the overflow edge; the large-x expansion takes over for the scaled
// variant.  Overflow (x beyond ~associated exp range) yields +inf in `value`;
// use bessel_i_scaled there.
FnValue bessel_i(double nu, double x);

/// e^{-x} I_nu(x); safe for large x where I_nu itself overflows.
FnValue bessel_i_scaled(double nu, double x);

// Modified Bessel function of the second kind, K_nu(x), any real nu
// (K_{-nu} = K_nu), x > 0.  Regimes: exact finite sum at half-integer
// orders, a small-x series uniform in the fractional order (handles the
// near-integer limit), a continued fraction in the midrange, and the
// large-x expansion with a certified fallback.
FnValue bessel_k(double nu, double x);

/// e^{x} K_nu(x); safe for large x where K_nu itself underflows.
FnValue bessel_k_scaled(double nu, double x);

namespace detail {
// Power-series evaluation of I_t(x) without the nu > -1 gate; used by the
// Struve cross-term machinery that needs orders down to t > -2.  t must not
// be a negative integer (those reduce by symmetry: I_{-n} = I_n).
FnValue bessel_i_series_any_order(double t, double x);
}  // namespace detail

}  // namespace besselbound

#endif
