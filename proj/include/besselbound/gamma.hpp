// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_GAMMA_HPP
#define BESSELBOUND_GAMMA_HPP

#include "besselbound/fn_value.hpp"

namespace besselbound {

/// Gamma(a) for real a.  Rejects the poles at a = 0, -1, -2, ...
FnValue gamma_fn(double a);

/// log Gamma(a) for a > 0.  Preferred for ratios that would overflow.
FnValue log_gamma(double a);

/// Gamma(p)/Gamma(q) for p, q > 0 via a log-gamma difference.
double gamma_ratio(double p, double q);

/// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0.
double beta_fn(double a, double b);

}  // namespace besselbound

#endif
