// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_STRUVE_HPP
#define BESSELBOUND_STRUVE_HPP

#include "besselbound/fn_value.hpp"

namespace besselbound {

// Modified Struve function L_nu(x) for nu > -3/2, x > 0.  The ascending
// series has positive terms throughout that domain and converges for all x
// below the overflow edge.
FnValue struve_l(double nu, double x);

}  // namespace besselbound

#endif
