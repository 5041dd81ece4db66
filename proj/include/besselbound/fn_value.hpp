// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_FN_VALUE_HPP
#define BESSELBOUND_FN_VALUE_HPP

#include <stdexcept>
#include <string>

namespace besselbound {

/// A function evaluation: value plus a conservative absolute-error estimate.
struct FnValue {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Thrown when an argument lies outside an operation's admissible range.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace besselbound

#endif
