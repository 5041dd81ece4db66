// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_VERIFY_HPP
#define BESSELBOUND_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "besselbound/fn_value.hpp"

namespace besselbound {

// Every inequality the library certifies, one id per directed claim.
// clang-format off
#define BESSELBOUND_INEQUALITY_IDS(X) \
    X(int_i_lower_bound)          /* integral dominates x^nu I_{nu+1} */ \
    X(int_i_upper_bound)          /* x^nu I_nu dominates the integral, nu >= 1/2 */ \
    X(tower_monotone)             /* each integration level shrinks the tower */ \
    X(tower_exp_bound)            /* tilt factor bounds the tilted tower */ \
    X(shifted_i_upper)            /* order-shifted integral bound */ \
    X(tower_product_upper)        /* product-coefficient tower bound */ \
    X(tower_exp_product_upper)    /* tilted product bound */ \
    X(int_k_upper_next_order)     /* K integral below x^nu K_{nu+1} */ \
    X(int_k_upper_same_order)     /* ... below x^nu K_nu, nu < 1/2 */ \
    X(int_k_exp_upper_small_order)/* 1/(1-|beta|) bound, nu < 1/2 */ \
    X(int_k_upper_m_const)        /* gamma-ratio constant bound, nu >= 1/2 */ \
    X(int_k_exp_upper_n_const)    /* tilted gamma-ratio bound, nu >= 1/2 */ \
    X(struve_cross_lower)         /* cross term above its lower bound */ \
    X(struve_cross_upper)         /* cross term below its upper bound */ \
    X(k_ratio_monotone)           /* K_{nu-1}/K_nu monotone per regime */ \
    X(turanian_ordering)          /* Turanian ordered across orders */ \
    X(turanian_derivative_identity) /* ratio derivative identity */ \
    X(u_diag_nonneg)              /* u diagnostic non-negative */ \
    X(v_diag_nonneg)              /* v diagnostic non-negative */ \
    X(n_const_margin)             /* N (1-beta) > 1 */ \
    X(k_gap_positive)             /* gap positive for nu > 0 */ \
    X(k_gap_upper)                /* gap below 1/(4(nu-1)), nu > 1 */ \
    X(k_gap_decreasing)           /* gap decreasing in x */ \
    X(k_mono_certificate)         /* x^{nu+1}K_{nu-1}+2x^nu K_nu < 2^nu Gamma(nu) */ \
    X(k_envelope_lower)           /* e^{-x} envelope floor, nu >= 1/2 */ \
    X(k_envelope_refined_lower)   /* x K_1 refinement, nu >= 1 */ \
    X(k_envelope_upper)           /* constant envelope cap */ \
    X(i_order_monotone)           /* I_nu < I_{nu-1}, nu >= 1/2 */ \
    X(k_order_monotone_low)       /* K_nu < K_{nu-1}, nu < 1/2 */ \
    X(k_order_monotone_high)      /* K_nu >= K_{nu-1}, nu >= 1/2 */ \
    X(k0_gamma_ratio_lower)       /* gamma ratio under sqrt(2/pi) e^x K_0 */ \
    X(k0_sqrt_lower)              /* 1/sqrt(x+1/2) lower */ \
    X(k0_sqrt_upper)              /* 1/sqrt(x) upper */ \
    X(k0_gamma_vs_sqrt)           /* gamma ratio beats the sqrt lower */ \
    X(k0_luke_lower)              /* rational lower */ \
    X(k0_luke_upper)              /* rational upper */
// clang-format on

enum class InequalityId {
#define X(name) name,
    BESSELBOUND_INEQUALITY_IDS(X)
#undef X
};

const char* to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);
const std::vector<InequalityId>& all_inequality_ids();

enum class Outcome { pass, fail, indeterminate };
const char* to_string(Outcome o);

/// A sweep description; values must lie inside the inequality's domain.
struct GridSpec {
    InequalityId id{};
    std::vector<double> nu_values;
    std::vector<double> x_values;
    std::vector<double> beta_or_gamma_values;
    std::vector<int> n_values;
    double tol = 1e-10;
};

// Validating factory: rejects out-of-domain values instead of skipping them.
GridSpec make_grid(InequalityId id, std::vector<double> nu_values, std::vector<double> x_values,
                   std::vector<double> beta_or_gamma_values, std::vector<int> n_values,
                   double tol = 1e-10);

/// Built-in grid for one id: the default parameter sets intersected with the
/// inequality's validity domain.
GridSpec default_grid(InequalityId id, double tol = 1e-10);

struct VerificationRecord {
    InequalityId id{};
    double nu = 0.0;
    double beta_or_gamma = 0.0;
    int n = 0;
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;      // rhs - lhs; the claim is always lhs < rhs
    double oracle_err = 0.0;  // combined evaluation/quadrature error estimate
    Outcome outcome = Outcome::pass;
    bool pass = true;         // margin > -max(1e-12 * scale, oracle_err)
};

struct IdSummary {
    InequalityId id{};
    int count = 0;
    int fails = 0;
    int indeterminate = 0;
    double min_margin = 0.0;
};

struct Report {
    std::vector<VerificationRecord> records;
    std::vector<IdSummary> summary;
    double tol = 1e-10;
    double wall_seconds = 0.0;  // not serialized; reports stay byte-identical
    int total_fails() const;
    int total_indeterminate() const;
};

/// One record per in-domain grid point; nothing is silently dropped.
std::vector<VerificationRecord> sweep(const GridSpec& grid);

Report verify_all(double tol = 1e-10);
Report verify_ids(const std::vector<InequalityId>& ids, double tol = 1e-10);

// Crossover abscissa where the rational lower bound overtakes the
// gamma-ratio lower bound for sqrt(2/pi) e^x K_0; near 0.394.
double luke_crossover();

// Asymptotic-regime conformance checks: each limiting form is evaluated at a
// sentinel chosen inside its documented regime.
Report limit_checks();

}  // namespace besselbound

#endif
