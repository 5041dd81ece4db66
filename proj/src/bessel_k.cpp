// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#include "besselbound/bessel.hpp"

#include <cmath>
#include <limits>

namespace besselbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// g1(mu) = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu); limit -EulerGamma at mu = 0.
// The direct quotient cancels badly for small mu, so an even series in mu^2
// takes over below 0.1.
double temme_g1(double mu) {
    if (std::abs(mu) > 0.1) {
        return (1.0 / std::tgamma(1.0 - mu) - 1.0 / std::tgamma(1.0 + mu)) / (2.0 * mu);
    }
    static const double cc[8] = {0.577215664901533,   -0.0420026350340952,
                                 -0.0421977345555443, 0.007218943246663,
                                 -2.152416741149e-4,  -2.01348547807e-5,
                                 1.133027232e-6,      6.116095e-9};
    const double m2 = mu * mu;
    double s = cc[7];
    for (int i = 6; i >= 0; --i) s = s * m2 + cc[i];
    return -s;
}

// Series for K_mu(x), K_{mu+1}(x) on 0 < x <= 2, |mu| <= 1/2.  Uniform in mu,
// so the near-integer limit needs no special casing.
void temme_k_pair(double mu, double x, double* kmu, double* kmu1) {
    const double d = std::log(2.0 / x);
    const double e = mu * d;
    const double g1 = temme_g1(mu);
    const double g2 = 0.5 * (1.0 / std::tgamma(1.0 - mu) + 1.0 / std::tgamma(1.0 + mu));
    const double fact = (mu == 0.0) ? 1.0 : (M_PI * mu) / std::sin(M_PI * mu);
    const double sinhc = (e == 0.0) ? 1.0 : std::sinh(e) / e;
    double f = fact * (g1 * std::cosh(e) + g2 * d * sinhc);
    double p = 0.5 * std::exp(e) * std::tgamma(1.0 + mu);
    double q = 0.5 * std::exp(-e) * std::tgamma(1.0 - mu);
    const double cx = 0.25 * x * x;
    double c = 1.0;
    double s0 = f;
    double s1 = p;
    for (int k = 1; k < 500; ++k) {
        f = (k * f + p + q) / (k * k - mu * mu);
        p /= (k - mu);
        q /= (k + mu);
        c *= cx / k;
        const double d0 = c * f;
        s0 += d0;
        const double d1 = c * (p - k * f);
        s1 += d1;
        if (std::abs(d0) < kEps * std::abs(s0) && std::abs(d1) < kEps * std::abs(s1)) break;
    }
    *kmu = s0;
    *kmu1 = s1 * (2.0 / x);
}

// Steed continued fraction for e^x K_mu(x), e^x K_{mu+1}(x); x > 2, |mu| <= 1/2.
void cf2_k_pair_scaled(double mu, double x, double* kmu, double* kmu1) {
    const double a1 = 0.25 - mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = delh;
    double q1 = 0.0;
    double q2 = 1.0;
    double a = -a1;
    double q = a1;
    double c = a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 40000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels) < kEps * std::abs(s)) break;
    }
    h = a1 * h;
    const double k0 = std::sqrt(M_PI / (2.0 * x)) / s;
    *kmu = k0;
    *kmu1 = k0 * (mu + x + 0.5 - h) / x;
}

// e^x K_nu(x) ~ sqrt(pi/2x) sum_k a_k(nu)/x^k.  False when the minimum term
// is too large for ~1e-13 accuracy.
bool k_asym_scaled(double nu, double x, double* out, double* err) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev && std::abs(term) > 5e-14 * std::abs(sum)) return false;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    if (std::abs(term) > 5e-14 * std::abs(sum)) return false;
    const double pre = std::sqrt(M_PI / (2.0 * x));
    *out = pre * sum;
    *err = pre * (std::abs(term) + 4.0 * kEps * std::abs(sum));
    return true;
}

struct KValue {
    double value;
    double abs_err;
};

// Scaled-or-not dispatcher.  All regimes reduce to an evaluation at the
// fractional order plus a forward recurrence, which is stable for K.
KValue k_impl(double nu, double x, bool scaled) {
    nu = std::abs(nu);

    const double half_m = std::round(nu - 0.5);
    if (half_m >= 0.0 && std::abs(nu - (half_m + 0.5)) <= 1e-14 * std::max(1.0, nu)) {
        // half-integer order: the expansion terminates and is exact
        const int m = static_cast<int>(half_m);
        double t = 1.0;
        double sum = 1.0;
        for (int k = 1; k <= m; ++k) {
            t *= (m + k) * (m - k + 1.0) / (2.0 * k * x);
            sum += t;
        }
        const double pre = std::sqrt(M_PI / (2.0 * x));
        double v = pre * sum;
        double e = 4.0 * kEps * v;
        if (!scaled) {
            const double ex = std::exp(-x);
            v *= ex;
            e = e * ex + 2.0 * std::numeric_limits<double>::denorm_min();
        }
        return {v, e};
    }

    const int n = static_cast<int>(std::lround(nu));
    const double mu = nu - n;

    double kmu = 0.0;
    double kmu1 = 0.0;
    double rel = 8.0 * kEps;
    bool have_scaled_pair = false;

    if (x <= 2.0) {
        temme_k_pair(mu, x, &kmu, &kmu1);
    } else {
        double av = 0.0;
        double ae = 0.0;
        if (x >= 17.0 && k_asym_scaled(nu, x, &av, &ae)) {
            double v = av;
            double e = ae + 4.0 * kEps * std::abs(av);
            if (!scaled) {
                const double ex = std::exp(-x);
                v *= ex;
                e = e * ex + 2.0 * std::numeric_limits<double>::denorm_min();
            }
            return {v, e};
        }
        cf2_k_pair_scaled(mu, x, &kmu, &kmu1);
        have_scaled_pair = true;
        rel = 16.0 * kEps;
    }

    double km = kmu;
    double kp = kmu1;
    for (int i = 1; i < n; ++i) {
        const double t = mu + i;
        const double knew = km + (2.0 * t / x) * kp;
        km = kp;
        kp = knew;
    }
    double v = (n == 0) ? kmu : kp;
    double e = (rel + n * kEps) * std::abs(v);

    if (scaled && !have_scaled_pair) {
        const double ex = std::exp(x);  // x <= 2 here
        v *= ex;
        e *= ex;
    } else if (!scaled && have_scaled_pair) {
        const double ex = std::exp(-x);
        v *= ex;
        e = e * ex + 2.0 * std::numeric_limits<double>::denorm_min();
    }
    return {v, e};
}

void check_k_domain(double nu, double x) {
    if (!std::isfinite(nu)) throw domain_error("bessel_k: order must be finite");
    if (!std::isfinite(x) || !(x > 0.0)) throw domain_error("bessel_k: requires x > 0");
}

}  // namespace

FnValue bessel_k(double nu, double x) {
    check_k_domain(nu, x);
    const KValue r = k_impl(nu, x, false);
    return {r.value, r.abs_err};
}

FnValue bessel_k_scaled(double nu, double x) {
    check_k_domain(nu, x);
    const KValue r = k_impl(nu, x, true);
    return {r.value, r.abs_err};
}

}  // namespace besselbound
