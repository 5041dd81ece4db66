// Copyright 2026 The besselbound authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BESSELBOUND_QUADRATURE_HPP
#define BESSELBOUND_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "besselbound/fn_value.hpp"

namespace besselbound {

/// Result of an adaptive quadrature pass.
struct QuadratureResult {
    double value = 0.0;
    double abs_err = 0.0;
    int subdivisions = 0;
    double truncation_point = 0.0;  // populated by semi-infinite integrals
    bool converged = true;
};

namespace quad {

// Gauss-Kronrod 7-15 pair.  Nodes and weights generated from the Stieltjes
// construction at 60-digit precision; the pair integrates polynomials
// exactly through degree 22 (Kronrod) and 13 (Gauss).
inline constexpr double kNodes[8] = {
    0.991455371120812639207, 0.949107912342758524526, 0.864864423359769072790,
    0.741531185599394439864, 0.586087235467691130294, 0.405845151377397166907,
    0.207784955007898467601, 0.0,
};
inline constexpr double kWeightsK[8] = {
    0.0229353220105292249637, 0.0630920926299785532907, 0.104790010322250183840,
    0.140653259715525918745,  0.169004726639267902827,  0.190350578064785409913,
    0.204432940075298892414,  0.209482141084727828013,
};
// Gauss-7 weights aligned with the odd node indices (1, 3, 5, 7).
inline constexpr double kWeightsG[4] = {
    0.129484966168869693271,
    0.279705391489276667901,
    0.381830050505118944950,
    0.417959183673469387755,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
    std::uint64_t seq = 0;
};

struct PanelOrder {
    bool operator()(const Panel& l, const Panel& r) const {
        if (l.err != r.err) return l.err < r.err;
        return l.seq > r.seq;  // stable tie-break keeps runs deterministic
    }
};

// One Gauss-Kronrod pass over [a, b] with the QUADPACK error heuristic.
template <class F>
Panel gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kNodes[i]);
        fv[14 - i] = f(c + h * kNodes[i]);
    }
    fv[7] = f(c);

    double resk = kWeightsK[7] * fv[7];
    double resg = kWeightsG[3] * fv[7];
    double resabs = std::abs(resk);
    for (int i = 0; i < 7; ++i) {
        const double sum = fv[i] + fv[14 - i];
        resk += kWeightsK[i] * sum;
        resabs += kWeightsK[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) resg += kWeightsG[i / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWeightsK[7] * std::abs(fv[7] - mean);
    for (int i = 0; i < 7; ++i) {
        resasc += kWeightsK[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    }

    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    p.err = std::max(err, round_floor);
    return p;
}

// Globally adaptive bisection: split the worst panel until the summed error
// meets max(tol_abs, tol_rel * |value|) or the budget runs out.  The final
// sum is accumulated in interval order, so results are deterministic.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double tol_abs, double tol_rel,
                                    int max_panels = 2000) {
    QuadratureResult out;
    if (a == b) return out;

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    std::uint64_t seq = 0;

    Panel first = gk15(f, a, b);
    first.seq = seq++;
    double total = first.value;
    double total_err = first.err;
    heap.push(first);
    int panels = 1;

    const auto goal = [&](double v) {
        return std::max(tol_abs, tol_rel * std::abs(v));
    };

    while (total_err > goal(total) && panels < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; keep its estimate
            worst.err = std::max(worst.err * 1e-3, 0.0);
            heap.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        left.seq = seq++;
        right.seq = seq++;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    // deterministic re-summation, left to right, compensated
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    double sum = 0.0, comp = 0.0, esum = 0.0;
    for (const Panel& p : all) {
        const double y = p.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        esum += p.err;
    }

    out.value = sum;
    out.abs_err = esum;
    out.subdivisions = panels;
    out.converged = esum <= goal(sum);
    return out;
}

}  // namespace quad

}  // namespace besselbound

#endif
