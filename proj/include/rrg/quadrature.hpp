#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "rrg/errors.hpp"

namespace rrg {

// Gauss-Kronrod 15(7) node/weight pair on [-1,1] (QUADPACK constants).
namespace gk15 {
inline constexpr double nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};
}  // namespace gk15

template <class F>
auto gauss_kronrod_panel(F&& f, double a, double b, double* err_out) {
    using R = std::invoke_result_t<F, double>;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    R resk = f(c) * gk15::wk[7];
    R resg = f(c) * gk15::wg[3];
    for (int j = 0; j < 7; ++j) {
        const double x = h * gk15::nodes[j];
        const R fv = f(c - x) + f(c + x);
        resk += fv * gk15::wk[j];
        if (j % 2 == 1) resg += fv * gk15::wg[j / 2];
    }
    resk *= h;
    resg *= h;
    if (err_out) *err_out = std::abs(resk - resg);
    return resk;
}

// Adaptive Gauss-Kronrod on [a, b]; bisects panels until the local K15-G7
// discrepancy meets the tolerance.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-12,
               int max_depth = 40) {
    using R = std::invoke_result_t<F, double>;
    struct Panel {
        double a, b;
        int depth;
    };
    std::vector<Panel> stack{{a, b, 0}};
    R total{};
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double err = 0.0;
        const R v = gauss_kronrod_panel(f, p.a, p.b, &err);
        const double local_tol = abs_tol * (p.b - p.a) / (b - a);
        if (err <= std::max(local_tol, 1e-16) || p.depth >= max_depth) {
            total += v;
        } else {
            const double m = 0.5 * (p.a + p.b);
            stack.push_back({p.a, m, p.depth + 1});
            stack.push_back({m, p.b, p.depth + 1});
        }
    }
    return total;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_m.
inline void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = m * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[m - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[m - 1 - i] = w[i];
    }
}

}  // namespace rrg
