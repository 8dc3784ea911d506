#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace segbounds {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;    // sum of |Kronrod - Gauss| over accepted panels
    std::size_t panels = 0;
};

namespace detail {

// 15-point Kronrod abscissae (positive half, descending) and weights; the odd
// indices are the 7-point Gauss abscissae.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(F& f, double a, double b, double& kronrod, double& gauss) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    kronrod = fc * kronrod_w[7];
    gauss = fc * gauss_w[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = h * kronrod_x[j];
        const double pair = f(c - dx) + f(c + dx);
        kronrod += kronrod_w[j] * pair;
        if (j % 2 == 1) gauss += gauss_w[j / 2] * pair;
    }
    kronrod *= h;
    gauss *= h;
}

template <class F>
void adapt(F& f, double a, double b, double tol, int depth, QuadratureResult& out) {
    double k = 0.0, g = 0.0;
    gk15(f, a, b, k, g);
    const double err = std::abs(k - g);
    if (err <= tol || depth <= 0) {
        out.value += k;
        out.error += err;
        ++out.panels;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1, out);
    adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) on [a, b] for an integrand smooth on the
/// open interval. Panels are bisected until |K15 - G7| <= their share of tol.
template <class F>
QuadratureResult integrate_gk15(F f, double a, double b, double tol = 1e-13, int max_depth = 40) {
    QuadratureResult out;
    detail::adapt(f, a, b, tol, max_depth, out);
    return out;
}

}  // namespace segbounds
