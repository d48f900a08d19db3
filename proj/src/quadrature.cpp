#include "mlrsa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mlrsa {

namespace {

// Kronrod 15-point nodes/weights on [-1, 1] and the embedded 7-point Gauss
// weights (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        kron += fsum * kWgk[j];
        if (j % 2 == 1) gauss += fsum * kWg[j / 2];
    }
    return {kron * h, std::fabs((kron - gauss) * h)};
}

struct Panel {
    double a, b, integral, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (tol <= 0) throw std::invalid_argument("integrate: tol must be > 0");
    if (a == b) return 0.0;

    std::priority_queue<Panel> active;
    PanelResult whole = gk15(f, a, b);
    active.push({a, b, whole.integral, whole.error});
    double total = whole.integral;
    double total_err = whole.error;

    constexpr int kMaxPanels = 4096;
    int panels = 1;
    while (total_err > 0.25 * tol * std::max(1.0, std::fabs(total))) {
        if (panels >= kMaxPanels) {
            throw QuadratureError(
                "integrate: no convergence after max refinement", total,
                total_err);
        }
        Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw QuadratureError(
                "integrate: interval underflow before convergence", total,
                total_err);
        }
        PanelResult left = gk15(f, worst.a, mid);
        PanelResult right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        active.push({worst.a, mid, left.integral, left.error});
        active.push({mid, worst.b, right.integral, right.error});
        ++panels;
    }
    return total;
}

}  // namespace mlrsa
