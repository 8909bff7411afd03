#include "susypt/jacobi.hpp"

#include <cmath>

namespace susypt {

namespace {

// Finite-sum definition with binomials expanded as rising products, valid
// for arbitrary complex parameters.
Complex jacobi_series(int n, Complex a, Complex b, Complex z) {
    Complex total{0.0, 0.0};
    const Complex zm = 0.5 * (z - 1.0);
    const Complex zp = 0.5 * (z + 1.0);
    for (int k = 0; k <= n; ++k) {
        Complex c1{1.0, 0.0};
        for (int j = k + 1; j <= n; ++j) c1 *= (a + static_cast<double>(j));
        for (int j = 2; j <= n - k; ++j) c1 /= static_cast<double>(j);
        Complex c2{1.0, 0.0};
        for (int j = n - k + 1; j <= n; ++j) c2 *= (b + static_cast<double>(j));
        for (int j = 2; j <= k; ++j) c2 /= static_cast<double>(j);
        total += c1 * c2 * std::pow(zm, k) * std::pow(zp, n - k);
    }
    return total;
}

// The recurrence degenerates when a+b hits -m or 2-2m for some step m <= n.
bool recurrence_degenerate(int n, Complex a, Complex b) {
    const Complex h = a + b;
    if (std::abs(h.imag()) > 1e-9) return false;
    const double hr = h.real();
    for (int m = 2; m <= n; ++m) {
        if (std::abs(hr + m) < 1e-9) return true;
        if (std::abs(hr + 2.0 * m - 2.0) < 1e-9) return true;
    }
    return false;
}

}  // namespace

Complex jacobi_polynomial(const JacobiParams& p, Complex z) {
    if (p.n < 0) throw DomainError("jacobi degree must be nonnegative");
    const Complex a = p.a, b = p.b;
    if (p.n == 0) return {1.0, 0.0};
    const Complex p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (z - 1.0);
    if (p.n == 1) return p1;
    if (recurrence_degenerate(p.n, a, b)) return jacobi_series(p.n, a, b, z);

    Complex pm2{1.0, 0.0};
    Complex pm1 = p1;
    const Complex h = a + b;
    for (int m = 2; m <= p.n; ++m) {
        const double md = static_cast<double>(m);
        const Complex c1 = 2.0 * md * (md + h) * (2.0 * md + h - 2.0);
        const Complex c2 = (2.0 * md + h - 1.0) * (2.0 * md + h) * (2.0 * md + h - 2.0);
        const Complex c3 = (2.0 * md + h - 1.0) * (a * a - b * b);
        const Complex c4 = 2.0 * (md + a - 1.0) * (md + b - 1.0) * (2.0 * md + h);
        const Complex pm = ((c2 * z + c3) * pm1 - c4 * pm2) / c1;
        pm2 = pm1;
        pm1 = pm;
    }
    return pm1;
}

Complex laguerre_polynomial(int n, Complex m, Complex xi) {
    if (n < 0) throw DomainError("laguerre degree must be nonnegative");
    if (n == 0) return {1.0, 0.0};
    Complex lm1{1.0, 0.0};
    Complex l = 1.0 + m - xi;
    for (int k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const Complex next = ((2.0 * kd - 1.0 + m - xi) * l - (kd - 1.0 + m) * lm1) / kd;
        lm1 = l;
        l = next;
    }
    return l;
}

}  // namespace susypt
