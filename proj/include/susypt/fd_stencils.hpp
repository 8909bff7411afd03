#ifndef SUSYPT_FD_STENCILS_HPP
#define SUSYPT_FD_STENCILS_HPP

#include <Eigen/Dense>
#include <cmath>

#include "susypt/types.hpp"

namespace susypt {

// Uniform spacing of a strictly increasing grid; throws on non-uniform input.
inline double uniform_spacing(const Eigen::VectorXd& grid) {
    if (grid.size() < 5) throw DomainError("grid too small");
    const double h = grid[1] - grid[0];
    const double mean = (grid[grid.size() - 1] - grid[0]) / (grid.size() - 1);
    if (!(h > 0.0) || std::abs(h - mean) > 1e-9 * std::abs(mean)) {
        throw DomainError("operation needs a uniform grid");
    }
    return h;
}

// 4th-order first derivative; one-sided at the two points nearest each end.
inline Eigen::VectorXcd derivative4(const Eigen::VectorXcd& f, double h) {
    const Eigen::Index n = f.size();
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 2; i < n - 2; ++i) {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    }
    for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(1)}) {
        out[i] = (-25.0 * f[i] + 48.0 * f[i + 1] - 36.0 * f[i + 2] + 16.0 * f[i + 3] -
                  3.0 * f[i + 4]) /
                 (12.0 * h);
    }
    for (Eigen::Index i : {n - 2, n - 1}) {
        out[i] = (25.0 * f[i] - 48.0 * f[i - 1] + 36.0 * f[i - 2] - 16.0 * f[i - 3] +
                  3.0 * f[i - 4]) /
                 (12.0 * h);
    }
    return out;
}

// 4th-order second derivative on the interior (two points dropped per end).
inline Eigen::VectorXcd second_derivative4_interior(const Eigen::VectorXcd& f, double h) {
    const Eigen::Index n = f.size();
    if (n < 5) throw GridTooCoarseError("need at least 5 points for the interior stencil");
    Eigen::VectorXcd out(n - 4);
    const double h2 = h * h;
    for (Eigen::Index i = 2; i < n - 2; ++i) {
        out[i - 2] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] -
                      f[i + 2]) /
                     (12.0 * h2);
    }
    return out;
}

// Rejects grids whose spacing exceeds 1% of the sampled oscillation scale.
// Near-zero samples are skipped: a polynomial node flips the sign and would
// read as a fake half-cycle.
inline void check_oscillation_scale(const Eigen::VectorXcd& v) {
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak <= 0.0) return;
    const double floor = 0.05 * peak;
    double worst = 0.0;
    for (Eigen::Index i = 0; i + 1 < v.size(); ++i) {
        if (std::abs(v[i]) < floor || std::abs(v[i + 1]) < floor) continue;
        worst = std::max(worst, std::abs(std::arg(v[i + 1] / v[i])));
    }
    if (worst > 0.02 * 3.14159265358979323846) {
        throw GridTooCoarseError("grid spacing exceeds 1% of the oscillation scale");
    }
}

}  // namespace susypt

#endif
