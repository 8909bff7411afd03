#include "susypt/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "susypt/fd_stencils.hpp"

namespace susypt {

namespace {

// ---------------------------------------------------------------------------
// Complex-symmetric tridiagonal eigensolver.
//
// QL with implicit shifts carried through complex arithmetic. The rotation
// normalization r = sqrt(f^2 + g^2) can vanish for complex-symmetric input
// (isotropic vectors); that case is retried with a perturbed shift and the
// residual gate downstream certifies every returned pair.
// ---------------------------------------------------------------------------

Complex csqrt_stable(Complex z) { return std::sqrt(z); }

std::vector<Complex> tridiag_eigenvalues(std::vector<Complex> d, std::vector<Complex> e) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return d;
    e.push_back(Complex(0.0, 0.0));  // e[n-1] sentinel

    auto small = [&](int m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        return std::abs(e[m]) <= 1e-15 * dd;
    };

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                if (small(m)) break;
            }
            if (m != l) {
                if (iter++ == 80) {
                    throw NoConvergenceError("tridiagonal QL failed at index " +
                                             std::to_string(l));
                }
                Complex g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                Complex r = csqrt_stable(g * g + 1.0);
                // Wilkinson-style shift; pick the larger denominator.
                Complex denom = (std::abs(g + r) >= std::abs(g - r)) ? (g + r) : (g - r);
                if (std::abs(denom) < 1e-300) denom = Complex(1e-300, 0.0);
                g = d[m] - d[l] + e[l] / denom;
                // Occasional isotropic breakdown: nudge the shift.
                if (iter > 40) g += Complex(0.0, 1e-10 * (std::abs(d[l]) + 1.0));

                Complex s{1.0, 0.0}, c{1.0, 0.0}, p{0.0, 0.0};
                int i;
                bool restarted = false;
                for (i = m - 1; i >= l; --i) {
                    Complex f = s * e[i];
                    const Complex b = c * e[i];
                    r = csqrt_stable(f * f + g * g);
                    e[i + 1] = r;
                    if (std::abs(r) < 1e-30 * (std::abs(f) + std::abs(g) + 1e-300)) {
                        // rotation undefined; drop the accumulated shift and retry
                        d[i + 1] -= p;
                        e[m] = Complex(0.0, 0.0);
                        restarted = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    const Complex t = (d[i] - g) * s + 2.0 * c * b;
                    p = s * t;
                    d[i + 1] = g + p;
                    g = c * t - b;
                }
                if (restarted) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = Complex(0.0, 0.0);
            }
        } while (m != l);
    }
    return d;
}

// Tridiagonal solve with partial pivoting (one fill-in superdiagonal), O(n).
void tridiag_solve(const std::vector<Complex>& sub, const std::vector<Complex>& diag,
                   const std::vector<Complex>& sup, Eigen::VectorXcd& rhs) {
    const int n = static_cast<int>(diag.size());
    std::vector<Complex> a(n, Complex(0.0, 0.0)), b(n), c1(n, Complex(0.0, 0.0)),
        c2(n, Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) b[i] = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        a[i + 1] = sub[i];
        c1[i] = sup[i];
    }
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(a[i + 1]) > std::abs(b[i])) {
            std::swap(b[i], a[i + 1]);
            std::swap(c1[i], b[i + 1]);
            if (i + 2 < n) std::swap(c2[i], c1[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (std::abs(b[i]) < 1e-300) b[i] = Complex(1e-300, 0.0);
        const Complex m = a[i + 1] / b[i];
        b[i + 1] -= m * c1[i];
        if (i + 2 < n) c1[i + 1] -= m * c2[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (std::abs(b[n - 1]) < 1e-300) b[n - 1] = Complex(1e-300, 0.0);
    rhs[n - 1] /= b[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - c1[n - 2] * rhs[n - 1]) / b[n - 2];
    for (int i = n - 3; i >= 0; --i) {
        rhs[i] = (rhs[i] - c1[i] * rhs[i + 1] - c2[i] * rhs[i + 2]) / b[i];
    }
}

double pair_residual(const HamiltonianMatrix& H, Complex lambda, const Eigen::VectorXcd& v) {
    const int n = H.dim();
    Eigen::VectorXcd r(n);
    for (int i = 0; i < n; ++i) {
        Complex acc = (H.diag[i] - lambda) * v[i];
        if (i > 0) acc += H.off * v[i - 1];
        if (i + 1 < n) acc += H.off * v[i + 1];
        r[i] = acc;
    }
    return r.norm() / v.norm();
}

Eigen::VectorXcd inverse_iteration(const HamiltonianMatrix& H, Complex lambda,
                                   double* residual_out) {
    const int n = H.dim();
    const std::vector<Complex> sub(n - 1, H.off), sup(n - 1, H.off);
    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
    v.normalize();

    double best_res = std::numeric_limits<double>::infinity();
    Eigen::VectorXcd best = v;
    Complex shift = lambda;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Complex> diag(n);
        const double scale = std::abs(shift) + H.diag.cwiseAbs().maxCoeff();
        const Complex eps_shift = shift + Complex(1e-13 * scale, 1e-13 * scale);
        for (int i = 0; i < n; ++i) diag[i] = H.diag[i] - eps_shift;
        for (int it = 0; it < 5; ++it) {
            tridiag_solve(sub, diag, sup, v);
            v.normalize();
            const double res = pair_residual(H, lambda, v);
            if (res < best_res) {
                best_res = res;
                best = v;
            }
            if (best_res < 1e-10) break;
        }
        if (best_res < 1e-10) break;
        shift = lambda * (1.0 + 1e-9) + Complex(0.0, 1e-9);
    }
    if (residual_out) *residual_out = best_res;
    return best;
}

}  // namespace

Eigen::VectorXd Grid::points() const {
    validate();
    return Eigen::VectorXd::LinSpaced(n_points, x_min, x_max);
}

Eigen::VectorXd Grid::interior() const {
    const Eigen::VectorXd all = points();
    return all.segment(1, n_points - 2);
}

void Grid::validate() const {
    if (!(x_min < x_max)) throw DomainError("grid needs x_min < x_max");
    if (n_points < 3) throw DomainError("grid needs at least 3 points");
}

Eigen::MatrixXcd HamiltonianMatrix::dense() const {
    const int n = dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = diag[i];
        if (i + 1 < n) {
            m(i, i + 1) = off;
            m(i + 1, i) = off;
        }
    }
    return m;
}

HamiltonianMatrix discretize_hamiltonian(const PotentialForm& form, const Grid& grid) {
    grid.validate();
    const double h = grid.spacing();
    const Eigen::VectorXd xi = grid.interior();
    if (!(grid.x_min >= form.domain.lower() && grid.x_max <= form.domain.upper())) {
        throw DomainError("grid extends beyond the potential's domain");
    }
    HamiltonianMatrix H;
    H.grid = grid;
    H.off = Complex(-1.0 / (h * h), 0.0);
    H.diag.resize(xi.size());
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        const double dist = distance_to_singularity(form, xi[i]);
        if (dist < 10.0 * h) {
            throw SingularityError("grid point within 10h of a potential singularity");
        }
        H.diag[i] = 2.0 / (h * h) + eval_potential(form, xi[i]);
    }
    return H;
}

EigenDecomposition eigen_all(const HamiltonianMatrix& H, bool want_vectors, int dim_cap) {
    const int n = H.dim();
    if (n > dim_cap) throw DimensionCapError("dimension exceeds the configured cap");
    if (n < 1) throw DomainError("empty Hamiltonian");

    std::vector<Complex> d(H.diag.data(), H.diag.data() + n);
    std::vector<Complex> e(std::max(0, n - 1), H.off);
    std::vector<Complex> vals = tridiag_eigenvalues(std::move(d), std::move(e));
    std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) out.eigenvalues[i] = vals[i];
    out.has_vectors = want_vectors;
    if (want_vectors) {
        out.eigenvectors.resize(n, n);
        for (int k = 0; k < n; ++k) {
            double res = 0.0;
            out.eigenvectors.col(k) = inverse_iteration(H, vals[k], &res);
            if (res >= 1e-8) {
                throw NoConvergenceError("eigenpair residual gate failed at index " +
                                         std::to_string(k));
            }
        }
    }
    return out;
}

Eigen::VectorXcd eigenvector_for(const HamiltonianMatrix& H, Complex lambda) {
    double res = 0.0;
    Eigen::VectorXcd v = inverse_iteration(H, lambda, &res);
    if (res >= 1e-8) {
        throw NoConvergenceError("eigenpair residual gate failed for the requested value");
    }
    return v;
}

EigenDecomposition eigen_all(const Eigen::MatrixXcd& H, bool want_vectors, int dim_cap) {
    if (H.rows() != H.cols()) throw DomainError("matrix must be square");
    const int n = static_cast<int>(H.rows());
    if (n > dim_cap) throw DimensionCapError("dimension exceeds the configured cap");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(H, want_vectors);
    if (solver.info() != Eigen::Success) {
        throw NoConvergenceError("dense eigensolver did not converge");
    }
    // Deterministic order: sort by (re, im), carrying vectors along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const Eigen::VectorXcd vals = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals[a].real() != vals[b].real()) return vals[a].real() < vals[b].real();
        return vals[a].imag() < vals[b].imag();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.has_vectors = want_vectors;
    if (want_vectors) out.eigenvectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = vals[order[k]];
        if (want_vectors) out.eigenvectors.col(k) = solver.eigenvectors().col(order[k]);
    }
    if (want_vectors) {
        for (int k = 0; k < n; ++k) {
            const Eigen::VectorXcd v = out.eigenvectors.col(k);
            const double res = (H * v - out.eigenvalues[k] * v).norm() / v.norm();
            if (res >= 1e-8) {
                throw NoConvergenceError("eigenpair residual gate failed at index " +
                                         std::to_string(k));
            }
        }
    }
    return out;
}

EigenDecomposition localization_filter(const EigenDecomposition& decomp, const Grid& grid,
                                       double edge_fraction, double mass_tol) {
    if (!decomp.has_vectors) throw DomainError("localization needs eigenvectors");
    const Eigen::VectorXd xi = grid.interior();
    const double L = grid.x_max - grid.x_min;
    const double lo = grid.x_min + edge_fraction * L;
    const double hi = grid.x_max - edge_fraction * L;

    std::vector<int> keep;
    std::vector<double> scores;
    for (int k = 0; k < decomp.eigenvalues.size(); ++k) {
        const Eigen::VectorXd p = decomp.eigenvectors.col(k).cwiseAbs2();
        double total = 0.0, edge = 0.0;
        for (Eigen::Index i = 0; i < xi.size(); ++i) {
            total += p[i];
            if (xi[i] < lo || xi[i] > hi) edge += p[i];
        }
        const double fraction = total > 0.0 ? edge / total : 1.0;
        if (fraction < mass_tol) {
            keep.push_back(k);
            scores.push_back(1.0 - fraction);
        }
    }

    EigenDecomposition out;
    out.has_vectors = true;
    out.eigenvalues.resize(keep.size());
    out.eigenvectors.resize(decomp.eigenvectors.rows(), keep.size());
    out.localization.resize(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
        out.eigenvalues[j] = decomp.eigenvalues[keep[j]];
        out.eigenvectors.col(j) = decomp.eigenvectors.col(keep[j]);
        out.localization[j] = scores[j];
    }
    return out;
}

double schrodinger_residual(const PotentialForm& form, const WaveFunctionSample& psi,
                            Complex E) {
    const double h = uniform_spacing(psi.grid);
    check_oscillation_scale(psi.values);
    const Eigen::Index n = psi.grid.size();
    const Eigen::VectorXcd dd = second_derivative4_interior(psi.values, h);
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 2; i < n - 2; ++i) {
        const Complex v = eval_potential(form, psi.grid[i]);
        const Complex r = -dd[i - 2] + (v - E) * psi.values[i];
        num += std::norm(r);
        den += std::norm(psi.values[i]);
    }
    if (den == 0.0) throw DomainError("sample is identically zero on the interior");
    return std::sqrt(num) / (std::sqrt(den) * std::max(1.0, std::abs(E)));
}

MatchReport match_spectra(const EigenDecomposition& numeric, const AlgebraicSpectrum& analytic,
                          Complex offset, double tol) {
    MatchReport report;
    std::vector<bool> claimed(numeric.eigenvalues.size(), false);
    bool all_ok = true;
    for (const auto& [n, E] : analytic.entries) {
        const Complex target = E + offset;
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int k = 0; k < numeric.eigenvalues.size(); ++k) {
            if (claimed[k]) continue;
            const double dist = std::abs(numeric.eigenvalues[k] - target);
            if (dist < best_d) {
                best_d = dist;
                best = k;
            }
        }
        MatchEntry entry;
        entry.n = n;
        entry.analytic = target;
        if (best >= 0) {
            claimed[best] = true;
            entry.matched = numeric.eigenvalues[best];
            entry.abs_error = best_d;
            entry.ok = best_d <= tol;
        } else {
            entry.matched = Complex(0.0, 0.0);
            entry.abs_error = std::numeric_limits<double>::infinity();
            entry.ok = false;
        }
        all_ok = all_ok && entry.ok;
        report.entries.push_back(entry);
    }
    for (int k = 0; k < numeric.eigenvalues.size(); ++k) {
        if (!claimed[k]) report.unmatched_numeric.push_back(numeric.eigenvalues[k]);
    }
    report.pass = all_ok && !report.entries.empty();
    return report;
}

std::vector<ConvergenceRow> convergence_study(const SuperpotentialSpec& spec, const Grid& base,
                                              int refinements) {
    if (refinements < 2) throw DomainError("convergence study needs at least 2 refinements");
    const auto [vm, vp] = build_partner_potentials(spec);
    (void)vp;
    AlgebraicSpectrum levels = algebraic_spectrum(spec, 64);
    if (levels.entries.empty()) throw DomainError("no bound levels to track");

    std::vector<ConvergenceRow> rows;
    Grid g = base;
    for (int r = 0; r < refinements; ++r) {
        const HamiltonianMatrix H = discretize_hamiltonian(vm, g);
        const EigenDecomposition decomp = eigen_all(H, false);
        ConvergenceRow row;
        row.h = g.spacing();
        for (const auto& [n, E] : levels.entries) {
            (void)n;
            double best = std::numeric_limits<double>::infinity();
            for (int k = 0; k < decomp.eigenvalues.size(); ++k) {
                best = std::min(best, std::abs(decomp.eigenvalues[k] - E));
            }
            row.level_errors.push_back(best);
        }
        rows.push_back(row);
        g.n_points = 2 * g.n_points - 1;  // halves h exactly
    }
    return rows;
}

}  // namespace susypt
