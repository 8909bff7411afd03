#ifndef SUSYPT_SPECTRAL_HPP
#define SUSYPT_SPECTRAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "susypt/potential_form.hpp"
#include "susypt/shape_invariance.hpp"
#include "susypt/wavefunctions.hpp"

namespace susypt {

// Uniform grid including both endpoints; the discretized operator lives on
// the interior points (Dirichlet walls at the ends).
struct Grid {
    double x_min = -20.0;
    double x_max = 20.0;
    int n_points = 2001;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    Eigen::VectorXd points() const;
    Eigen::VectorXd interior() const;
    void validate() const;
};

// H = -d2/dx2 + V on the interior points: tridiagonal with constant
// off-diagonal -1/h^2 and diagonal 2/h^2 + V(x_i). Stored in tridiagonal
// form; dense() materializes the full matrix.
struct HamiltonianMatrix {
    Eigen::VectorXcd diag;
    Complex off{0.0, 0.0};
    Grid grid;

    int dim() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXcd dense() const;
};

HamiltonianMatrix discretize_hamiltonian(const PotentialForm& form, const Grid& grid);

// All eigenvalues (optionally eigenvectors) with a per-state localization
// score (1 - edge mass fraction) filled in by localization_filter.
struct EigenDecomposition {
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  // column per state when has_vectors
    bool has_vectors = false;
    Eigen::VectorXd localization;
};

// Complex-symmetric tridiagonal QL for the Hamiltonian fast path, with
// eigenvectors recovered by inverse iteration; dense matrices go through a
// Schur-based general solver. Every returned pair satisfies
// ||Hv - lambda v|| / ||v|| < 1e-8; NoConvergenceError otherwise.
EigenDecomposition eigen_all(const HamiltonianMatrix& H, bool want_vectors,
                             int dim_cap = 4000);
EigenDecomposition eigen_all(const Eigen::MatrixXcd& H, bool want_vectors, int dim_cap = 4000);

// Eigenvector for one already-known eigenvalue by inverse iteration; the
// returned pair passes the same residual gate as eigen_all.
Eigen::VectorXcd eigenvector_for(const HamiltonianMatrix& H, Complex lambda);

// Keeps states whose probability mass in the outer edge_fraction of the box
// is below mass_tol.
EigenDecomposition localization_filter(const EigenDecomposition& decomp, const Grid& grid,
                                       double edge_fraction = 0.1, double mass_tol = 1e-6);

// || -psi'' + V psi - E psi || / (||psi|| max(1, |E|)) over interior points
// (two dropped at each end), 4th-order second-derivative stencil.
double schrodinger_residual(const PotentialForm& form, const WaveFunctionSample& psi, Complex E);

// Greedy nearest-neighbor matching of analytic levels (shifted by `offset`)
// against the numeric localized eigenvalues.
struct MatchEntry {
    int n;
    Complex analytic;
    Complex matched;
    double abs_error;
    bool ok;
};
struct MatchReport {
    std::vector<MatchEntry> entries;
    std::vector<Complex> unmatched_numeric;
    bool pass = false;
};
MatchReport match_spectra(const EigenDecomposition& numeric, const AlgebraicSpectrum& analytic,
                          Complex offset, double tol);

// Successive h-halving against the algebraic levels; the error ratio between
// rows sits near 4 for the 3-point stencil.
struct ConvergenceRow {
    double h;
    std::vector<double> level_errors;
};
std::vector<ConvergenceRow> convergence_study(const SuperpotentialSpec& spec, const Grid& base,
                                              int refinements);

}  // namespace susypt

#endif
