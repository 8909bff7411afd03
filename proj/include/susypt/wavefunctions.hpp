#ifndef SUSYPT_WAVEFUNCTIONS_HPP
#define SUSYPT_WAVEFUNCTIONS_HPP

#include <Eigen/Dense>

#include "susypt/potential_form.hpp"
#include "susypt/superpotential.hpp"
#include "susypt/types.hpp"

namespace susypt {

// A wavefunction sampled on a strictly increasing grid. Functions are
// defined up to one complex normalization constant throughout.
struct WaveFunctionSample {
    Eigen::VectorXd grid;
    Eigen::VectorXcd values;
    int level = 0;
    Branch branch = Branch::Plus;
};

// psi0 = exp(-integral W), done in closed form per family.
WaveFunctionSample ground_state_from_W(const SuperpotentialSpec& spec,
                                       const Eigen::VectorXd& grid);
WaveFunctionSample ground_state_from_W_eff(Family f, const EffectiveParams& p, double alpha,
                                           const Eigen::VectorXd& grid);

// Closed-form psi_n: weight factor times a Jacobi (Laguerre for CoulombC)
// polynomial in the family's natural argument. enforce_bound=false skips the
// normalizability cut, which is useful for purely algebraic checks.
WaveFunctionSample eigenfunction_closed_form(const SuperpotentialSpec& spec, int n,
                                             const Eigen::VectorXd& grid,
                                             bool enforce_bound = true);

// (d/dx + W) psi and (-d/dx + W) psi with 4th-order stencils (one-sided at
// the ends). Throws GridTooCoarseError when the sampled phase advances more
// than 1% of a cycle per step.
WaveFunctionSample apply_annihilation(const SuperpotentialSpec& spec,
                                      const WaveFunctionSample& psi);
WaveFunctionSample apply_creation(const SuperpotentialSpec& spec, const WaveFunctionSample& psi);
WaveFunctionSample apply_creation_eff(Family f, const EffectiveParams& p, double alpha,
                                      const WaveFunctionSample& psi);

// psi_n built by applying n creation operators along the parameter chain to
// the ground state of the n-th rung. Agrees with the closed form up to one
// complex scalar.
WaveFunctionSample ladder_construct(const SuperpotentialSpec& spec, int n,
                                    const Eigen::VectorXd& grid, bool enforce_bound = true);

// min over a complex scalar of max|psi_plus(x) - lambda conj(psi_minus(-x))|
// normalized by max|psi_plus|. Grids must be symmetric about the origin.
double pt_partner_residual(const WaveFunctionSample& plus, const WaveFunctionSample& minus);

// Best-fit deviation between two samples after one complex rescaling:
// max|u - lambda v| / max|u| with the least-squares lambda.
double optimal_scalar_deviation(const WaveFunctionSample& u, const WaveFunctionSample& v);

// True iff the boundary-cell probability mass is below 1e-6 of the total and
// the trapezoid norm converges under grid extension (nested domains within
// 1%). Both criteria apply at the ends where the domain keeps extending;
// finite domain edges carry no decay requirement.
bool normalizability_check(const WaveFunctionSample& psi,
                           DomainKind domain = DomainKind::FullLine);

}  // namespace susypt

#endif
