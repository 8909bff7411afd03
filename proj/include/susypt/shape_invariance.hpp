#ifndef SUSYPT_SHAPE_INVARIANCE_HPP
#define SUSYPT_SHAPE_INVARIANCE_HPP

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "susypt/superpotential.hpp"
#include "susypt/types.hpp"

namespace susypt {

// One step of the shape-invariance chain: the mapped parameters a1 = f(a0)
// and the x-independent remainder R(a1) = const(a0) - const(a1), where
// const is the family's asymptotic constant term. Remainders are computed
// from these offsets, not transcribed formulas; the grid-constancy of
// V+(x; a0) - V-(x; a1) is the ground truth they are tested against.
struct ParameterStep {
    EffectiveParams next;
    Complex remainder;
};

ParameterStep parameter_step(const SuperpotentialSpec& spec);
ParameterStep parameter_step_eff(Family f, const EffectiveParams& p, double alpha);

// Constant term of V-(x; p) in the basis expansion.
Complex family_constant(Family f, const EffectiveParams& p, double alpha);

// max over the grid of |V+(x; a0) - V-(x; a1) - R(a1)|.
double verify_shape_invariance(const SuperpotentialSpec& spec, const Eigen::VectorXd& grid);

// Energies of H- built from W with the constant retained, so E0 = 0.
// Entries stop at the normalizability bound; `truncated` records that the
// request exceeded it. `offset` is the constant term for re-offsetting.
struct AlgebraicSpectrum {
    std::vector<std::pair<int, Complex>> entries;
    bool truncated = false;
    Complex offset{0.0, 0.0};
};

AlgebraicSpectrum algebraic_spectrum(const SuperpotentialSpec& spec, int n_max);

// Raw cumulative remainder sums E_0..E_n without the normalizability cut;
// the chain is pure algebra and exists for any admissible parameters.
std::vector<Complex> chain_energies(const SuperpotentialSpec& spec, int n_max);

// Closed-form E_n per family (telescoped constant difference).
Complex closed_form_energy(const SuperpotentialSpec& spec, int n);

// Largest normalizable level, applying the decay-exponent criterion at the
// domain ends (states with exponent exactly 0 are excluded). nullopt means
// the tower is unbounded; -1 means not even the ground state survives.
std::optional<int> normalizability_bound(const SuperpotentialSpec& spec);

// Successive differences E_n - E_{n-1}; requires at least two entries.
std::vector<Complex> level_spacings(const AlgebraicSpectrum& spectrum);

// True iff the two branch towers are complex-conjugate level by level up to
// n_max (1e-12). Only meaningful in the broken phase; throws NotBrokenError
// otherwise.
bool conjugate_pairing_check(const SuperpotentialSpec& spec, int n_max);

}  // namespace susypt

#endif
