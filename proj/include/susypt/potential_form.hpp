#ifndef SUSYPT_POTENTIAL_FORM_HPP
#define SUSYPT_POTENTIAL_FORM_HPP

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "susypt/superpotential.hpp"
#include "susypt/types.hpp"

namespace susypt {

// Fixed basis of shape functions a potential can be expanded over. Arguments
// are alpha*x except for the radial terms, which take r directly.
enum class BasisFn {
    SechSq,    // sech^2(ax)
    SechTanh,  // sech(ax) tanh(ax)
    CschSq,    // csch^2(ax)
    Coth,      // coth(ax)
    Tanh,      // tanh(ax)
    SecSq,     // sec^2(ax)
    Tan,       // tan(ax)
    CscSq,     // csc^2(ax)
    Cot,       // cot(ax)
    InvR2,     // 1/r^2
    InvR,      // 1/r
};

enum class DomainKind {
    FullLine,           // (-inf, inf)
    HalfLine,           // (0, inf)
    IntervalSymmetric,  // (-pi/2a, pi/2a)
    IntervalZeroPi,     // (0, pi/a)
};

struct Domain {
    DomainKind kind = DomainKind::FullLine;
    double alpha = 1.0;

    double lower() const;  // -inf for the full line
    double upper() const;
    bool contains(double x) const;
    bool symmetric_about_origin() const;
};

std::string to_string(BasisFn b);
std::string to_string(DomainKind k);

// A potential as complex coefficients over the basis plus a constant. The
// constant keeps the full asymptotic offset (e.g. lim W^2) instead of
// dropping it, so energies computed against this form have E0 = 0.
struct PotentialForm {
    std::map<BasisFn, Complex> coefficients;
    Complex constant{0.0, 0.0};
    Domain domain;
    double alpha = 1.0;
};

// Distance from x to the nearest pole of the basis function; infinity for
// pole-free terms.
double distance_to_singularity(const PotentialForm& form, double x);

Complex eval_potential(const PotentialForm& form, double x);
Eigen::VectorXcd eval_potential(const PotentialForm& form, const Eigen::VectorXd& xs);

// (V-, V+) with V+- = W^2 +- W', as coefficient expansions. The identity
// V+ - V- = 2 W' holds coefficient-wise.
std::pair<PotentialForm, PotentialForm> build_partner_potentials(const SuperpotentialSpec& spec);
std::pair<PotentialForm, PotentialForm> build_partner_potentials_eff(Family f,
                                                                     const EffectiveParams& p,
                                                                     double alpha);

// The bare PT form -V1 sech^2(ax) - i V2 sech(ax) tanh(ax), constant zero.
PotentialForm ahmed_potential_form(double V1, double V2, double alpha = 1.0);

// max over the grid of |V(-x)* - V(x)| for the x-dependent part; a non-real
// constant breaks the identity trivially, so its deviation is reported
// separately. Throws DomainError when the domain is not symmetric about 0.
struct PtCheckResult {
    double max_deviation;
    double constant_deviation;
};
PtCheckResult pt_symmetry_check(const PotentialForm& form, const Eigen::VectorXd& probe);

}  // namespace susypt

#endif
