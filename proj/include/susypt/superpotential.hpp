#ifndef SUSYPT_SUPERPOTENTIAL_HPP
#define SUSYPT_SUPERPOTENTIAL_HPP

#include <string>

#include "susypt/types.hpp"

namespace susypt {

// Catalog of superpotential families. The first five are hyperbolic or
// trigonometric Scarf/Rosen-Morse/Eckart forms whose complex deformation
// enters through A -> A + iC and through an explicit imaginary coefficient;
// the last three are complexified Poschl-Teller and Coulomb forms.
enum class Family {
    AhmedScarf,      // (A+iC) tanh + (C+iB) sech, full line
    TanhRosenMorse,  // (A+iC) tanh + iB/(A+iC), full line
    CothEckart,      // -(A+iC) coth + iB/(A+iC), half line
    TanTrig,         // (A+iC) tan + iB/(A+iC), interval (-pi/2a, pi/2a)
    CotTrig,         // (A+iC) cot + iB/(A+iC), interval (0, pi/a)
    PoschlTellerC1,  // A tanh + iB coth, half line
    PoschlTellerC2,  // iA tanh + B coth, half line
    CoulombC,        // i*ac/r + beta, half line
};

enum class Branch { Plus, Minus };

inline double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

// Real parameters naming one member of a family. For CoulombC the field A
// carries the strength of the imaginary 1/r term and beta the real offset;
// B, C and branch are ignored there.
struct SuperpotentialSpec {
    Family family = Family::AhmedScarf;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double alpha = 1.0;  // inverse length, > 0
    Branch branch = Branch::Plus;
    double beta = 0.0;  // CoulombC only

    void validate() const;
};

// Complex-capable parameter pair used by the shape-invariance chain. The
// meaning of (a, b) is family dependent:
//   AhmedScarf:      W = a tanh + b sech          (a = A+iC, b = C+iB)
//   Table-I rows:    W = +-a {tanh,coth,tan,cot} + i b / a   (b stays real)
//   PoschlTellerC1:  W = a tanh + i b coth
//   PoschlTellerC2:  W = i a tanh + b coth
//   CoulombC:        W = i a / r + b, with gamma = a*b held fixed by steps
struct EffectiveParams {
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
};

EffectiveParams effective_params(const SuperpotentialSpec& spec);

// PT classification of a catalog spec: UnbrokenPT for C = 0, BrokenPT when
// C != 0 and the family's parameter constraint holds, NonPT otherwise.
// PoschlTellerC1/C2 and CoulombC are never PT symmetric.
enum class PtClass { UnbrokenPT, BrokenPT, NonPT };

std::string to_string(Family f);
std::string to_string(PtClass c);

// W and dW/dx at a point, with branch applied. Throws DomainError off the
// family's domain or within 1e-8 of a pole.
Complex eval_superpotential(const SuperpotentialSpec& spec, double x);
Complex superpotential_derivative(const SuperpotentialSpec& spec, double x);

// Same evaluations at explicit chain parameters (used on rungs above the
// base spec, where the shifted parameters are genuinely complex).
Complex eval_superpotential_eff(Family f, const EffectiveParams& p, double alpha, double x);
Complex superpotential_derivative_eff(Family f, const EffectiveParams& p, double alpha, double x);

PtClass pt_condition(const SuperpotentialSpec& spec);

// Two-parameter deformation (C, D) of the Scarf form: returns the class and
// the (C, D) pair the PT conditions force. Throws DivisionError when
// 2A + alpha = 0 with C != 0.
struct GeneralPtResult {
    PtClass cls;
    double C;
    double D;
};
GeneralPtResult general_pt_condition(double A, double B, double C, double D, double alpha);

// The real coefficients (V1, V2) of the PT form -V1 sech^2 - i V2 sech tanh.
// Only defined for AhmedScarf specs that are PT symmetric.
struct AhmedCoefficients {
    double V1;
    double V2;
};
AhmedCoefficients ahmed_coefficients(const SuperpotentialSpec& spec);

// Reality test |V2| <= V1 + 1/4 for the spectrum of the PT form, in units
// where alpha = 1 (rescale V1, V2 by alpha^2 first for other alpha).
enum class SpectralPhase { Real, ComplexConjugate };
SpectralPhase phase_from_coefficients(double V1, double V2);

// lim_{x -> +inf} W(x)^2. Throws UnboundedError for the trigonometric
// families whose W diverges at the domain edge.
Complex asymptotic_energy_offset(const SuperpotentialSpec& spec);

}  // namespace susypt

#endif
