#include "susypt/superpotential.hpp"

#include <cmath>
#include <limits>

namespace susypt {

namespace {

constexpr double kPoleGuard = 1e-8;
constexpr double kExactTol = 1e-12;

double pi() { return 3.14159265358979323846; }

void check_pole_distance(double dist, double x) {
    if (dist < kPoleGuard) {
        throw DomainError("evaluation within 1e-8 of a pole at x = " + std::to_string(x));
    }
}

}  // namespace

void SuperpotentialSpec::validate() const {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) || !std::isfinite(beta)) {
        throw DomainError("parameters must be finite");
    }
}

std::string to_string(Family f) {
    switch (f) {
        case Family::AhmedScarf: return "AhmedScarf";
        case Family::TanhRosenMorse: return "TanhRosenMorse";
        case Family::CothEckart: return "CothEckart";
        case Family::TanTrig: return "TanTrig";
        case Family::CotTrig: return "CotTrig";
        case Family::PoschlTellerC1: return "PoschlTellerC1";
        case Family::PoschlTellerC2: return "PoschlTellerC2";
        case Family::CoulombC: return "CoulombC";
    }
    return "?";
}

std::string to_string(PtClass c) {
    switch (c) {
        case PtClass::UnbrokenPT: return "UnbrokenPT";
        case PtClass::BrokenPT: return "BrokenPT";
        case PtClass::NonPT: return "NonPT";
    }
    return "?";
}

EffectiveParams effective_params(const SuperpotentialSpec& spec) {
    spec.validate();
    const double s = branch_sign(spec.branch);
    switch (spec.family) {
        case Family::AhmedScarf:
            return {Complex(spec.A, s * spec.C), Complex(s * spec.C, spec.B)};
        case Family::TanhRosenMorse:
        case Family::CothEckart:
        case Family::TanTrig:
        case Family::CotTrig:
            return {Complex(spec.A, s * spec.C), Complex(spec.B, 0.0)};
        case Family::PoschlTellerC1:
        case Family::PoschlTellerC2:
            return {Complex(spec.A, 0.0), Complex(spec.B, 0.0)};
        case Family::CoulombC:
            return {Complex(spec.A, 0.0), Complex(spec.beta, 0.0)};
    }
    throw Error("unknown family");
}

namespace {

// Domain admission for a raw coordinate, with the pole guard.
void check_point(Family f, double alpha, double x) {
    switch (f) {
        case Family::AhmedScarf:
        case Family::TanhRosenMorse:
            return;  // entire line
        case Family::CothEckart:
        case Family::PoschlTellerC1:
        case Family::PoschlTellerC2:
        case Family::CoulombC:
            if (x <= 0.0) throw DomainError("half-line family needs x > 0");
            check_pole_distance(x, x);
            return;
        case Family::TanTrig: {
            const double edge = pi() / (2.0 * alpha);
            if (x <= -edge || x >= edge) throw DomainError("x outside (-pi/2a, pi/2a)");
            check_pole_distance(std::min(edge - x, x + edge), x);
            return;
        }
        case Family::CotTrig: {
            const double edge = pi() / alpha;
            if (x <= 0.0 || x >= edge) throw DomainError("x outside (0, pi/a)");
            check_pole_distance(std::min(x, edge - x), x);
            return;
        }
    }
}

}  // namespace

Complex eval_superpotential_eff(Family f, const EffectiveParams& p, double alpha, double x) {
    check_point(f, alpha, x);
    switch (f) {
        case Family::AhmedScarf:
            return p.a * std::tanh(alpha * x) + p.b / std::cosh(alpha * x);
        case Family::TanhRosenMorse:
            return p.a * std::tanh(alpha * x) + kImag * p.b / p.a;
        case Family::CothEckart:
            return -p.a / std::tanh(alpha * x) + kImag * p.b / p.a;
        case Family::TanTrig:
            return p.a * std::tan(alpha * x) + kImag * p.b / p.a;
        case Family::CotTrig:
            return p.a / std::tan(alpha * x) + kImag * p.b / p.a;
        case Family::PoschlTellerC1:
            return p.a * std::tanh(alpha * x) + kImag * p.b / std::tanh(alpha * x);
        case Family::PoschlTellerC2:
            return kImag * p.a * std::tanh(alpha * x) + p.b / std::tanh(alpha * x);
        case Family::CoulombC:
            return kImag * p.a / x + p.b;
    }
    throw Error("unknown family");
}

Complex superpotential_derivative_eff(Family f, const EffectiveParams& p, double alpha,
                                      double x) {
    check_point(f, alpha, x);
    switch (f) {
        case Family::AhmedScarf: {
            const double s = 1.0 / std::cosh(alpha * x);
            const double t = std::tanh(alpha * x);
            return alpha * p.a * s * s - alpha * p.b * s * t;
        }
        case Family::TanhRosenMorse: {
            const double s = 1.0 / std::cosh(alpha * x);
            return alpha * p.a * s * s;
        }
        case Family::CothEckart: {
            const double c = 1.0 / std::sinh(alpha * x);
            return alpha * p.a * c * c;
        }
        case Family::TanTrig: {
            const double s = 1.0 / std::cos(alpha * x);
            return alpha * p.a * s * s;
        }
        case Family::CotTrig: {
            const double c = 1.0 / std::sin(alpha * x);
            return -alpha * p.a * c * c;
        }
        case Family::PoschlTellerC1: {
            const double s = 1.0 / std::cosh(alpha * x);
            const double c = 1.0 / std::sinh(alpha * x);
            return alpha * p.a * s * s - kImag * alpha * p.b * c * c;
        }
        case Family::PoschlTellerC2: {
            const double s = 1.0 / std::cosh(alpha * x);
            const double c = 1.0 / std::sinh(alpha * x);
            return kImag * alpha * p.a * s * s - alpha * p.b * c * c;
        }
        case Family::CoulombC:
            return -kImag * p.a / (x * x);
    }
    throw Error("unknown family");
}

Complex eval_superpotential(const SuperpotentialSpec& spec, double x) {
    return eval_superpotential_eff(spec.family, effective_params(spec), spec.alpha, x);
}

Complex superpotential_derivative(const SuperpotentialSpec& spec, double x) {
    return superpotential_derivative_eff(spec.family, effective_params(spec), spec.alpha, x);
}

PtClass pt_condition(const SuperpotentialSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::PoschlTellerC1:
        case Family::PoschlTellerC2:
        case Family::CoulombC:
            return PtClass::NonPT;
        default:
            break;
    }
    if (spec.C == 0.0) return PtClass::UnbrokenPT;

    // C != 0: the product condition C (2A +- alpha) = 0 must hold through
    // its second factor. AhmedScarf instead requires 2(A - B) + alpha = 0.
    const double scale = std::abs(spec.A) + std::abs(spec.B) + spec.alpha;
    double constraint = 0.0;
    switch (spec.family) {
        case Family::AhmedScarf:
            constraint = 2.0 * (spec.A - spec.B) + spec.alpha;
            break;
        case Family::TanhRosenMorse:
        case Family::CotTrig:
            constraint = 2.0 * spec.A + spec.alpha;  // A = -alpha/2
            break;
        case Family::CothEckart:
        case Family::TanTrig:
            constraint = 2.0 * spec.A - spec.alpha;  // A = +alpha/2
            break;
        default:
            break;
    }
    return std::abs(constraint) <= kExactTol * scale ? PtClass::BrokenPT : PtClass::NonPT;
}

GeneralPtResult general_pt_condition(double A, double B, double C, double D, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double scale = std::abs(A) + std::abs(B) + std::abs(C) + std::abs(D) + alpha;
    const double two_a = 2.0 * A + alpha;

    if (std::abs(C) <= kExactTol * scale) {
        // First condition forces D = 0; A and B stay unrestricted.
        if (std::abs(D) <= kExactTol * scale) return {PtClass::UnbrokenPT, 0.0, 0.0};
        return {PtClass::NonPT, 0.0, D};
    }
    if (std::abs(two_a) <= kExactTol * scale) {
        throw DivisionError("2A + alpha = 0 with C != 0");
    }
    const double d_required = 2.0 * B * C / two_a;
    const bool second = std::abs(two_a * two_a - 4.0 * B * B) <= kExactTol * scale * scale;
    const bool first = std::abs(D - d_required) <= kExactTol * scale;
    if (second && first) return {PtClass::BrokenPT, C, d_required};
    return {PtClass::NonPT, C, d_required};
}

AhmedCoefficients ahmed_coefficients(const SuperpotentialSpec& spec) {
    if (spec.family != Family::AhmedScarf) {
        throw NotPtError("ahmed_coefficients needs an AhmedScarf spec");
    }
    const PtClass cls = pt_condition(spec);
    if (cls == PtClass::NonPT) {
        throw NotPtError("parameters violate the PT condition");
    }
    const double A = spec.A, B = spec.B, C = spec.C, al = spec.alpha;
    if (cls == PtClass::UnbrokenPT) {
        return {A * (A + al) + B * B, -B * (2.0 * A + al)};
    }
    const double v1 = 2.0 * A * (A + al) - 2.0 * C * C + 0.25 * al * al;
    const double v2 = -(2.0 * A * (A + al) + 2.0 * C * C + 0.5 * al * al);
    return {v1, v2};
}

SpectralPhase phase_from_coefficients(double V1, double V2) {
    return std::abs(V2) <= V1 + 0.25 ? SpectralPhase::Real : SpectralPhase::ComplexConjugate;
}

Complex asymptotic_energy_offset(const SuperpotentialSpec& spec) {
    const EffectiveParams p = effective_params(spec);
    switch (spec.family) {
        case Family::AhmedScarf:
            return p.a * p.a;
        case Family::TanhRosenMorse: {
            const Complex w = p.a + kImag * p.b / p.a;
            return w * w;
        }
        case Family::CothEckart: {
            const Complex w = -p.a + kImag * p.b / p.a;
            return w * w;
        }
        case Family::PoschlTellerC1: {
            const Complex w = p.a + kImag * p.b;
            return w * w;
        }
        case Family::PoschlTellerC2: {
            const Complex w = kImag * p.a + p.b;
            return w * w;
        }
        case Family::CoulombC:
            return p.b * p.b;
        case Family::TanTrig:
        case Family::CotTrig:
            throw UnboundedError("W diverges at the domain edge");
    }
    throw Error("unknown family");
}

}  // namespace susypt
