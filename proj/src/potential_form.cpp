#include "susypt/potential_form.hpp"

#include <cmath>
#include <limits>

namespace susypt {

namespace {

constexpr double kPoleGuard = 1e-8;
const double kPi = 3.14159265358979323846;
const double kInf = std::numeric_limits<double>::infinity();

// Distance from x to the nearest pole of one basis function (infinity when
// the term has none).
double pole_distance(BasisFn b, double alpha, double x) {
    switch (b) {
        case BasisFn::SechSq:
        case BasisFn::SechTanh:
        case BasisFn::Tanh:
            return kInf;
        case BasisFn::CschSq:
        case BasisFn::Coth:
            return std::abs(x);
        case BasisFn::SecSq:
        case BasisFn::Tan: {
            const double period = kPi / alpha;
            const double edge = 0.5 * period;
            const double k = std::round((x - edge) / period);
            return std::abs(x - (edge + k * period));
        }
        case BasisFn::CscSq:
        case BasisFn::Cot: {
            const double period = kPi / alpha;
            const double k = std::round(x / period);
            return std::abs(x - k * period);
        }
        case BasisFn::InvR2:
        case BasisFn::InvR:
            return std::abs(x);
    }
    return kInf;
}

double basis_value(BasisFn b, double alpha, double x) {
    switch (b) {
        case BasisFn::SechSq: {
            const double s = 1.0 / std::cosh(alpha * x);
            return s * s;
        }
        case BasisFn::SechTanh:
            return std::tanh(alpha * x) / std::cosh(alpha * x);
        case BasisFn::CschSq: {
            const double c = 1.0 / std::sinh(alpha * x);
            return c * c;
        }
        case BasisFn::Coth:
            return 1.0 / std::tanh(alpha * x);
        case BasisFn::Tanh:
            return std::tanh(alpha * x);
        case BasisFn::SecSq: {
            const double s = 1.0 / std::cos(alpha * x);
            return s * s;
        }
        case BasisFn::Tan:
            return std::tan(alpha * x);
        case BasisFn::CscSq: {
            const double c = 1.0 / std::sin(alpha * x);
            return c * c;
        }
        case BasisFn::Cot:
            return 1.0 / std::tan(alpha * x);
        case BasisFn::InvR2:
            return 1.0 / (x * x);
        case BasisFn::InvR:
            return 1.0 / x;
    }
    return 0.0;
}

bool basis_legal(BasisFn b, DomainKind k) {
    switch (k) {
        case DomainKind::FullLine:
            return b == BasisFn::SechSq || b == BasisFn::SechTanh || b == BasisFn::Tanh;
        case DomainKind::HalfLine:
            return b == BasisFn::SechSq || b == BasisFn::SechTanh || b == BasisFn::Tanh ||
                   b == BasisFn::CschSq || b == BasisFn::Coth || b == BasisFn::InvR2 ||
                   b == BasisFn::InvR;
        case DomainKind::IntervalSymmetric:
            return b == BasisFn::SecSq || b == BasisFn::Tan;
        case DomainKind::IntervalZeroPi:
            return b == BasisFn::CscSq || b == BasisFn::Cot;
    }
    return false;
}

Domain family_domain(Family f, double alpha) {
    switch (f) {
        case Family::AhmedScarf:
        case Family::TanhRosenMorse:
            return {DomainKind::FullLine, alpha};
        case Family::CothEckart:
        case Family::PoschlTellerC1:
        case Family::PoschlTellerC2:
        case Family::CoulombC:
            return {DomainKind::HalfLine, alpha};
        case Family::TanTrig:
            return {DomainKind::IntervalSymmetric, alpha};
        case Family::CotTrig:
            return {DomainKind::IntervalZeroPi, alpha};
    }
    return {DomainKind::FullLine, alpha};
}

void check_coefficient(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw DomainError("non-finite coefficient in potential form");
    }
}

}  // namespace

double Domain::lower() const {
    switch (kind) {
        case DomainKind::FullLine: return -kInf;
        case DomainKind::HalfLine: return 0.0;
        case DomainKind::IntervalSymmetric: return -0.5 * kPi / alpha;
        case DomainKind::IntervalZeroPi: return 0.0;
    }
    return -kInf;
}

double Domain::upper() const {
    switch (kind) {
        case DomainKind::FullLine: return kInf;
        case DomainKind::HalfLine: return kInf;
        case DomainKind::IntervalSymmetric: return 0.5 * kPi / alpha;
        case DomainKind::IntervalZeroPi: return kPi / alpha;
    }
    return kInf;
}

bool Domain::contains(double x) const { return x > lower() && x < upper(); }

bool Domain::symmetric_about_origin() const {
    return kind == DomainKind::FullLine || kind == DomainKind::IntervalSymmetric;
}

std::string to_string(BasisFn b) {
    switch (b) {
        case BasisFn::SechSq: return "sech^2";
        case BasisFn::SechTanh: return "sech*tanh";
        case BasisFn::CschSq: return "csch^2";
        case BasisFn::Coth: return "coth";
        case BasisFn::Tanh: return "tanh";
        case BasisFn::SecSq: return "sec^2";
        case BasisFn::Tan: return "tan";
        case BasisFn::CscSq: return "csc^2";
        case BasisFn::Cot: return "cot";
        case BasisFn::InvR2: return "1/r^2";
        case BasisFn::InvR: return "1/r";
    }
    return "?";
}

std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::FullLine: return "full line";
        case DomainKind::HalfLine: return "half line";
        case DomainKind::IntervalSymmetric: return "(-pi/2a, pi/2a)";
        case DomainKind::IntervalZeroPi: return "(0, pi/a)";
    }
    return "?";
}

double distance_to_singularity(const PotentialForm& form, double x) {
    double d = kInf;
    for (const auto& [b, c] : form.coefficients) {
        (void)c;
        d = std::min(d, pole_distance(b, form.alpha, x));
    }
    return d;
}

Complex eval_potential(const PotentialForm& form, double x) {
    if (!form.domain.contains(x)) {
        throw DomainError("x = " + std::to_string(x) + " outside the form's domain");
    }
    Complex v = form.constant;
    for (const auto& [b, c] : form.coefficients) {
        if (pole_distance(b, form.alpha, x) < kPoleGuard) {
            throw DomainError("evaluation within 1e-8 of a pole");
        }
        v += c * basis_value(b, form.alpha, x);
    }
    return v;
}

Eigen::VectorXcd eval_potential(const PotentialForm& form, const Eigen::VectorXd& xs) {
    Eigen::VectorXcd out(xs.size());
    for (Eigen::Index i = 0; i < xs.size(); ++i) out[i] = eval_potential(form, xs[i]);
    return out;
}

std::pair<PotentialForm, PotentialForm> build_partner_potentials_eff(Family f,
                                                                     const EffectiveParams& p,
                                                                     double alpha) {
    PotentialForm vm, vp;
    vm.alpha = vp.alpha = alpha;
    vm.domain = vp.domain = family_domain(f, alpha);
    const Complex a = p.a, b = p.b;
    const double al = alpha;

    switch (f) {
        case Family::AhmedScarf:
            vm.constant = vp.constant = a * a;
            vm.coefficients[BasisFn::SechSq] = b * b - a * (a + al);
            vm.coefficients[BasisFn::SechTanh] = b * (2.0 * a + al);
            vp.coefficients[BasisFn::SechSq] = b * b - a * (a - al);
            vp.coefficients[BasisFn::SechTanh] = b * (2.0 * a - al);
            break;
        case Family::TanhRosenMorse:
            vm.constant = vp.constant = a * a - b * b / (a * a);
            vm.coefficients[BasisFn::SechSq] = -a * (a + al);
            vp.coefficients[BasisFn::SechSq] = -a * (a - al);
            vm.coefficients[BasisFn::Tanh] = vp.coefficients[BasisFn::Tanh] = 2.0 * kImag * b;
            break;
        case Family::CothEckart:
            vm.constant = vp.constant = a * a - b * b / (a * a);
            vm.coefficients[BasisFn::CschSq] = a * (a - al);
            vp.coefficients[BasisFn::CschSq] = a * (a + al);
            vm.coefficients[BasisFn::Coth] = vp.coefficients[BasisFn::Coth] = -2.0 * kImag * b;
            break;
        case Family::TanTrig:
            vm.constant = vp.constant = -a * a - b * b / (a * a);
            vm.coefficients[BasisFn::SecSq] = a * (a - al);
            vp.coefficients[BasisFn::SecSq] = a * (a + al);
            vm.coefficients[BasisFn::Tan] = vp.coefficients[BasisFn::Tan] = 2.0 * kImag * b;
            break;
        case Family::CotTrig:
            vm.constant = vp.constant = -a * a - b * b / (a * a);
            vm.coefficients[BasisFn::CscSq] = a * (a + al);
            vp.coefficients[BasisFn::CscSq] = a * (a - al);
            vm.coefficients[BasisFn::Cot] = vp.coefficients[BasisFn::Cot] = 2.0 * kImag * b;
            break;
        case Family::PoschlTellerC1: {
            const Complex w = a + kImag * b;
            vm.constant = vp.constant = w * w;
            vm.coefficients[BasisFn::SechSq] = -a * (a + al);
            vp.coefficients[BasisFn::SechSq] = -a * (a - al);
            vm.coefficients[BasisFn::CschSq] = -b * (b - kImag * al);
            vp.coefficients[BasisFn::CschSq] = -b * (b + kImag * al);
            break;
        }
        case Family::PoschlTellerC2: {
            const Complex w = b + kImag * a;
            vm.constant = vp.constant = w * w;
            vm.coefficients[BasisFn::SechSq] = a * (a - kImag * al);
            vp.coefficients[BasisFn::SechSq] = a * (a + kImag * al);
            vm.coefficients[BasisFn::CschSq] = b * (b + al);
            vp.coefficients[BasisFn::CschSq] = b * (b - al);
            break;
        }
        case Family::CoulombC:
            vm.constant = vp.constant = b * b;
            vm.coefficients[BasisFn::InvR2] = -a * (a - kImag);
            vp.coefficients[BasisFn::InvR2] = -a * (a + kImag);
            vm.coefficients[BasisFn::InvR] = vp.coefficients[BasisFn::InvR] =
                2.0 * kImag * a * b;
            break;
    }
    for (const PotentialForm* form : {&vm, &vp}) {
        for (const auto& [bn, c] : form->coefficients) {
            check_coefficient(c);
            if (!basis_legal(bn, form->domain.kind)) {
                throw DomainError("basis function " + to_string(bn) +
                                  " not legal on domain " + to_string(form->domain.kind));
            }
        }
    }
    return {vm, vp};
}

std::pair<PotentialForm, PotentialForm> build_partner_potentials(
    const SuperpotentialSpec& spec) {
    return build_partner_potentials_eff(spec.family, effective_params(spec), spec.alpha);
}

PotentialForm ahmed_potential_form(double V1, double V2, double alpha) {
    PotentialForm form;
    form.alpha = alpha;
    form.domain = {DomainKind::FullLine, alpha};
    form.coefficients[BasisFn::SechSq] = Complex(-V1, 0.0);
    form.coefficients[BasisFn::SechTanh] = Complex(0.0, -V2);
    return form;
}

PtCheckResult pt_symmetry_check(const PotentialForm& form, const Eigen::VectorXd& probe) {
    if (!form.domain.symmetric_about_origin()) {
        throw DomainError("PT check needs a domain symmetric about the origin");
    }
    double worst = 0.0;
    for (Eigen::Index i = 0; i < probe.size(); ++i) {
        const double x = probe[i];
        const Complex here = eval_potential(form, x) - form.constant;
        const Complex mirrored = eval_potential(form, -x) - form.constant;
        worst = std::max(worst, std::abs(std::conj(mirrored) - here));
    }
    return {worst, 2.0 * std::abs(form.constant.imag())};
}

}  // namespace susypt
