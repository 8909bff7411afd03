#include "susypt/shape_invariance.hpp"

#include <cmath>

#include "susypt/potential_form.hpp"

namespace susypt {

namespace {

constexpr int kChainCap = 4096;  // hard stop for unbounded towers

EffectiveParams step_params(Family f, const EffectiveParams& p, double alpha) {
    switch (f) {
        case Family::AhmedScarf:
        case Family::TanhRosenMorse:
            return {p.a - alpha, p.b};
        case Family::CothEckart:
        case Family::TanTrig:
            return {p.a + alpha, p.b};
        case Family::CotTrig:
            return {p.a - alpha, p.b};
        case Family::PoschlTellerC1:
            return {p.a - alpha, p.b + kImag * alpha};
        case Family::PoschlTellerC2:
            return {p.a + kImag * alpha, p.b - alpha};
        case Family::CoulombC: {
            const Complex gamma = p.a * p.b;
            const Complex an = p.a + kImag;
            return {an, gamma / an};
        }
    }
    throw Error("unknown family");
}

void check_effective(Family f, const EffectiveParams& p) {
    switch (f) {
        case Family::TanhRosenMorse:
        case Family::CothEckart:
        case Family::TanTrig:
        case Family::CotTrig:
        case Family::CoulombC:
            if (std::abs(p.a) < 1e-14) {
                throw DomainError("chain parameter hit a = 0 (singular 1/a term)");
            }
            break;
        default:
            break;
    }
}

}  // namespace

Complex family_constant(Family f, const EffectiveParams& p, double alpha) {
    (void)alpha;
    check_effective(f, p);
    switch (f) {
        case Family::AhmedScarf:
            return p.a * p.a;
        case Family::TanhRosenMorse:
        case Family::CothEckart:
            return p.a * p.a - p.b * p.b / (p.a * p.a);
        case Family::TanTrig:
        case Family::CotTrig:
            return -p.a * p.a - p.b * p.b / (p.a * p.a);
        case Family::PoschlTellerC1: {
            const Complex w = p.a + kImag * p.b;
            return w * w;
        }
        case Family::PoschlTellerC2: {
            const Complex w = p.b + kImag * p.a;
            return w * w;
        }
        case Family::CoulombC:
            return p.b * p.b;
    }
    throw Error("unknown family");
}

ParameterStep parameter_step_eff(Family f, const EffectiveParams& p, double alpha) {
    const EffectiveParams next = step_params(f, p, alpha);
    check_effective(f, next);
    const Complex remainder =
        family_constant(f, p, alpha) - family_constant(f, next, alpha);
    return {next, remainder};
}

ParameterStep parameter_step(const SuperpotentialSpec& spec) {
    return parameter_step_eff(spec.family, effective_params(spec), spec.alpha);
}

double verify_shape_invariance(const SuperpotentialSpec& spec, const Eigen::VectorXd& grid) {
    const EffectiveParams p0 = effective_params(spec);
    const ParameterStep step = parameter_step_eff(spec.family, p0, spec.alpha);
    const auto [vm0, vp0] = build_partner_potentials_eff(spec.family, p0, spec.alpha);
    const auto [vm1, vp1] = build_partner_potentials_eff(spec.family, step.next, spec.alpha);
    (void)vm0;
    (void)vp1;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const Complex lhs = eval_potential(vp0, grid[i]);
        const Complex rhs = eval_potential(vm1, grid[i]) + step.remainder;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::vector<Complex> chain_energies(const SuperpotentialSpec& spec, int n_max) {
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    std::vector<Complex> out;
    out.reserve(n_max + 1);
    out.emplace_back(0.0, 0.0);
    EffectiveParams p = effective_params(spec);
    Complex acc{0.0, 0.0};
    for (int k = 1; k <= n_max; ++k) {
        const ParameterStep s = parameter_step_eff(spec.family, p, spec.alpha);
        acc += s.remainder;
        out.push_back(acc);
        p = s.next;
    }
    return out;
}

Complex closed_form_energy(const SuperpotentialSpec& spec, int n) {
    const EffectiveParams p0 = effective_params(spec);
    EffectiveParams pn = p0;
    // The telescoped chain sum is const(a_0) - const(a_n); the n-step
    // parameters have closed forms per family.
    const double al = spec.alpha;
    const double nd = static_cast<double>(n);
    switch (spec.family) {
        case Family::AhmedScarf:
        case Family::TanhRosenMorse:
        case Family::CotTrig:
            pn.a = p0.a - nd * al;
            break;
        case Family::CothEckart:
        case Family::TanTrig:
            pn.a = p0.a + nd * al;
            break;
        case Family::PoschlTellerC1:
            pn.a = p0.a - nd * al;
            pn.b = p0.b + kImag * nd * al;
            break;
        case Family::PoschlTellerC2:
            pn.a = p0.a + kImag * nd * al;
            pn.b = p0.b - nd * al;
            break;
        case Family::CoulombC: {
            const Complex gamma = p0.a * p0.b;
            pn.a = p0.a + kImag * nd;
            pn.b = gamma / pn.a;
            break;
        }
    }
    return family_constant(spec.family, p0, al) - family_constant(spec.family, pn, al);
}

std::optional<int> normalizability_bound(const SuperpotentialSpec& spec) {
    const double al = spec.alpha;
    const EffectiveParams p0 = effective_params(spec);
    constexpr double kEdge = 1e-12;

    // Decay rate of psi_n at the domain ends; level n survives when every
    // applicable rate is strictly positive (edge states excluded).
    auto level_ok = [&](int n) -> bool {
        const double nd = static_cast<double>(n);
        switch (spec.family) {
            case Family::AhmedScarf:
                return p0.a.real() - nd * al > kEdge;
            case Family::TanhRosenMorse: {
                const Complex an = p0.a - nd * al;
                if (std::abs(an) < 1e-14) return false;
                const Complex tail = kImag * p0.b / an;
                const double plus = (an + tail).real();
                const double minus = (an - tail).real();
                return plus > kEdge && minus > kEdge;
            }
            case Family::CothEckart: {
                const Complex an = p0.a + nd * al;
                if (std::abs(an) < 1e-14) return false;
                const double inf_rate = (-an + kImag * p0.b / an).real();
                const double origin = an.real() / al;  // psi ~ x^{an/al}
                return inf_rate > kEdge && origin > -0.5 + kEdge;
            }
            case Family::TanTrig:
                return (p0.a.real() + nd * al) / al > -0.5 + kEdge;
            case Family::CotTrig:
                return (nd * al - p0.a.real()) / al > -0.5 + kEdge;
            case Family::PoschlTellerC1:
                return p0.a.real() - 2.0 * nd * al > kEdge;
            case Family::PoschlTellerC2:
                return p0.b.real() - 2.0 * nd * al > kEdge &&
                       (p0.b.real() - nd * al) / al < 0.5 - kEdge;
            case Family::CoulombC: {
                const Complex gamma = p0.a * p0.b;
                const Complex an = p0.a + kImag * nd;
                return (gamma / an).real() > kEdge;
            }
        }
        return false;
    };

    // Families whose admission improves (or stays fixed) with n have an
    // unbounded tower once the ground state is admitted.
    if (spec.family == Family::TanTrig || spec.family == Family::CotTrig ||
        spec.family == Family::CoulombC) {
        if (!level_ok(0)) return -1;
        return std::nullopt;
    }
    int last = -1;
    for (int n = 0; n < kChainCap; ++n) {
        if (!level_ok(n)) break;
        last = n;
    }
    return last;
}

AlgebraicSpectrum algebraic_spectrum(const SuperpotentialSpec& spec, int n_max) {
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    const std::optional<int> bound = normalizability_bound(spec);
    int top = n_max;
    bool truncated = false;
    if (bound.has_value() && *bound < n_max) {
        top = *bound;
        truncated = true;
    }
    AlgebraicSpectrum out;
    out.truncated = truncated;
    out.offset = family_constant(spec.family, effective_params(spec), spec.alpha);
    if (top < 0) return out;
    const std::vector<Complex> chain = chain_energies(spec, top);
    out.entries.reserve(top + 1);
    for (int n = 0; n <= top; ++n) out.entries.emplace_back(n, chain[n]);
    return out;
}

std::vector<Complex> level_spacings(const AlgebraicSpectrum& spectrum) {
    if (spectrum.entries.size() < 2) {
        throw DomainError("level_spacings needs at least two entries");
    }
    std::vector<Complex> out;
    out.reserve(spectrum.entries.size() - 1);
    for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
        out.push_back(spectrum.entries[i].second - spectrum.entries[i - 1].second);
    }
    return out;
}

bool conjugate_pairing_check(const SuperpotentialSpec& spec, int n_max) {
    if (pt_condition(spec) != PtClass::BrokenPT) {
        throw NotBrokenError("conjugate pairing is defined in the broken phase only");
    }
    SuperpotentialSpec plus = spec, minus = spec;
    plus.branch = Branch::Plus;
    minus.branch = Branch::Minus;
    const std::vector<Complex> ep = chain_energies(plus, n_max);
    const std::vector<Complex> em = chain_energies(minus, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (std::abs(ep[n] - std::conj(em[n])) > 1e-12 * std::max(1.0, std::abs(ep[n]))) {
            return false;
        }
    }
    return true;
}

}  // namespace susypt
