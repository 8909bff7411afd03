#include "susypt/wavefunctions.hpp"

#include <cmath>

#include "susypt/fd_stencils.hpp"
#include "susypt/jacobi.hpp"
#include "susypt/potential_form.hpp"
#include "susypt/shape_invariance.hpp"

namespace susypt {

namespace {

// exp(c * log(x)) for strictly positive x; avoids pow's branch ambiguity.
Complex cpow_pos(double x, Complex c) { return std::exp(c * std::log(x)); }

void check_grid(const Eigen::VectorXd& grid) {
    if (grid.size() < 5) throw DomainError("grid too small");
    for (Eigen::Index i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) throw DomainError("grid must be strictly increasing");
    }
}

// n-step chain parameters for the closed forms.
EffectiveParams chain_params(Family f, const EffectiveParams& p0, double alpha, int n) {
    EffectiveParams p = p0;
    for (int k = 0; k < n; ++k) p = parameter_step_eff(f, p, alpha).next;
    return p;
}

// Ground-state weight exp(-integral W) at explicit parameters.
Complex ground_state_value(Family f, const EffectiveParams& p, double alpha, double x) {
    switch (f) {
        case Family::AhmedScarf: {
            const double g = std::atan(std::sinh(alpha * x));
            return cpow_pos(1.0 / std::cosh(alpha * x), p.a / alpha) *
                   std::exp(-(p.b / alpha) * g);
        }
        case Family::TanhRosenMorse:
            return cpow_pos(std::cosh(alpha * x), -p.a / alpha) *
                   std::exp(-kImag * p.b * x / p.a);
        case Family::CothEckart:
            return cpow_pos(std::sinh(alpha * x), p.a / alpha) *
                   std::exp(-kImag * p.b * x / p.a);
        case Family::TanTrig:
            return cpow_pos(std::cos(alpha * x), p.a / alpha) *
                   std::exp(-kImag * p.b * x / p.a);
        case Family::CotTrig:
            return cpow_pos(std::sin(alpha * x), -p.a / alpha) *
                   std::exp(-kImag * p.b * x / p.a);
        case Family::PoschlTellerC1:
            return cpow_pos(std::cosh(alpha * x), -p.a / alpha) *
                   cpow_pos(std::sinh(alpha * x), -kImag * p.b / alpha);
        case Family::PoschlTellerC2:
            return cpow_pos(std::cosh(alpha * x), -kImag * p.a / alpha) *
                   cpow_pos(std::sinh(alpha * x), -p.b / alpha);
        case Family::CoulombC:
            return cpow_pos(x, -kImag * p.a) * std::exp(-p.b * x);
    }
    throw Error("unknown family");
}

// Closed-form psi_n = weight * polynomial(argument). The Scarf and
// Poschl-Teller forms keep base-parameter weights with level-independent
// polynomial parameters; the Rosen-Morse/Eckart/trig forms carry the n-step
// parameters in both.
Complex closed_form_value(Family f, const EffectiveParams& p0, double alpha, int n, double x) {
    const double al = alpha;
    switch (f) {
        case Family::AhmedScarf: {
            const JacobiParams jp{n, -p0.a / al - 0.5 - kImag * p0.b / al,
                                  -p0.a / al - 0.5 + kImag * p0.b / al};
            return ground_state_value(f, p0, al, x) *
                   jacobi_polynomial(jp, kImag * std::sinh(al * x));
        }
        case Family::TanhRosenMorse: {
            const EffectiveParams pn = chain_params(f, p0, al, n);
            const Complex shift = kImag * p0.b / (al * pn.a);
            const JacobiParams jp{n, pn.a / al + shift, pn.a / al - shift};
            return ground_state_value(f, pn, al, x) *
                   jacobi_polynomial(jp, std::tanh(al * x));
        }
        case Family::CothEckart: {
            const EffectiveParams pn = chain_params(f, p0, al, n);
            const Complex shift = kImag * p0.b / (al * pn.a);
            const JacobiParams jp{n, -pn.a / al + shift, -pn.a / al - shift};
            return ground_state_value(f, pn, al, x) *
                   jacobi_polynomial(jp, 1.0 / std::tanh(al * x));
        }
        case Family::TanTrig: {
            const EffectiveParams pn = chain_params(f, p0, al, n);
            const Complex shift = p0.b / (al * pn.a);
            const JacobiParams jp{n, -pn.a / al + shift, -pn.a / al - shift};
            return ground_state_value(f, pn, al, x) *
                   jacobi_polynomial(jp, kImag * std::tan(al * x));
        }
        case Family::CotTrig: {
            const EffectiveParams pn = chain_params(f, p0, al, n);
            const Complex shift = p0.b / (al * pn.a);
            const JacobiParams jp{n, pn.a / al - shift, pn.a / al + shift};
            return ground_state_value(f, pn, al, x) *
                   jacobi_polynomial(jp, kImag / std::tan(al * x));
        }
        case Family::PoschlTellerC1: {
            const JacobiParams jp{n, -kImag * p0.b / al - 0.5, -p0.a / al - 0.5};
            return ground_state_value(f, p0, al, x) *
                   jacobi_polynomial(jp, std::cosh(2.0 * al * x));
        }
        case Family::PoschlTellerC2: {
            const JacobiParams jp{n, -p0.b / al - 0.5, -kImag * p0.a / al - 0.5};
            return ground_state_value(f, p0, al, x) *
                   jacobi_polynomial(jp, std::cosh(2.0 * al * x));
        }
        case Family::CoulombC: {
            const Complex gamma = p0.a * p0.b;
            const Complex bn = gamma / (p0.a + kImag * static_cast<double>(n));
            return cpow_pos(x, -kImag * p0.a) * std::exp(-bn * x) *
                   laguerre_polynomial(n, -2.0 * kImag * p0.a - 1.0, 2.0 * bn * x);
        }
    }
    throw Error("unknown family");
}

WaveFunctionSample apply_ladder(Family f, const EffectiveParams& p, double alpha,
                                const WaveFunctionSample& psi, double sign) {
    check_grid(psi.grid);
    const double h = uniform_spacing(psi.grid);
    check_oscillation_scale(psi.values);
    Eigen::VectorXcd w(psi.grid.size());
    for (Eigen::Index i = 0; i < psi.grid.size(); ++i) {
        w[i] = eval_superpotential_eff(f, p, alpha, psi.grid[i]);
    }
    WaveFunctionSample out;
    out.grid = psi.grid;
    out.level = psi.level;
    out.branch = psi.branch;
    out.values = sign * derivative4(psi.values, h) + w.cwiseProduct(psi.values);
    return out;
}

void enforce_level_bound(const SuperpotentialSpec& spec, int n) {
    const std::optional<int> bound = normalizability_bound(spec);
    if (bound.has_value() && n > *bound) {
        throw TruncationError("level " + std::to_string(n) +
                              " exceeds the normalizability bound");
    }
}

}  // namespace

WaveFunctionSample ground_state_from_W_eff(Family f, const EffectiveParams& p, double alpha,
                                           const Eigen::VectorXd& grid) {
    check_grid(grid);
    WaveFunctionSample out;
    out.grid = grid;
    out.level = 0;
    out.values.resize(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        out.values[i] = ground_state_value(f, p, alpha, grid[i]);
        if (!std::isfinite(out.values[i].real()) || !std::isfinite(out.values[i].imag())) {
            throw DomainError("ground state not finite on the grid");
        }
    }
    return out;
}

WaveFunctionSample ground_state_from_W(const SuperpotentialSpec& spec,
                                       const Eigen::VectorXd& grid) {
    WaveFunctionSample out =
        ground_state_from_W_eff(spec.family, effective_params(spec), spec.alpha, grid);
    out.branch = spec.branch;
    return out;
}

WaveFunctionSample eigenfunction_closed_form(const SuperpotentialSpec& spec, int n,
                                             const Eigen::VectorXd& grid, bool enforce_bound) {
    if (n < 0) throw DomainError("level must be nonnegative");
    check_grid(grid);
    if (enforce_bound) enforce_level_bound(spec, n);
    const EffectiveParams p0 = effective_params(spec);
    WaveFunctionSample out;
    out.grid = grid;
    out.level = n;
    out.branch = spec.branch;
    out.values.resize(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        out.values[i] = closed_form_value(spec.family, p0, spec.alpha, n, grid[i]);
        if (!std::isfinite(out.values[i].real()) || !std::isfinite(out.values[i].imag())) {
            throw FormMismatchError("closed form not finite on the grid");
        }
    }
    return out;
}

WaveFunctionSample apply_annihilation(const SuperpotentialSpec& spec,
                                      const WaveFunctionSample& psi) {
    return apply_ladder(spec.family, effective_params(spec), spec.alpha, psi, +1.0);
}

WaveFunctionSample apply_creation(const SuperpotentialSpec& spec,
                                  const WaveFunctionSample& psi) {
    return apply_ladder(spec.family, effective_params(spec), spec.alpha, psi, -1.0);
}

WaveFunctionSample apply_creation_eff(Family f, const EffectiveParams& p, double alpha,
                                      const WaveFunctionSample& psi) {
    return apply_ladder(f, p, alpha, psi, -1.0);
}

WaveFunctionSample ladder_construct(const SuperpotentialSpec& spec, int n,
                                    const Eigen::VectorXd& grid, bool enforce_bound) {
    if (n < 0) throw DomainError("level must be nonnegative");
    if (enforce_bound) enforce_level_bound(spec, n);
    const EffectiveParams p0 = effective_params(spec);
    std::vector<EffectiveParams> rungs(1, p0);
    for (int k = 0; k < n; ++k) {
        rungs.push_back(parameter_step_eff(spec.family, rungs.back(), spec.alpha).next);
    }
    WaveFunctionSample psi =
        ground_state_from_W_eff(spec.family, rungs[n], spec.alpha, grid);
    for (int k = n - 1; k >= 0; --k) {
        psi = apply_creation_eff(spec.family, rungs[k], spec.alpha, psi);
    }
    psi.level = n;
    psi.branch = spec.branch;
    return psi;
}

double optimal_scalar_deviation(const WaveFunctionSample& u, const WaveFunctionSample& v) {
    if (u.grid.size() != v.grid.size()) throw DomainError("samples on different grids");
    const Complex num = (v.values.conjugate().cwiseProduct(u.values)).sum();
    const double den = v.values.squaredNorm();
    if (den == 0.0) throw DomainError("reference sample is identically zero");
    const Complex lambda = num / den;
    const double peak = u.values.cwiseAbs().maxCoeff();
    if (peak == 0.0) return 0.0;
    return (u.values - lambda * v.values).cwiseAbs().maxCoeff() / peak;
}

double pt_partner_residual(const WaveFunctionSample& plus, const WaveFunctionSample& minus) {
    if (plus.grid.size() != minus.grid.size()) throw DomainError("samples on different grids");
    const Eigen::Index n = plus.grid.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(plus.grid[i] + plus.grid[n - 1 - i]) > 1e-9 ||
            std::abs(plus.grid[i] - minus.grid[i]) > 1e-9) {
            throw DomainError("PT residual needs matching grids symmetric about 0");
        }
    }
    WaveFunctionSample ref;
    ref.grid = plus.grid;
    ref.values = minus.values.reverse().conjugate();
    return optimal_scalar_deviation(plus, ref);
}

bool normalizability_check(const WaveFunctionSample& psi) {
    check_grid(psi.grid);
    const Eigen::Index n = psi.grid.size();
    const Eigen::VectorXd p = psi.values.cwiseAbs2();

    auto trapezoid = [&](Eigen::Index lo, Eigen::Index hi) {
        double acc = 0.0;
        for (Eigen::Index i = lo; i < hi; ++i) {
            acc += 0.5 * (p[i] + p[i + 1]) * (psi.grid[i + 1] - psi.grid[i]);
        }
        return acc;
    };

    const double total = trapezoid(0, n - 1);
    if (total <= 0.0) return false;
    const double boundary = 0.5 * (p[0] + p[1]) * (psi.grid[1] - psi.grid[0]) +
                            0.5 * (p[n - 2] + p[n - 1]) * (psi.grid[n - 1] - psi.grid[n - 2]);
    if (boundary / total >= 1e-6) return false;

    // Nested-domain agreement: the inner 80% must carry the norm to 1%.
    const Eigen::Index margin = n / 10;
    const double inner = trapezoid(margin, n - 1 - margin);
    return std::abs(total - inner) / total < 0.01;
}

}  // namespace susypt
