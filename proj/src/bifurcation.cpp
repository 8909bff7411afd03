#include "susypt/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace susypt {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUSYPT_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Conjugate pairing among the eigenvalues with |Im| >= tol_im.
bool pair_up(const std::vector<Complex>& vals, double pair_tol, int* pairs,
             std::string* detail) {
    std::vector<bool> used(vals.size(), false);
    int count = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i]) continue;
        int best = -1;
        double best_d = pair_tol;
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(vals[i] - std::conj(vals[j]));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) {
            if (detail) {
                *detail = "no conjugate partner for (" + std::to_string(vals[i].real()) +
                          ", " + std::to_string(vals[i].imag()) + ")";
            }
            return false;
        }
        used[i] = used[best] = true;
        ++count;
    }
    *pairs = count;
    return true;
}

}  // namespace

std::string to_string(SpectrumClassKind k) {
    switch (k) {
        case SpectrumClassKind::Real: return "Real";
        case SpectrumClassKind::ComplexPaired: return "ComplexPaired";
        case SpectrumClassKind::Unpaired: return "Unpaired";
    }
    return "?";
}

SpectrumClass classify_spectrum(const Eigen::VectorXcd& localized, double tol_im,
                                double pair_tol) {
    SpectrumClass cls;
    cls.max_im = 0.0;
    std::vector<Complex> big;
    for (Eigen::Index i = 0; i < localized.size(); ++i) {
        cls.max_im = std::max(cls.max_im, std::abs(localized[i].imag()));
        if (std::abs(localized[i].imag()) >= tol_im) big.push_back(localized[i]);
    }
    cls.near_critical = cls.max_im >= 0.5 * tol_im && cls.max_im <= 2.0 * tol_im;
    if (big.empty()) {
        cls.kind = SpectrumClassKind::Real;
        return cls;
    }
    int pairs = 0;
    if (pair_up(big, pair_tol, &pairs, &cls.detail)) {
        cls.kind = SpectrumClassKind::ComplexPaired;
        cls.pair_count = pairs;
    } else {
        cls.kind = SpectrumClassKind::Unpaired;
    }
    return cls;
}

namespace {

ScanRecord run_sample(double V1, double V2, const ScanConfig& config) {
    ScanRecord rec;
    rec.V1 = V1;
    rec.V2 = V2;
    try {
        const PotentialForm form = ahmed_potential_form(V1, V2);
        const HamiltonianMatrix H = discretize_hamiltonian(form, config.grid);
        const EigenDecomposition decomp = eigen_all(H, true);
        const EigenDecomposition localized =
            localization_filter(decomp, config.grid, config.edge_fraction, config.mass_tol);
        rec.localized_count = static_cast<int>(localized.eigenvalues.size());
        rec.cls = classify_spectrum(localized.eigenvalues, config.tol_im, config.pair_tol);
        rec.max_im = rec.cls.max_im;
    } catch (const Error& err) {
        rec.failed = true;
        rec.error = err.what();
    }
    return rec;
}

}  // namespace

std::vector<ScanRecord> parameter_sweep(double V1, double v2_min, double v2_max, int steps,
                                        const ScanConfig& config) {
    if (steps < 1) throw DomainError("sweep needs at least one sample");
    if (!(v2_min <= v2_max)) throw DomainError("sweep needs v2_min <= v2_max");
    config.grid.validate();

    std::vector<double> v2s(steps);
    for (int i = 0; i < steps; ++i) {
        v2s[i] = steps == 1 ? v2_min
                            : v2_min + (v2_max - v2_min) * static_cast<double>(i) /
                                           static_cast<double>(steps - 1);
    }

    std::vector<ScanRecord> records(steps);
    const int workers = std::min(resolve_threads(config.threads), steps);
    if (workers <= 1) {
        for (int i = 0; i < steps; ++i) records[i] = run_sample(V1, v2s[i], config);
        return records;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= steps) return;
                records[i] = run_sample(V1, v2s[i], config);
            }
        });
    }
    for (auto& t : pool) t.join();
    return records;
}

namespace {

// Classification for the bisection: eigenvalues only, then inverse iteration
// on the candidates with |Im| >= tol_im. Equivalent to the full pipeline for
// the Real / ComplexPaired decision, because states below tol_im never
// affect it, and it avoids materializing every eigenvector on large boxes.
bool classify_is_complex(double V1, double V2, const ScanConfig& config) {
    const PotentialForm form = ahmed_potential_form(V1, V2);
    const HamiltonianMatrix H = discretize_hamiltonian(form, config.grid);
    const EigenDecomposition decomp = eigen_all(H, false);

    const Eigen::VectorXd xi = config.grid.interior();
    const double L = config.grid.x_max - config.grid.x_min;
    const double lo_edge = config.grid.x_min + config.edge_fraction * L;
    const double hi_edge = config.grid.x_max - config.edge_fraction * L;

    std::vector<Complex> kept;
    for (int k = 0; k < decomp.eigenvalues.size(); ++k) {
        const Complex lam = decomp.eigenvalues[k];
        if (std::abs(lam.imag()) < config.tol_im) continue;
        const Eigen::VectorXd p = eigenvector_for(H, lam).cwiseAbs2();
        double total = 0.0, edge = 0.0;
        for (Eigen::Index i = 0; i < xi.size(); ++i) {
            total += p[i];
            if (xi[i] < lo_edge || xi[i] > hi_edge) edge += p[i];
        }
        if (total > 0.0 && edge / total < config.mass_tol) kept.push_back(lam);
    }
    if (kept.empty()) return false;
    Eigen::VectorXcd vals(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) vals[i] = kept[i];
    return classify_spectrum(vals, config.tol_im, config.pair_tol).kind ==
           SpectrumClassKind::ComplexPaired;
}

}  // namespace

double critical_point(double V1, double lo, double hi, double tol_param,
                      const ScanConfig& config) {
    if (!(lo < hi)) throw DomainError("bracket needs lo < hi");
    if (!(tol_param > 0.0)) throw DomainError("tolerance must be positive");

    auto is_complex = [&](double V2) { return classify_is_complex(V1, V2, config); };

    const bool at_lo = is_complex(lo);
    const bool at_hi = is_complex(hi);
    if (at_lo == at_hi) {
        throw NoSignChangeError("both bracket ends classify alike");
    }
    double a = lo, b = hi;
    while (b - a > tol_param) {
        const double mid = 0.5 * (a + b);
        if (is_complex(mid) == at_lo) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

SpectrumClassKind susy_phase_prediction(const SuperpotentialSpec& spec) {
    if (spec.family != Family::AhmedScarf) {
        throw NotPtError("prediction defined for AhmedScarf specs");
    }
    const PtClass cls = pt_condition(spec);
    if (cls == PtClass::NonPT) throw NotPtError("parameters violate the PT condition");
    return cls == PtClass::UnbrokenPT ? SpectrumClassKind::Real
                                      : SpectrumClassKind::ComplexPaired;
}

}  // namespace susypt
