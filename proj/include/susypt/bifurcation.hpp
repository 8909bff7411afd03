#ifndef SUSYPT_BIFURCATION_HPP
#define SUSYPT_BIFURCATION_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "susypt/spectral.hpp"

namespace susypt {

enum class SpectrumClassKind { Real, ComplexPaired, Unpaired };

std::string to_string(SpectrumClassKind k);

// Classification of a localized spectrum. Real: every |Im| below tol_im.
// ComplexPaired: every eigenvalue with |Im| >= tol_im has a conjugate
// partner within pair_tol. Unpaired flags anything else. near_critical marks
// max|Im| inside [tol_im/2, 2 tol_im], where the class is numerically
// marginal.
struct SpectrumClass {
    SpectrumClassKind kind = SpectrumClassKind::Real;
    int pair_count = 0;
    double max_im = 0.0;
    bool near_critical = false;
    std::string detail;
};

SpectrumClass classify_spectrum(const Eigen::VectorXcd& localized, double tol_im = 1e-2,
                                double pair_tol = 2e-2);

struct ScanRecord {
    double V1 = 0.0;
    double V2 = 0.0;
    SpectrumClass cls;
    int localized_count = 0;
    double max_im = 0.0;
    bool failed = false;
    std::string error;
};

struct ScanConfig {
    Grid grid;
    double tol_im = 1e-2;
    double pair_tol = 2e-2;
    double edge_fraction = 0.1;
    double mass_tol = 1e-6;
    // 0 resolves to SUSYPT_THREADS or the hardware count. Records come back
    // V2-sorted and bitwise identical for any thread count.
    int threads = 0;
};

// One record per V2 sample over [v2_min, v2_max] with `steps` samples
// (endpoints included). Per-sample failures are recorded and the sweep
// continues.
std::vector<ScanRecord> parameter_sweep(double V1, double v2_min, double v2_max, int steps,
                                        const ScanConfig& config);

// Bisection on V2 of the Real / ComplexPaired classification boundary.
// Throws NoSignChangeError when both bracket ends classify alike. The
// classification inside uses eigenvalues plus targeted inverse iteration on
// the candidates with |Im| >= tol_im, which is equivalent to the full
// pipeline and keeps large boxes cheap.
double critical_point(double V1, double lo, double hi, double tol_param,
                      const ScanConfig& config);

// The SUSY-side prediction for an AhmedScarf spec: Real for C = 0,
// ComplexPaired for the broken phase. Throws NotPtError on NonPT parameters.
SpectrumClassKind susy_phase_prediction(const SuperpotentialSpec& spec);

}  // namespace susypt

#endif
