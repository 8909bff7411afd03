#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "susypt/spectral.hpp"

using namespace susypt;

namespace {

SuperpotentialSpec make(Family f, double A, double B, double C, double alpha = 1.0,
                        Branch br = Branch::Plus, double beta = 0.0) {
    return {f, A, B, C, alpha, br, beta};
}

std::vector<Complex> sorted_vals(const Eigen::VectorXcd& v) {
    std::vector<Complex> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

HamiltonianMatrix random_tridiag(std::mt19937& rng, int n, bool hermitian_leaning) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    HamiltonianMatrix H;
    H.grid = Grid{0.0, 1.0, n + 2};
    H.diag.resize(n);
    for (int i = 0; i < n; ++i) {
        H.diag[i] = Complex(u(rng), hermitian_leaning ? 0.2 * u(rng) : u(rng));
    }
    H.off = Complex(u(rng), hermitian_leaning ? 0.0 : 0.3 * u(rng));
    if (std::abs(H.off) < 0.1) H.off = Complex(0.5, 0.0);
    return H;
}

}  // namespace

TEST_CASE("discretization lays out the stencil") {
    PotentialForm free;  // V == 0
    Grid g{0.0, 1.0, 11};
    const HamiltonianMatrix H = discretize_hamiltonian(free, g);
    const double h = g.spacing();
    CHECK(H.dim() == 9);
    CHECK(std::abs(H.off - Complex(-1.0 / (h * h), 0.0)) < 1e-12);
    for (int i = 0; i < H.dim(); ++i) {
        CHECK(std::abs(H.diag[i] - Complex(2.0 / (h * h), 0.0)) < 1e-9);
    }

    PotentialForm shifted;
    shifted.constant = Complex(0.5, -1.5);
    const HamiltonianMatrix Hc = discretize_hamiltonian(shifted, g);
    for (int i = 0; i < Hc.dim(); ++i) {
        CHECK(std::abs(Hc.diag[i] - Complex(2.0 / (h * h) + 0.5, -1.5)) < 1e-9);
    }

    // diagonal entries carry the potential pointwise
    const auto [vm, vp] = build_partner_potentials(make(Family::AhmedScarf, 2, 1, 0));
    (void)vp;
    Grid wide{-20.0, 20.0, 2001};
    const HamiltonianMatrix Hv = discretize_hamiltonian(vm, wide);
    const Eigen::VectorXd xi = wide.interior();
    const int mid = 999;  // x = 0
    CHECK(std::abs(xi[mid]) < 1e-12);
    const double hw = wide.spacing();
    CHECK(std::abs(Hv.diag[mid] - (2.0 / (hw * hw) + eval_potential(vm, 0.0))) < 1e-9);
}

TEST_CASE("discretization guards domain and singularities") {
    const auto [vm, vp] = build_partner_potentials(make(Family::CothEckart, -0.4, 1, 0));
    (void)vp;
    CHECK_THROWS_AS(discretize_hamiltonian(vm, Grid{-1.0, 5.0, 101}), DomainError);
    // closest interior point would sit well inside 10h of the pole at 0
    CHECK_THROWS_AS(discretize_hamiltonian(vm, Grid{0.0, 10.0, 101}), SingularityError);
    CHECK_NOTHROW(discretize_hamiltonian(vm, Grid{2.0, 10.0, 101}));
}

TEST_CASE("dense solver on hand-checkable matrices") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
    d(0, 0) = Complex(1.0, 0.0);
    d(1, 1) = Complex(0.0, 2.0);
    const EigenDecomposition dd = eigen_all(d, false);
    const std::vector<Complex> dv = sorted_vals(dd.eigenvalues);
    CHECK(std::abs(dv[0] - Complex(0.0, 2.0)) < 1e-12);
    CHECK(std::abs(dv[1] - Complex(1.0, 0.0)) < 1e-12);

    Eigen::MatrixXcd rot = Eigen::MatrixXcd::Zero(2, 2);
    rot(0, 1) = Complex(1.0, 0.0);
    rot(1, 0) = Complex(-1.0, 0.0);
    const EigenDecomposition rd = eigen_all(rot, true);
    const std::vector<Complex> rv = sorted_vals(rd.eigenvalues);
    CHECK(std::abs(rv[0] - Complex(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(rv[1] - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("tridiagonal path agrees with the dense solver on random matrices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 40);
        const HamiltonianMatrix H = random_tridiag(rng, n, trial % 2 == 0);
        const EigenDecomposition fast = eigen_all(H, false);
        const EigenDecomposition dense = eigen_all(H.dense(), false);
        const std::vector<Complex> a = sorted_vals(fast.eigenvalues);
        const std::vector<Complex> b = sorted_vals(dense.eigenvalues);
        REQUIRE(a.size() == b.size());
        double scale = 1.0;
        for (const Complex& v : b) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(std::abs(a[i] - b[i]) < 1e-9 * scale);
        }
    }
}

TEST_CASE("eigenvector residual gate holds on the tridiagonal path") {
    std::mt19937 rng(23);
    const HamiltonianMatrix H = random_tridiag(rng, 60, false);
    const EigenDecomposition full = eigen_all(H, true);
    const Eigen::MatrixXcd dense = H.dense();
    for (int k = 0; k < full.eigenvalues.size(); ++k) {
        const Eigen::VectorXcd v = full.eigenvectors.col(k);
        const double resid = (dense * v - full.eigenvalues[k] * v).norm() / v.norm();
        CHECK(resid < 1e-8);
    }
}

TEST_CASE("conjugating the matrix conjugates the spectrum") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const HamiltonianMatrix H = random_tridiag(rng, 30, false);
        HamiltonianMatrix Hc = H;
        Hc.diag = H.diag.conjugate();
        Hc.off = std::conj(H.off);
        const std::vector<Complex> a = sorted_vals(eigen_all(H, false).eigenvalues);
        std::vector<Complex> b = sorted_vals(eigen_all(Hc, false).eigenvalues);
        for (Complex& v : b) v = std::conj(v);
        std::sort(b.begin(), b.end(), [](Complex x, Complex y) {
            if (x.real() != y.real()) return x.real() < y.real();
            return x.imag() < y.imag();
        });
        double scale = 1.0;
        for (const Complex& v : a) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(std::abs(a[i] - b[i]) < 1e-9 * scale);
        }
    }
}

TEST_CASE("free particle in a box") {
    PotentialForm free;
    Grid g{0.0, 3.14159265358979323846, 600};
    const HamiltonianMatrix H = discretize_hamiltonian(free, g);
    const EigenDecomposition d = eigen_all(H, false);
    std::vector<Complex> vals = sorted_vals(d.eigenvalues);
    for (int k = 1; k <= 3; ++k) {
        const double expect = static_cast<double>(k) * k;
        CHECK(std::abs(vals[k - 1].real() - expect) / expect < 0.005);
        CHECK(std::abs(vals[k - 1].imag()) < 1e-9);
    }
}

TEST_CASE("dimension cap") {
    PotentialForm free;
    Grid g{0.0, 1.0, 200};
    const HamiltonianMatrix H = discretize_hamiltonian(free, g);
    CHECK_THROWS_AS(eigen_all(H, false, 100), DimensionCapError);
}

TEST_CASE("localization keeps bound states and drops box modes") {
    const PotentialForm pt = ahmed_potential_form(7.0, -5.0);
    Grid g{-20.0, 20.0, 2001};
    const EigenDecomposition all = eigen_all(discretize_hamiltonian(pt, g), true);

    // tight edge: exactly the two deep levels at -4 and -1
    const EigenDecomposition two = localization_filter(all, g, 0.2, 1e-6);
    REQUIRE(two.eigenvalues.size() == 2);
    const std::vector<Complex> kept = sorted_vals(two.eigenvalues);
    CHECK(std::abs(kept[0] - Complex(-4.0, 0.0)) < 5e-3);
    CHECK(std::abs(kept[1] - Complex(-1.0, 0.0)) < 5e-3);
    CHECK(two.localization.minCoeff() > 1.0 - 1e-6);

    // default edge also admits the shallow second-tower state near -1/4
    const EigenDecomposition def = localization_filter(all, g, 0.1, 1e-6);
    REQUIRE(def.eigenvalues.size() == 3);
    const std::vector<Complex> kept3 = sorted_vals(def.eigenvalues);
    CHECK(std::abs(kept3[2] - Complex(-0.25, 0.0)) < 5e-3);
}

TEST_CASE("deep well ground state survives a coarse box") {
    const PotentialForm pt = ahmed_potential_form(7.0, 0.0);
    Grid g{-20.0, 20.0, 41};
    const EigenDecomposition all = eigen_all(discretize_hamiltonian(pt, g), true);
    const EigenDecomposition kept = localization_filter(all, g);
    REQUIRE(kept.eigenvalues.size() >= 1);
    CHECK(kept.localization.maxCoeff() > 1.0 - 1e-6);
}

TEST_CASE("schrodinger residual on analytic box modes") {
    PotentialForm free;
    const int n = 3143;  // h close to 1e-3 on [0, pi]
    const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(n, 0.0, 3.14159265358979323846);
    WaveFunctionSample psi;
    psi.grid = grid;
    psi.values.resize(n);
    for (int i = 0; i < n; ++i) psi.values[i] = std::sin(2.0 * grid[i]);
    CHECK(schrodinger_residual(free, psi, Complex(4.0, 0.0)) < 1e-8);
}

TEST_CASE("spectrum matching") {
    AlgebraicSpectrum analytic;
    analytic.entries = {{0, Complex(0, 0)}, {1, Complex(3, 0)}};

    EigenDecomposition numeric;
    numeric.eigenvalues.resize(3);
    numeric.eigenvalues << Complex(0.001, 0), Complex(2.9995, 0), Complex(3.75, 0);

    const MatchReport ok = match_spectra(numeric, analytic, Complex(0, 0), 5e-3);
    CHECK(ok.pass);
    REQUIRE(ok.entries.size() == 2);
    CHECK(ok.entries[0].abs_error < 5e-3);
    CHECK(ok.unmatched_numeric.size() == 1);

    const MatchReport tight = match_spectra(numeric, analytic, Complex(0, 0), 1e-5);
    CHECK(!tight.pass);

    // identical lists, zero offset
    EigenDecomposition exact;
    exact.eigenvalues.resize(2);
    exact.eigenvalues << Complex(0, 0), Complex(3, 0);
    const MatchReport id = match_spectra(exact, analytic, Complex(0, 0), 1e-12);
    CHECK(id.pass);
    CHECK(id.unmatched_numeric.empty());
}

TEST_CASE("W-built potential has its SUSY ground level at zero") {
    for (const SuperpotentialSpec spec :
         {make(Family::AhmedScarf, 2, 1, 0), make(Family::TanhRosenMorse, 2.3, 1, 0)}) {
        const auto [vm, vp] = build_partner_potentials(spec);
        (void)vp;
        Grid g{-20.0, 20.0, 1601};
        const EigenDecomposition kept =
            localization_filter(eigen_all(discretize_hamiltonian(vm, g), true), g);
        double best = 1e9;
        for (int k = 0; k < kept.eigenvalues.size(); ++k) {
            best = std::min(best, std::abs(kept.eigenvalues[k]));
        }
        CHECK(best < 5e-3);
    }
}

TEST_CASE("partner spectra are degenerate above the ground state") {
    const SuperpotentialSpec spec = make(Family::AhmedScarf, 2, 1, 0);
    const auto [vm, vp] = build_partner_potentials(spec);
    Grid g{-20.0, 20.0, 1601};
    const std::vector<Complex> minus = sorted_vals(
        localization_filter(eigen_all(discretize_hamiltonian(vm, g), true), g).eigenvalues);
    const std::vector<Complex> plus = sorted_vals(
        localization_filter(eigen_all(discretize_hamiltonian(vp, g), true), g).eigenvalues);
    REQUIRE(minus.size() >= 2);
    REQUIRE(plus.size() == minus.size() - 1);
    for (std::size_t i = 0; i < plus.size(); ++i) {
        CHECK(std::abs(plus[i] - minus[i + 1]) < 5e-3);
    }
}

TEST_CASE("convergence study shows second-order error decay") {
    const SuperpotentialSpec spec = make(Family::AhmedScarf, 2, 1, 0);
    const std::vector<ConvergenceRow> rows = convergence_study(spec, Grid{-20, 20, 501}, 3);
    REQUIRE(rows.size() == 3);
    for (std::size_t lvl = 0; lvl < rows[0].level_errors.size(); ++lvl) {
        for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
            const double ratio = rows[r].level_errors[lvl] / rows[r + 1].level_errors[lvl];
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
    }
    CHECK_THROWS_AS(convergence_study(spec, Grid{-20, 20, 501}, 1), DomainError);
}
