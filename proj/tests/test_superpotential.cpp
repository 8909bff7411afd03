#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "susypt/superpotential.hpp"

using namespace susypt;

namespace {

SuperpotentialSpec ahmed(double A, double B, double C, double alpha = 1.0,
                         Branch br = Branch::Plus) {
    return {Family::AhmedScarf, A, B, C, alpha, br, 0.0};
}

}  // namespace

TEST_CASE("superpotential values at closed-form points") {
    // tanh(0) = 0, sech(0) = 1
    CHECK(eval_superpotential(ahmed(2, 1, 0), 0.0) == Complex(0.0, 1.0));

    const Complex w = eval_superpotential(ahmed(1, 1.5, 1), 0.0);
    CHECK(w.real() == doctest::Approx(1.0));
    CHECK(w.imag() == doctest::Approx(1.5));

    SuperpotentialSpec coulomb{Family::CoulombC, 1.0, 0, 0, 1.0, Branch::Plus, 2.0};
    const Complex wc = eval_superpotential(coulomb, 1.0);
    CHECK(wc.real() == doctest::Approx(2.0));
    CHECK(wc.imag() == doctest::Approx(1.0));
}

TEST_CASE("superpotential derivative in closed form and by finite differences") {
    CHECK(superpotential_derivative(ahmed(2, 1, 0), 0.0).real() == doctest::Approx(2.0));
    CHECK(superpotential_derivative(ahmed(2, 1, 0), 0.0).imag() == doctest::Approx(0.0));

    const Complex broken = superpotential_derivative(ahmed(1, 1.5, 1), 0.0);
    CHECK(broken.real() == doctest::Approx(1.0));
    CHECK(broken.imag() == doctest::Approx(1.0));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (const Family f : {Family::AhmedScarf, Family::TanhRosenMorse,
                           Family::PoschlTellerC1, Family::CoulombC}) {
        SuperpotentialSpec spec{f, 1.7, 0.9, 0.0, 1.1, Branch::Plus, 1.3};
        for (int k = 0; k < 20; ++k) {
            double x = ux(rng);
            if (f != Family::AhmedScarf && f != Family::TanhRosenMorse) x = std::abs(x) + 0.3;
            const double h = 1e-5;
            const Complex fd = (eval_superpotential(spec, x + h) -
                                eval_superpotential(spec, x - h)) /
                               (2.0 * h);
            CHECK(std::abs(fd - superpotential_derivative(spec, x)) < 1e-8);
        }
    }
}

TEST_CASE("domain errors at singular points and outside domains") {
    SuperpotentialSpec eckart{Family::CothEckart, 1.0, 1.0, 0.0, 1.0, Branch::Plus, 0.0};
    CHECK_THROWS_AS(eval_superpotential(eckart, -1.0), DomainError);
    CHECK_THROWS_AS(eval_superpotential(eckart, 1e-12), DomainError);

    SuperpotentialSpec tan{Family::TanTrig, 1.0, 1.0, 0.0, 1.0, Branch::Plus, 0.0};
    CHECK_THROWS_AS(eval_superpotential(tan, 2.0), DomainError);
    CHECK_NOTHROW(eval_superpotential(tan, 1.5));

    SuperpotentialSpec bad = ahmed(1, 1, 0, -1.0);
    CHECK_THROWS_AS(eval_superpotential(bad, 0.0), DomainError);
}

TEST_CASE("pt_condition classifies the catalog") {
    CHECK(pt_condition(ahmed(1, 1.5, 0.5)) == PtClass::BrokenPT);  // 2(A-B)+a = 0
    CHECK(pt_condition(ahmed(3, 0.2, 0)) == PtClass::UnbrokenPT);
    CHECK(pt_condition(ahmed(1, 1, 0.5)) == PtClass::NonPT);

    SuperpotentialSpec rm{Family::TanhRosenMorse, -0.5, 1.0, 0.7, 1.0, Branch::Plus, 0.0};
    CHECK(pt_condition(rm) == PtClass::BrokenPT);  // A = -alpha/2
    rm.A = 0.4;
    CHECK(pt_condition(rm) == PtClass::NonPT);
    rm.C = 0.0;
    CHECK(pt_condition(rm) == PtClass::UnbrokenPT);

    SuperpotentialSpec eck{Family::CothEckart, 0.5, 1.0, 0.7, 1.0, Branch::Plus, 0.0};
    CHECK(pt_condition(eck) == PtClass::BrokenPT);  // A = +alpha/2

    SuperpotentialSpec pt1{Family::PoschlTellerC1, 2.0, 1.0, 0.0, 1.0, Branch::Plus, 0.0};
    CHECK(pt_condition(pt1) == PtClass::NonPT);
    SuperpotentialSpec cou{Family::CoulombC, 1.0, 0, 0, 1.0, Branch::Plus, 2.0};
    CHECK(pt_condition(cou) == PtClass::NonPT);
}

TEST_CASE("general two-parameter condition") {
    const GeneralPtResult unbroken = general_pt_condition(1.0, 2.0, 0.0, 0.0, 1.0);
    CHECK(unbroken.cls == PtClass::UnbrokenPT);
    CHECK(unbroken.D == 0.0);

    // 2A + alpha = 3 = 2B forces D = C
    const GeneralPtResult broken = general_pt_condition(1.0, 1.5, 0.7, 0.7, 1.0);
    CHECK(broken.cls == PtClass::BrokenPT);
    CHECK(broken.D == doctest::Approx(0.7));

    const GeneralPtResult non = general_pt_condition(1.0, 2.0, 0.7, 0.7, 1.0);
    CHECK(non.cls == PtClass::NonPT);

    CHECK_THROWS_AS(general_pt_condition(-0.5, 2.0, 0.7, 0.7, 1.0), DivisionError);
}

TEST_CASE("ahmed coefficients for both phases") {
    const AhmedCoefficients unbroken = ahmed_coefficients(ahmed(2, 1, 0));
    CHECK(unbroken.V1 == doctest::Approx(7.0));
    CHECK(unbroken.V2 == doctest::Approx(-5.0));

    const AhmedCoefficients broken = ahmed_coefficients(ahmed(1, 1.5, 1));
    CHECK(broken.V1 == doctest::Approx(2.25));
    CHECK(broken.V2 == doctest::Approx(-6.5));

    const AhmedCoefficients zero = ahmed_coefficients(ahmed(0, 0, 0));
    CHECK(zero.V1 == doctest::Approx(0.0));
    CHECK(zero.V2 == doctest::Approx(0.0));

    CHECK_THROWS_AS(ahmed_coefficients(ahmed(1, 1, 0.5)), NotPtError);
}

TEST_CASE("reality condition on (V1, V2)") {
    CHECK(phase_from_coefficients(7.0, -5.0) == SpectralPhase::Real);
    CHECK(phase_from_coefficients(2.25, -6.5) == SpectralPhase::ComplexConjugate);
    // inclusive boundary
    CHECK(phase_from_coefficients(0.0, 0.25) == SpectralPhase::Real);
}

TEST_CASE("reality phase tracks the PT class across random admissible specs") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ua(0.2, 3.0), ub(0.2, 3.0), uc(0.3, 1.5);
    for (int k = 0; k < 50; ++k) {
        const SuperpotentialSpec unbroken = ahmed(ua(rng), ub(rng), 0.0);
        const AhmedCoefficients cu = ahmed_coefficients(unbroken);
        CHECK(phase_from_coefficients(cu.V1, cu.V2) == SpectralPhase::Real);

        const double A = ua(rng);
        const SuperpotentialSpec broken = ahmed(A, A + 0.5, uc(rng));
        REQUIRE(pt_condition(broken) == PtClass::BrokenPT);
        const AhmedCoefficients cb = ahmed_coefficients(broken);
        CHECK(phase_from_coefficients(cb.V1, cb.V2) == SpectralPhase::ComplexConjugate);
    }
}

TEST_CASE("asymptotic offsets") {
    CHECK(asymptotic_energy_offset(ahmed(2, 1, 0)) == Complex(4.0, 0.0));

    const Complex broken = asymptotic_energy_offset(ahmed(1, 1.5, 1));
    CHECK(broken.real() == doctest::Approx(0.0));
    CHECK(broken.imag() == doctest::Approx(2.0));  // (1+i)^2

    SuperpotentialSpec cou{Family::CoulombC, 1.0, 0, 0, 1.0, Branch::Plus, 2.0};
    CHECK(asymptotic_energy_offset(cou) == Complex(4.0, 0.0));

    SuperpotentialSpec pt1{Family::PoschlTellerC1, 2.0, 1.0, 0.0, 1.0, Branch::Plus, 0.0};
    const Complex wpt = asymptotic_energy_offset(pt1);  // (2+i)^2
    CHECK(wpt.real() == doctest::Approx(3.0));
    CHECK(wpt.imag() == doctest::Approx(4.0));

    SuperpotentialSpec tan{Family::TanTrig, 1.0, 1.0, 0.0, 1.0, Branch::Plus, 0.0};
    CHECK_THROWS_AS(asymptotic_energy_offset(tan), UnboundedError);
}
