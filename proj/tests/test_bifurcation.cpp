#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "susypt/bifurcation.hpp"

using namespace susypt;

namespace {

Eigen::VectorXcd vals(std::initializer_list<Complex> list) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(list.size()));
    Eigen::Index i = 0;
    for (const Complex& v : list) out[i++] = v;
    return out;
}

SuperpotentialSpec ahmed(double A, double B, double C) {
    return {Family::AhmedScarf, A, B, C, 1.0, Branch::Plus, 0.0};
}

}  // namespace

TEST_CASE("classification of plain lists") {
    const SpectrumClass real = classify_spectrum(vals({{-4.0, 0.0}, {-1.0, 0.0}}));
    CHECK(real.kind == SpectrumClassKind::Real);
    CHECK(real.pair_count == 0);

    const SpectrumClass paired = classify_spectrum(vals({{3.0, 1.0}, {3.0, -1.0}}));
    CHECK(paired.kind == SpectrumClassKind::ComplexPaired);
    CHECK(paired.pair_count == 1);
    CHECK(paired.max_im == doctest::Approx(1.0));

    const SpectrumClass lone = classify_spectrum(vals({{3.0, 1.0}}));
    CHECK(lone.kind == SpectrumClassKind::Unpaired);
    CHECK(!lone.detail.empty());

    const SpectrumClass empty = classify_spectrum(vals({}));
    CHECK(empty.kind == SpectrumClassKind::Real);
}

TEST_CASE("near-critical marking") {
    const SpectrumClass low = classify_spectrum(vals({{1.0, 0.007}, {1.0, -0.007}}));
    CHECK(low.kind == SpectrumClassKind::Real);
    CHECK(low.near_critical);

    const SpectrumClass mid = classify_spectrum(vals({{1.0, 0.015}, {1.0, -0.015}}));
    CHECK(mid.kind == SpectrumClassKind::ComplexPaired);
    CHECK(mid.near_critical);

    const SpectrumClass far = classify_spectrum(vals({{1.0, 0.5}, {1.0, -0.5}}));
    CHECK(!far.near_critical);
}

TEST_CASE("susy phase prediction") {
    CHECK(susy_phase_prediction(ahmed(2, 1, 0)) == SpectrumClassKind::Real);
    CHECK(susy_phase_prediction(ahmed(1, 1.5, 1)) == SpectrumClassKind::ComplexPaired);
    CHECK_THROWS_AS(susy_phase_prediction(ahmed(1, 1, 1)), NotPtError);
}

TEST_CASE("sweep over a real window stays real") {
    ScanConfig config;
    config.grid = Grid{-16.0, 16.0, 801};
    const std::vector<ScanRecord> recs = parameter_sweep(2.0, 0.0, 1.5, 4, config);
    REQUIRE(recs.size() == 4);
    for (const ScanRecord& r : recs) {
        CHECK(!r.failed);
        CHECK(r.cls.kind == SpectrumClassKind::Real);
        CHECK(r.localized_count >= 1);
    }
    CHECK(recs.front().V2 == doctest::Approx(0.0));
    CHECK(recs.back().V2 == doctest::Approx(1.5));
}

TEST_CASE("sweep across the threshold flips exactly once") {
    ScanConfig config;
    config.grid = Grid{-16.0, 16.0, 801};
    const std::vector<ScanRecord> recs = parameter_sweep(2.0, 0.0, 4.0, 9, config);
    // count Real -> ComplexPaired transitions over the non-marginal records
    int flips = 0;
    bool have_prev = false;
    SpectrumClassKind prev = SpectrumClassKind::Real;
    for (const ScanRecord& r : recs) {
        REQUIRE(!r.failed);
        if (r.cls.near_critical) continue;
        if (have_prev && r.cls.kind != prev) ++flips;
        prev = r.cls.kind;
        have_prev = true;
    }
    CHECK(flips == 1);
    CHECK(recs.front().cls.kind == SpectrumClassKind::Real);
    CHECK(recs.back().cls.kind == SpectrumClassKind::ComplexPaired);
    for (const ScanRecord& r : recs) {
        if (r.cls.kind == SpectrumClassKind::ComplexPaired) CHECK(r.cls.pair_count >= 1);
    }
}

TEST_CASE("deep broken window classifies complex-paired") {
    ScanConfig config;
    config.grid = Grid{-16.0, 16.0, 801};
    const std::vector<ScanRecord> recs = parameter_sweep(2.0, 3.0, 4.0, 3, config);
    for (const ScanRecord& r : recs) {
        CHECK(!r.failed);
        CHECK(r.cls.kind == SpectrumClassKind::ComplexPaired);
    }
}

TEST_CASE("sweep records are identical across thread counts") {
    ScanConfig serial;
    serial.grid = Grid{-12.0, 12.0, 401};
    serial.threads = 1;
    ScanConfig parallel = serial;
    parallel.threads = 4;
    const std::vector<ScanRecord> a = parameter_sweep(2.0, 0.0, 4.0, 7, serial);
    const std::vector<ScanRecord> b = parameter_sweep(2.0, 0.0, 4.0, 7, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].V2 == b[i].V2);
        CHECK(a[i].cls.kind == b[i].cls.kind);
        CHECK(a[i].max_im == b[i].max_im);  // bitwise: same arithmetic per sample
        CHECK(a[i].localized_count == b[i].localized_count);
    }
}

TEST_CASE("critical point brackets the reality boundary at V1 = 2") {
    ScanConfig config;
    config.grid = Grid{-20.0, 20.0, 2001};
    const double v2 = critical_point(2.0, 1.0, 4.0, 0.05, config);
    CHECK(v2 > 2.15);
    CHECK(v2 < 2.35);
}

TEST_CASE("critical point needs a sign change") {
    ScanConfig config;
    config.grid = Grid{-16.0, 16.0, 801};
    CHECK_THROWS_AS(critical_point(2.0, 0.0, 1.0, 0.05, config), NoSignChangeError);
}
