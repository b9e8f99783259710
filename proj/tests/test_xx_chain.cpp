#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "xx_chain.hpp"

using namespace zeno;
using zeno::testing::random_correlation;
using zeno::testing::ring;
using zeno::testing::thrown_code;

TEST_CASE("hopping matrix wiring") {
    SUBCASE("open chain leaves the ends unconnected") {
        ChainConfig cfg = ring(4, 2.0, 0.5);
        cfg.boundary = Boundary::Open;
        const Matrix h = hopping_matrix(cfg);
        CHECK(h(0, 0) == Complex(0.5, 0.0));
        CHECK(h(0, 1) == Complex(2.0, 0.0));
        CHECK(h(3, 0) == Complex(0.0, 0.0));
        CHECK(h(0, 2) == Complex(0.0, 0.0));
    }
    SUBCASE("ring closes the wrap bond") {
        const Matrix h = hopping_matrix(ring(4, 2.0));
        CHECK(h(3, 0) == Complex(2.0, 0.0));
        CHECK(h(0, 3) == Complex(2.0, 0.0));
    }
    SUBCASE("two-site ring doubles the bond") {
        const Matrix h = hopping_matrix(ring(2, 2.0));
        CHECK(h(0, 1) == Complex(4.0, 0.0));
        CHECK(hermiticity_defect(h) == 0.0);
    }
    SUBCASE("one site is not a chain") {
        CHECK(thrown_code([] { hopping_matrix(ring(1, 2.0)); }) ==
              ErrorCode::InvalidArgument);
    }
}

TEST_CASE("dispersion samples the mode cosine") {
    const ChainConfig cfg = ring(6, 5.0, 0.5);
    CHECK(dispersion(cfg, 0) == doctest::Approx(10.5));
    CHECK(dispersion(cfg, 3) == doctest::Approx(-9.5));
    CHECK(dispersion(cfg, 1) == doctest::Approx(0.5 + 10.0 * std::cos(M_PI / 3.0)));

    ChainConfig open = cfg;
    open.boundary = Boundary::Open;
    CHECK(thrown_code([&] { dispersion(open, 0); }) == ErrorCode::BoundaryViolation);
    CHECK(thrown_code([&] { dispersion(cfg, 6); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("mode-basis and direct free steps agree on a ring") {
    const ChainConfig cfg = ring(6, 1.7, 0.4);
    const Matrix corr = random_correlation(6, 3u);
    const Matrix via_modes = free_step_fourier(corr, cfg, 0.21);
    const Matrix direct = free_step_direct(corr, cfg, 0.21);
    CHECK(max_abs(via_modes - direct) < 1e-12);

    ChainConfig open = cfg;
    open.boundary = Boundary::Open;
    CHECK(thrown_code([&] { free_step_fourier(corr, open, 0.21); }) ==
          ErrorCode::BoundaryViolation);
    CHECK_NOTHROW(free_step_direct(corr, open, 0.21));
}

TEST_CASE("two sites trade a particle at the bond frequency") {
    ChainConfig cfg = ring(2, 0.7);
    cfg.boundary = Boundary::Open;
    const double tau = 0.5;
    const Matrix stepped =
        free_step_direct(localized_correlation(2, 0), cfg, tau);
    const double expected = std::cos(0.7 * tau) * std::cos(0.7 * tau);
    CHECK(std::abs(stepped(0, 0).real() - expected) < 1e-13);
    CHECK(std::abs(stepped(0, 0).real() + stepped(1, 1).real() - 1.0) < 1e-13);
}

TEST_CASE("measurement window rotates only the monitored coherences") {
    const Matrix corr = random_correlation(4, 11u);
    const MeasurementConfig meas{2.5};
    const double tau_m = 0.8;
    const Matrix out = measure_step(corr, meas, tau_m);

    const Complex phase = std::exp(Complex(0.0, 2.5 * 0.8));
    CHECK(std::abs(out(0, 2) - corr(0, 2) * phase) < 1e-14);
    CHECK(std::abs(out(3, 0) - corr(3, 0) * std::conj(phase)) < 1e-14);
    CHECK(out(0, 0) == corr(0, 0));
    CHECK(out(1, 2) == corr(1, 2));
    CHECK(hermiticity_defect(out) < 1e-12);

    CHECK(max_abs(measure_step(corr, meas, 0.0) - corr) == 0.0);
}

TEST_CASE("correlation constructors") {
    const Matrix localized = localized_correlation(3, 1);
    CHECK(localized(1, 1) == Complex(1.0, 0.0));
    CHECK(localized(0, 0) == Complex(0.0, 0.0));
    CHECK(thrown_code([] { localized_correlation(3, 3); }) ==
          ErrorCode::InvalidArgument);

    Vector psi(2);
    psi << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    const Matrix corr = correlation_from_wavefunction(psi);
    CHECK(std::abs(corr(0, 1) - Complex(0.0, 0.5)) < 1e-14);
    CHECK(std::abs(corr(1, 0) - Complex(0.0, -0.5)) < 1e-14);
    CHECK(std::abs(corr(0, 0) - Complex(0.5, 0.0)) < 1e-14);

    Vector unnormalized = 2.0 * psi;
    CHECK(thrown_code([&] { correlation_from_wavefunction(unnormalized); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("correlation audit flags unphysical matrices") {
    CHECK_NOTHROW(check_correlation(random_correlation(5, 8u), 1e-8));

    Matrix overfilled = Matrix::Zero(2, 2);
    overfilled(0, 0) = 1.5;
    CHECK(thrown_code([&] { check_correlation(overfilled, 1e-8); }) ==
          ErrorCode::NumericDrift);

    Matrix askew = Matrix::Zero(2, 2);
    askew(0, 1) = 0.3;
    CHECK(thrown_code([&] { check_correlation(askew, 1e-8); }) ==
          ErrorCode::NumericDrift);
}

TEST_CASE("cycle map equals one free step followed by one window") {
    const ChainConfig cfg = ring(4, 1.3, 0.2);
    const MeasurementConfig meas{2.0};
    const double tau = 0.35, tau_m = 0.6;

    const Matrix cycle = cycle_superoperator(cfg, meas, tau, tau_m);
    CHECK(unitarity_defect(cycle) < 1e-10);

    const Matrix corr = random_correlation(4, 17u);
    const Matrix stepped = measure_step(free_step_direct(corr, cfg, tau), meas, tau_m);

    Vector vec(16);
    for (Eigen::Index a = 0; a < 4; ++a)
        for (Eigen::Index b = 0; b < 4; ++b) vec[a * 4 + b] = corr(a, b);
    vec = cycle * vec;
    for (Eigen::Index a = 0; a < 4; ++a)
        for (Eigen::Index b = 0; b < 4; ++b)
            CHECK(std::abs(vec[a * 4 + b] - stepped(a, b)) < 1e-12);
}

TEST_CASE("occupation fluctuation formula") {
    CHECK(occupation_rel_fluctuation(0.25) == doctest::Approx(std::sqrt(3.0)));
    CHECK(occupation_rel_fluctuation(1.0) == doctest::Approx(0.0));
    CHECK(std::isnan(occupation_rel_fluctuation(0.0)));
    CHECK(std::isnan(occupation_rel_fluctuation(1e-15)));
}
