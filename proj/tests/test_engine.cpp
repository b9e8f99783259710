#include <doctest.h>

#include <cmath>

#include "engine.hpp"
#include "helpers.hpp"

using namespace zeno;
using zeno::testing::thrown_code;
using zeno::testing::two_level_model;

namespace {

ZenoSchedule schedule(std::int64_t steps, double total_time, double tau_m) {
    return ZenoSchedule{steps, total_time, tau_m};
}

}  // namespace

TEST_CASE("schedule validation") {
    CHECK_NOTHROW(schedule(1, 0.5, 0.0).validate());
    CHECK(thrown_code([] { schedule(0, 1.0, 1.0).validate(); }) ==
          ErrorCode::InvalidArgument);
    CHECK(thrown_code([] { schedule(10, 0.0, 1.0).validate(); }) ==
          ErrorCode::InvalidArgument);
    CHECK(thrown_code([] { schedule(10, 1.0, -0.1).validate(); }) ==
          ErrorCode::InvalidArgument);
    CHECK(schedule(8, 2.0, 1.0).tau() == doctest::Approx(0.25));
}

TEST_CASE("moments of a diagonal observable") {
    Vector psi(2);
    psi << std::sqrt(0.3), std::sqrt(0.7);
    RealVector diag(2);
    diag << 1.0, 0.0;
    const Moments m = observable_moments(psi, diag);
    CHECK(m.expectation == doctest::Approx(0.3));
    CHECK(m.variance == doctest::Approx(0.21));
}

TEST_CASE("trace row bookkeeping marks vanishing expectations undefined") {
    ZenoTrace trace;
    push_trace_row(trace, 0.5, 0.25);
    push_trace_row(trace, 0.0, 0.0);
    CHECK(trace.fluct_defined[0] == 1);
    CHECK(trace.rel_fluctuation[0] == doctest::Approx(1.0));
    CHECK(trace.fluct_defined[1] == 0);
    CHECK(std::isnan(trace.rel_fluctuation[1]));
}

TEST_CASE("zero-window protocol reproduces the closed-form free decay") {
    // With no measurement window the trace is plain free evolution sampled at
    // the cycle boundaries, where the survival probability has the standard
    // two-level closed form.
    const double g = 1.3, omega = 0.8, total = 2.0;
    const std::int64_t steps = 37;
    const QndModel model = two_level_model(g, omega, 0.0, 5.0);
    const ZenoTrace trace = evolve_exact(model, schedule(steps, total, 0.0));

    const double rabi = std::sqrt(g * g + 0.25 * omega * omega);
    REQUIRE(trace.rows() == static_cast<std::size_t>(steps) + 1);
    for (std::size_t k = 0; k < trace.rows(); ++k) {
        const double t = static_cast<double>(k) * total / static_cast<double>(steps);
        const double expected =
            1.0 - (g * g) / (rabi * rabi) * std::sin(rabi * t) * std::sin(rabi * t);
        CHECK(std::abs(trace.expectation[k] - expected) < 1e-12);
    }
}

TEST_CASE("repeated measurement pins the survival probability") {
    const QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    const ZenoTrace trace = evolve_exact(model, schedule(200, 1.0, 1.0));

    // Frozen reference from an independent implementation of the same
    // protocol; the bare decay at t = 1 would leave only cos^2(1) = 0.29.
    CHECK(std::abs(trace.expectation.back() - 0.9999849206558721) < 1e-9);
    CHECK(trace.expectation.back() >= 0.95);
}

TEST_CASE("survival deficit shrinks monotonically as cycles double") {
    const QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    const double frozen[] = {0.00054839012131968623, 0.00043800924231096605,
                             0.00026379031587209223, 1.5079344127921779e-05};

    double previous = -1.0;
    int idx = 0;
    for (const std::int64_t steps : {25, 50, 100, 200}) {
        const ZenoTrace trace = evolve_exact(model, schedule(steps, 1.0, 1.0));
        const double deficit = std::abs(1.0 - trace.expectation.back());
        CHECK(std::abs(deficit - frozen[idx]) < 1e-8);
        if (previous >= 0.0) CHECK(deficit < previous);
        previous = deficit;
        ++idx;
    }
}

TEST_CASE("at a rephasing window the measurement stops protecting") {
    // The pointer gap is 5, so a window of 2 pi / 5 winds every measurement
    // phase through a full turn: the trace collapses onto plain free decay.
    const QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    const ZenoTrace measured =
        evolve_exact(model, schedule(60, 1.0, 2.0 * M_PI / 5.0));
    const ZenoTrace free_decay = evolve_exact(model, schedule(60, 1.0, 0.0));

    for (std::size_t k = 0; k < measured.rows(); ++k)
        CHECK(std::abs(measured.expectation[k] - free_decay.expectation[k]) < 1e-12);
}

TEST_CASE("exact Heisenberg operator reproduces the trace endpoint") {
    QndModel model = two_level_model(1.0, 0.3, 0.0, 5.0);
    Matrix block0(2, 2), block1(2, 2);
    block0 << 0.0, 1.0, 1.0, 0.0;
    block1 << 3.0, 0.0, 0.0, 7.0;
    model.meas_blocks = {block0, block1};
    model.apparatus_state = Vector::Zero(2);
    model.apparatus_state[0] = 1.0;

    const ZenoSchedule sched = schedule(20, 1.0, 0.9);
    const ZenoTrace trace = evolve_exact(model, sched);
    const Matrix heis = heisenberg_observable(model, sched);
    const Vector psi0 = joint_initial_state(model);
    const double from_operator = (psi0.adjoint() * heis * psi0)(0, 0).real();

    CHECK(std::abs(from_operator - trace.expectation.back()) < 1e-12);
    CHECK(hermiticity_defect(heis) < 1e-10);
}
