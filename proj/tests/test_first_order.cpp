#include <doctest.h>

#include <cmath>

#include "engine.hpp"
#include "first_order.hpp"
#include "helpers.hpp"
#include "resonance.hpp"

using namespace zeno;
using zeno::testing::two_level_model;

TEST_CASE("geometric phase sum: closed form and resonant limit") {
    // Ten terms at unit spacing with gap 5: |sum| = |sin(25) / sin(2.5)|.
    CHECK(std::abs(std::abs(geometric_phase_sum(5.0, 10)) - 0.22114939083076707) <
          1e-12);

    // Direct summation cross-check at an awkward angle.
    const double theta = 1.7;
    Complex direct(0.0, 0.0);
    for (int k = 0; k < 23; ++k) direct += std::exp(Complex(0.0, -theta * k));
    CHECK(std::abs(geometric_phase_sum(theta, 23) - direct) < 1e-12);

    // Exactly rephased windows sum coherently to the term count.
    CHECK(geometric_phase_sum(0.0, 5) == Complex(5.0, 0.0));
    CHECK(std::abs(geometric_phase_sum(2.0 * M_PI, 7) - Complex(7.0, 0.0)) < 1e-9);
}

TEST_CASE("transition commutator weighs elements by observable gaps") {
    const QndModel model = two_level_model(1.4, 0.0, 0.0, 5.0);
    const Matrix x = transition_commutator(model);
    CHECK(x(0, 0) == Complex(0.0, 0.0));
    CHECK(x(1, 1) == Complex(0.0, 0.0));
    CHECK(x(0, 1) == Complex(1.4, 0.0));    // (1 - 0) * transition
    CHECK(x(1, 0) == Complex(-1.4, 0.0));   // (0 - 1) * transition
}

TEST_CASE("first-order operator converges to the exact one as steps shrink") {
    // Fixed total time, shrinking free step: the closed form is first order
    // in the step, so the residual must fall as the cycle count grows.
    const QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    const double frozen[] = {1.093837e-05, 4.816614e-06, 4.476744e-06};

    double previous = -1.0;
    int idx = 0;
    for (const std::int64_t steps : {10, 20, 40}) {
        const ZenoSchedule sched{steps, 0.1, 1.0};
        const double residual = max_abs(heisenberg_observable(model, sched) -
                                        first_order_heisenberg(model, sched));
        CHECK(std::abs(residual - frozen[idx]) < 1e-9);
        if (previous >= 0.0) CHECK(residual < previous);
        previous = residual;
        ++idx;
    }
}

TEST_CASE("first-order operator handles non-commuting apparatus blocks") {
    QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    Matrix block0(2, 2), block1(2, 2);
    block0 << 0.0, 1.0, 1.0, 0.0;
    block1 << 3.0, 0.0, 0.0, 7.0;
    model.meas_blocks = {block0, block1};
    model.apparatus_state = Vector::Zero(2);
    model.apparatus_state[0] = 1.0;

    double previous = -1.0;
    for (const std::int64_t steps : {10, 20}) {
        const ZenoSchedule sched{steps, 0.02, 0.7};
        const double residual = max_abs(heisenberg_observable(model, sched) -
                                        first_order_heisenberg(model, sched));
        CHECK(residual < 1e-3);
        if (previous >= 0.0) CHECK(residual < previous);
        previous = residual;
    }
}

TEST_CASE("first-order correction vanishes with the transition term") {
    QndModel model = two_level_model(0.0, 0.0, 0.0, 5.0);
    const ZenoSchedule sched{12, 1.0, 0.8};
    const Matrix first = first_order_heisenberg(model, sched);
    const Matrix bare = kron(Matrix(model.observable_diag.cast<Complex>().asDiagonal()),
                             Matrix::Identity(1, 1));
    CHECK(max_abs(first - bare) == 0.0);
}
