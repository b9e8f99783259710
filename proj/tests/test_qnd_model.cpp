#include <doctest.h>

#include "helpers.hpp"
#include "qnd_model.hpp"

using namespace zeno;
using zeno::testing::thrown_code;
using zeno::testing::two_level_model;

TEST_CASE("model validation accepts the canonical two-level fixture") {
    const QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    CHECK_NOTHROW(model.validate());
    CHECK(model.system_dim() == 2);
    CHECK(model.apparatus_dim() == 1);
    CHECK(model.joint_dim() == 2);
    CHECK(model.measurement_coupled());
}

TEST_CASE("model validation rejects structural mistakes") {
    SUBCASE("non-Hermitian transition term") {
        QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
        model.transition(0, 1) = Complex(0.0, 1.0);  // conjugate partner missing
        CHECK(thrown_code([&] { model.validate(); }) == ErrorCode::NonHermitian);
    }
    SUBCASE("non-Hermitian apparatus block") {
        QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
        model.meas_blocks = {Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
        model.apparatus_state = Vector::Zero(2);
        model.apparatus_state[0] = 1.0;
        model.meas_blocks[1](0, 1) = Complex(0.0, 1.0);
        CHECK(thrown_code([&] { model.validate(); }) == ErrorCode::NonHermitian);
    }
    SUBCASE("wrong block count") {
        QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
        model.meas_blocks.push_back(Matrix::Zero(1, 1));
        CHECK(thrown_code([&] { model.validate(); }) == ErrorCode::InvalidArgument);
    }
    SUBCASE("unnormalized initial state") {
        QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
        model.system_state *= 0.7;
        CHECK(thrown_code([&] { model.validate(); }) == ErrorCode::InvalidArgument);
    }
    SUBCASE("single level is not a transition problem") {
        QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
        model.level_energies = RealVector::Zero(1);
        CHECK(thrown_code([&] { model.validate(); }) == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("identical apparatus blocks mean the measurement records nothing") {
    QndModel model = two_level_model(1.0, 0.0, 3.0, 3.0);
    CHECK_FALSE(model.measurement_coupled());
}

TEST_CASE("block spectra diagonalize each apparatus block") {
    QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    Matrix block0(2, 2), block1(2, 2);
    block0 << 1.0, 0.0, 0.0, 3.0;
    block1 << 0.0, 2.0, 2.0, 0.0;
    model.meas_blocks = {block0, block1};
    model.apparatus_state = Vector::Zero(2);
    model.apparatus_state[0] = 1.0;

    const BlockSpectra spectra = block_spectra(model);
    REQUIRE(spectra.level_count() == 2);
    REQUIRE(spectra.block_dim() == 2);
    CHECK(spectra.levels[0][0] == doctest::Approx(1.0));
    CHECK(spectra.levels[0][1] == doctest::Approx(3.0));
    CHECK(spectra.levels[1][0] == doctest::Approx(-2.0));
    CHECK(spectra.levels[1][1] == doctest::Approx(2.0));

    // Overlaps of two orthonormal bases form a unitary matrix.
    CHECK(unitarity_defect(spectra.overlap(0, 1)) < 1e-12);
    CHECK(max_abs(spectra.overlap(0, 0) - Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("block spectra from raw eigenvalues carry identity bases") {
    const BlockSpectra spectra = BlockSpectra::from_eigenvalues({{0.0, 1.0}, {3.0, 7.0}});
    CHECK(spectra.level_count() == 2);
    CHECK(spectra.block_dim() == 2);
    CHECK(max_abs(spectra.bases[0] - Matrix::Identity(2, 2)) == 0.0);
    CHECK(thrown_code([] {
              BlockSpectra::from_eigenvalues({{0.0, 1.0}, {3.0}});
          }) == ErrorCode::InvalidArgument);
}

TEST_CASE("joint Hamiltonians: free part is level structure times identity") {
    QndModel model = two_level_model(1.5, 0.25, 0.0, 5.0);
    const auto [free_h, meas_h] = joint_hamiltonians(model);

    REQUIRE(free_h.rows() == 2);
    CHECK(free_h(0, 0) == Complex(0.25, 0.0));
    CHECK(free_h(0, 1) == Complex(1.5, 0.0));
    CHECK(meas_h(0, 0) == Complex(0.0, 0.0));
    CHECK(meas_h(1, 1) == Complex(5.0, 0.0));
    CHECK(meas_h(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("joint Hamiltonians with a two-dimensional apparatus") {
    QndModel model = two_level_model(1.0, 0.0, 0.0, 5.0);
    Matrix block0(2, 2), block1(2, 2);
    block0 << 0.0, 1.0, 1.0, 0.0;
    block1 << 3.0, 0.0, 0.0, 7.0;
    model.meas_blocks = {block0, block1};
    model.apparatus_state = Vector::Zero(2);
    model.apparatus_state[0] = 1.0;

    const auto [free_h, meas_h] = joint_hamiltonians(model);
    REQUIRE(free_h.rows() == 4);
    // Free part: transition element repeated on the apparatus diagonal.
    CHECK(free_h(0, 2) == Complex(1.0, 0.0));
    CHECK(free_h(1, 3) == Complex(1.0, 0.0));
    CHECK(free_h(0, 3) == Complex(0.0, 0.0));
    // Measurement part: blocks on the diagonal, nothing across levels.
    CHECK(meas_h(0, 1) == Complex(1.0, 0.0));
    CHECK(meas_h(2, 2) == Complex(3.0, 0.0));
    CHECK(meas_h(3, 3) == Complex(7.0, 0.0));
    CHECK(meas_h(1, 2) == Complex(0.0, 0.0));
}
