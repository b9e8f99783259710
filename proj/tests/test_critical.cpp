#include <doctest.h>

#include <cmath>

#include "critical.hpp"
#include "helpers.hpp"
#include "xx_chain.hpp"

using namespace zeno;
using zeno::testing::thrown_code;

TEST_CASE("critical windows for scalar blocks follow the winding ladder") {
    const BlockSpectra spectra = BlockSpectra::from_eigenvalues({{0.0}, {5.0}});
    const CriticalTimes crit = critical_times(spectra, 3);

    REQUIRE(crit.times.size() == 3);
    CHECK(crit.degenerate.empty());
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(std::abs(crit.times[k].tau_m -
                       2.0 * M_PI * static_cast<double>(k + 1) / 5.0) < 1e-12);
        CHECK(crit.times[k].winding == static_cast<std::int64_t>(k + 1));
        CHECK(crit.times[k].level_n == 0);
        CHECK(crit.times[k].level_l == 1);
    }
}

TEST_CASE("critical windows enumerate every cross-level gap once") {
    const BlockSpectra spectra =
        BlockSpectra::from_eigenvalues({{0.0, 1.0}, {3.0, 7.0}});
    const CriticalTimes crit = critical_times(spectra, 1);

    // Gaps {2, 3, 6, 7} between the two blocks, windows 2 pi / gap ascending.
    const double expected[] = {2.0 * M_PI / 7.0, 2.0 * M_PI / 6.0,
                               2.0 * M_PI / 3.0, 2.0 * M_PI / 2.0};
    REQUIRE(crit.times.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(crit.times[i].tau_m - expected[i]) < 1e-12);
    CHECK(crit.degenerate.empty());
}

TEST_CASE("coinciding windows are merged") {
    // Gaps {4, 6, 2, 4}: the two gap-4 pairs produce the same window.
    const BlockSpectra spectra =
        BlockSpectra::from_eigenvalues({{0.0, 2.0}, {4.0, 6.0}});
    const CriticalTimes crit = critical_times(spectra, 1);

    REQUIRE(crit.times.size() == 3);
    CHECK(std::abs(crit.times[0].tau_m - 2.0 * M_PI / 6.0) < 1e-12);
    CHECK(std::abs(crit.times[1].tau_m - 2.0 * M_PI / 4.0) < 1e-12);
    CHECK(std::abs(crit.times[2].tau_m - 2.0 * M_PI / 2.0) < 1e-12);
}

TEST_CASE("identical blocks yield no windows, only degeneracy") {
    const BlockSpectra spectra = BlockSpectra::from_eigenvalues({{2.0}, {2.0}});
    const CriticalTimes crit = critical_times(spectra, 5);
    CHECK(crit.times.empty());
    REQUIRE(crit.degenerate.size() == 1);
    CHECK(crit.degenerate[0].level_n == 0);
    CHECK(crit.degenerate[0].level_l == 1);

    CHECK(zeno_verdict(spectra, 1.3).verdict == Verdict::Degenerate);
}

TEST_CASE("verdict distinguishes protected and rephasing windows") {
    const BlockSpectra spectra = BlockSpectra::from_eigenvalues({{0.0}, {5.0}});

    CHECK(zeno_verdict(spectra, 1.0).verdict == Verdict::Zeno);

    const VerdictReport critical = zeno_verdict(spectra, 2.0 * M_PI / 5.0);
    CHECK(critical.verdict == Verdict::Critical);
    CHECK(critical.level_n == 0);
    CHECK(critical.level_l == 1);
    CHECK(critical.beta == 0);
    CHECK(critical.alpha == 0);

    // Higher windings rephase too.
    CHECK(zeno_verdict(spectra, 4.0 * M_PI / 5.0).verdict == Verdict::Critical);
}

TEST_CASE("resonance outranks degeneracy in the verdict") {
    const BlockSpectra spectra =
        BlockSpectra::from_eigenvalues({{0.0, 0.0}, {0.0, 5.0}});
    CHECK(zeno_verdict(spectra, 2.0 * M_PI / 5.0).verdict == Verdict::Critical);
    const VerdictReport off = zeno_verdict(spectra, 1.0);
    CHECK(off.verdict == Verdict::Degenerate);
    CHECK(off.has_degenerate);
}

TEST_CASE("critical input validation") {
    const BlockSpectra pair = BlockSpectra::from_eigenvalues({{0.0}, {5.0}});
    CHECK(thrown_code([&] { critical_times(pair, 0); }) == ErrorCode::InvalidArgument);
    CHECK(thrown_code([&] {
              critical_times(BlockSpectra::from_eigenvalues({{1.0}}), 1);
          }) == ErrorCode::InvalidArgument);
    CHECK(thrown_code([&] { zeno_verdict(pair, -1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("pointer-shift critical ladder") {
    const auto times = xx_critical_times(5.0, 3);
    REQUIRE(times.size() == 3);
    CHECK(std::abs(times[0] - 2.0 * M_PI / 5.0) < 1e-12);
    CHECK(std::abs(times[2] - 6.0 * M_PI / 5.0) < 1e-12);

    // The sign of the shift is irrelevant.
    CHECK(xx_critical_times(-5.0, 1)[0] == doctest::Approx(2.0 * M_PI / 5.0));

    CHECK(thrown_code([] { xx_critical_times(0.0, 2); }) == ErrorCode::ZeroEigenvalue);
    CHECK(thrown_code([] { xx_critical_times(5.0, 0); }) == ErrorCode::InvalidArgument);
}
