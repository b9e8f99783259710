#include "critical.hpp"

#include <algorithm>
#include <cmath>

#include "resonance.hpp"

namespace zeno {

namespace {

void check_spectra(const BlockSpectra& spectra) {
    if (spectra.level_count() < 2)
        fail(ErrorCode::InvalidArgument, "critical: need at least two levels");
    if (spectra.block_dim() < 1)
        fail(ErrorCode::InvalidArgument, "critical: empty apparatus block");
    for (const RealVector& level : spectra.levels)
        if (level.size() != spectra.block_dim())
            fail(ErrorCode::InvalidArgument, "critical: ragged block sizes");
}

}  // namespace

CriticalTimes critical_times(const BlockSpectra& spectra, std::int64_t max_winding) {
    check_spectra(spectra);
    if (max_winding < 1)
        fail(ErrorCode::InvalidArgument, "critical: winding bound must be at least 1");

    CriticalTimes out;
    const Eigen::Index levels = spectra.level_count();
    const Eigen::Index dim = spectra.block_dim();

    // Unordered level pairs suffice: swapping the pair only flips the sign of
    // the gap, which leaves every window length unchanged.
    for (Eigen::Index n = 0; n < levels; ++n) {
        for (Eigen::Index l = n + 1; l < levels; ++l) {
            for (Eigen::Index beta = 0; beta < dim; ++beta) {
                for (Eigen::Index alpha = 0; alpha < dim; ++alpha) {
                    const double gap =
                        spectra.levels[l][alpha] - spectra.levels[n][beta];
                    if (std::abs(gap) < kDegenerateGapTol) {
                        out.degenerate.push_back(DegeneratePair{n, l, beta, alpha});
                        continue;
                    }
                    for (std::int64_t k = 1; k <= max_winding; ++k) {
                        const double window =
                            2.0 * M_PI * static_cast<double>(k) / std::abs(gap);
                        out.times.push_back(CriticalTime{window, n, l, beta, alpha, k});
                    }
                }
            }
        }
    }

    std::sort(out.times.begin(), out.times.end(),
              [](const CriticalTime& a, const CriticalTime& b) {
                  if (a.tau_m != b.tau_m) return a.tau_m < b.tau_m;
                  return a.winding < b.winding;
              });

    // Merge windows that coincide up to the relative tolerance, keeping the
    // first witness of each.
    std::vector<CriticalTime> merged;
    for (const CriticalTime& entry : out.times) {
        if (!merged.empty()) {
            const double scale = std::max(merged.back().tau_m, entry.tau_m);
            if (entry.tau_m - merged.back().tau_m <= kCriticalDedupTol * scale)
                continue;
        }
        merged.push_back(entry);
    }
    out.times = std::move(merged);
    return out;
}

VerdictReport zeno_verdict(const BlockSpectra& spectra, double tau_m) {
    check_spectra(spectra);
    if (tau_m < 0.0 || !std::isfinite(tau_m))
        fail(ErrorCode::InvalidArgument, "verdict: window length must be nonnegative");

    VerdictReport report;
    const Eigen::Index levels = spectra.level_count();
    const Eigen::Index dim = spectra.block_dim();

    for (Eigen::Index n = 0; n < levels; ++n) {
        for (Eigen::Index l = n + 1; l < levels; ++l) {
            for (Eigen::Index beta = 0; beta < dim; ++beta) {
                for (Eigen::Index alpha = 0; alpha < dim; ++alpha) {
                    const double gap =
                        spectra.levels[l][alpha] - spectra.levels[n][beta];
                    if (std::abs(gap) < kDegenerateGapTol) {
                        report.has_degenerate = true;
                        continue;
                    }
                    if (std::abs(std::sin(0.5 * gap * tau_m)) < kSinZeroTol &&
                        report.verdict != Verdict::Critical) {
                        report.verdict = Verdict::Critical;
                        report.level_n = n;
                        report.level_l = l;
                        report.beta = beta;
                        report.alpha = alpha;
                    }
                }
            }
        }
    }

    if (report.verdict != Verdict::Critical && report.has_degenerate)
        report.verdict = Verdict::Degenerate;
    return report;
}

}  // namespace zeno
