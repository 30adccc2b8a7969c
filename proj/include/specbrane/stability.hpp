#pragma once

#include "specbrane/curve_model.hpp"
#include "specbrane/divisor_calculus.hpp"

#include <vector>

namespace specbrane {

enum class StabilityStatus { stable, strictly_semistable, unstable };

const char* to_string(StabilityStatus status);

/// One subcurve inequality that failed or is tight: the components I of the
/// subcurve, the restricted degree, and the threshold (n_I^2 - n_I)(g-1).
struct SubcurveWitness {
    std::vector<int> subset;  // 1-based component indices, sorted
    Degree lhs = 0;
    Degree threshold = 0;
    bool tight = false;  // lhs == threshold (failed otherwise)
};

struct StabilityVerdict {
    StabilityStatus status = StabilityStatus::stable;
    std::vector<SubcurveWitness> witnesses;  // tight and failed subsets, canonical order
    Degree total = 0;
    Degree expected_total = 0;  // delta
    bool total_matches = false;
};

/// Subcurve inequality check for a line-bundle multidegree: every nonempty
/// proper component subset I must satisfy sum_{i in I} md_i > (n_I^2-n_I)(g-1)
/// for stability (>= for semistability), n_I = sum of ranks over I.
/// The full-set total is compared against delta and reported, not enforced.
StabilityVerdict schaub_check(const SpectralConfig& cfg, const MultiDegree& md);

/// Runs schaub_check on the constant multidegree ((n-1)(g-1), ...), which
/// must come out stable on every Cartan config.
StabilityVerdict uni_fiber_stability_sweep(const SpectralConfig& cfg);

/// Subcurve threshold in the degree-sd moduli space, evaluated verbatim:
/// s*d*n_I - (n^2*n_I - n_I^2*n)(g-1).
Degree generalized_threshold(const SpectralConfig& cfg, const std::vector<int>& subset,
                             Degree s, Degree d);

/// Companion record: the verbatim threshold does not reduce to the subcurve
/// threshold at d = 0; both values are reported side by side.
struct GeneralizedThreshold {
    std::vector<int> subset;
    Degree s = 0;
    Degree d = 0;
    Degree value = 0;
    Degree schaub_threshold = 0;
    bool matches_schaub_at_d0 = false;
};

GeneralizedThreshold generalized_threshold_report(const SpectralConfig& cfg,
                                                  const std::vector<int>& subset, Degree s,
                                                  Degree d);

}  // namespace specbrane
