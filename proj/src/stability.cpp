#include "specbrane/stability.hpp"

#include <algorithm>

namespace specbrane {

namespace {

Degree subcurve_rank(const SpectralConfig& cfg, const std::vector<int>& subset) {
    Degree n = 0;
    for (int i : subset) n += cfg.component(i).rank;
    return n;
}

Degree schaub_threshold(const SpectralConfig& cfg, const std::vector<int>& subset) {
    const Degree n_i = subcurve_rank(cfg, subset);
    return (n_i * n_i - n_i) * (cfg.base_genus() - 1);
}

// Depth-first walk over nonempty proper subsets of {1..s}, in increasing size
// then lexicographic order within each size.
template <typename Visit>
void for_each_proper_subset(int s, Visit&& visit) {
    std::vector<int> subset;
    for (int size = 1; size < s; ++size) {
        subset.assign(static_cast<std::size_t>(size), 0);
        auto rec = [&](auto&& self, int depth, int first) -> void {
            if (depth == size) {
                visit(subset);
                return;
            }
            for (int v = first; v <= s - (size - depth) + 1; ++v) {
                subset[static_cast<std::size_t>(depth)] = v;
                self(self, depth + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
}

}  // namespace

const char* to_string(StabilityStatus status) {
    switch (status) {
        case StabilityStatus::stable: return "stable";
        case StabilityStatus::strictly_semistable: return "strictly_semistable";
        case StabilityStatus::unstable: return "unstable";
    }
    return "?";
}

StabilityVerdict schaub_check(const SpectralConfig& cfg, const MultiDegree& md) {
    StabilityVerdict verdict;
    verdict.total = total_degree(cfg, md);
    verdict.expected_total = delta(cfg);
    verdict.total_matches = verdict.total == verdict.expected_total;

    bool any_failed = false;
    bool any_tight = false;
    for_each_proper_subset(cfg.component_count(), [&](const std::vector<int>& subset) {
        Degree lhs = 0;
        for (int i : subset) lhs += md[static_cast<std::size_t>(i - 1)];
        const Degree threshold = schaub_threshold(cfg, subset);
        if (lhs < threshold) {
            any_failed = true;
            verdict.witnesses.push_back(SubcurveWitness{subset, lhs, threshold, false});
        } else if (lhs == threshold) {
            any_tight = true;
            verdict.witnesses.push_back(SubcurveWitness{subset, lhs, threshold, true});
        }
    });

    verdict.status = any_failed ? StabilityStatus::unstable
                   : any_tight ? StabilityStatus::strictly_semistable
                               : StabilityStatus::stable;
    return verdict;
}

StabilityVerdict uni_fiber_stability_sweep(const SpectralConfig& cfg) {
    if (!cfg.is_cartan()) throw config_error("uni fiber stability sweep needs a Cartan config");
    const Degree n = cfg.total_rank();
    const MultiDegree md(static_cast<std::size_t>(cfg.component_count()),
                         (n - 1) * (cfg.base_genus() - 1));
    return schaub_check(cfg, md);
}

Degree generalized_threshold(const SpectralConfig& cfg, const std::vector<int>& subset,
                             Degree s, Degree d) {
    if (subset.empty() || subset.size() >= static_cast<std::size_t>(cfg.component_count()))
        throw config_error("subset must be nonempty and proper");
    const Degree n = cfg.total_rank();
    const Degree n_i = subcurve_rank(cfg, subset);
    return s * d * n_i - (n * n * n_i - n_i * n_i * n) * (cfg.base_genus() - 1);
}

GeneralizedThreshold generalized_threshold_report(const SpectralConfig& cfg,
                                                  const std::vector<int>& subset, Degree s,
                                                  Degree d) {
    GeneralizedThreshold report;
    report.subset = subset;
    std::sort(report.subset.begin(), report.subset.end());
    report.s = s;
    report.d = d;
    report.value = generalized_threshold(cfg, subset, s, d);
    report.schaub_threshold = schaub_threshold(cfg, subset);
    report.matches_schaub_at_d0 =
        generalized_threshold(cfg, subset, s, 0) == report.schaub_threshold;
    return report;
}

}  // namespace specbrane
