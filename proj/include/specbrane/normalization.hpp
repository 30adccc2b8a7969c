#pragma once

#include "specbrane/curve_model.hpp"

#include <vector>

namespace specbrane {

/// Partial normalization of a config along a node subset R. Connected
/// components are those of the dual graph with the R-edges deleted; groups
/// are listed by smallest member, members sorted.
struct PartialNormalization {
    NodeSet R;
    std::vector<std::vector<int>> groups;   // C_i as 1-based component indices
    NodeSet separating;                     // R_s: R-nodes joining different groups
    std::vector<NodeSet> internal_r;        // R_i: R-nodes inside group i
    std::vector<NodeSet> residual;          // D_i: untouched nodes inside group i

    int group_count() const { return static_cast<int>(groups.size()); }
};

PartialNormalization normalize(const SpectralConfig& cfg, const NodeSet& R);

/// Dual-graph genus of the normalized curve: sum over groups of
/// (component genera + |D_i| - |C_i| + 1). Satisfies
/// g(X_R) = n_R - 1 + g(X) - |R|.
Degree partial_normalization_genus(const SpectralConfig& cfg, const PartialNormalization& pn);

/// Degree sums eta_i per connected component forced on a line bundle upstairs
/// for its pushforward to have total degree delta with semistable image.
struct AdmissibleMultidegrees {
    std::vector<Degree> eta;                   // per group
    bool strict_semistability_forced = false;  // R_s nonempty
};

/// Cartan configs: eta_i = |D_i| for any R. Non-Cartan configs admit only the
/// full normalization R = D, with eta_i = (r_i^2 - r_i)(g-1); intermediate R
/// is rejected.
AdmissibleMultidegrees admissible_multidegrees(const SpectralConfig& cfg,
                                               const PartialNormalization& pn);

enum class StrataMode { by_profile, explicit_subsets };

/// Representative node subsets, one per multiplicity vector (count of chosen
/// nodes per component pair, pairs in lexicographic order). Output order is
/// lexicographic on the profile.
std::vector<NodeSet> stratum_representatives(const SpectralConfig& cfg);

/// All 2^|D| subsets in bitmask order over the node list. Throws config_error
/// when |D| exceeds the cap.
std::vector<NodeSet> all_node_subsets(const SpectralConfig& cfg, int cap);

std::vector<PartialNormalization> enumerate_strata(const SpectralConfig& cfg, StrataMode mode,
                                                   int cap = 20);

}  // namespace specbrane
