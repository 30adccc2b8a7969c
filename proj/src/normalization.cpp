#include "specbrane/normalization.hpp"

#include <algorithm>

namespace specbrane {

PartialNormalization normalize(const SpectralConfig& cfg, const NodeSet& R) {
    for (std::uint32_t pos : R)
        if (pos >= cfg.nodes().size()) throw config_error("node position out of range");

    PartialNormalization pn;
    pn.R = R;
    std::sort(pn.R.begin(), pn.R.end());

    const std::vector<int> label = component_labels_excluding(cfg, pn.R);
    const int n_r = 1 + *std::max_element(label.begin(), label.end());

    pn.groups.assign(static_cast<std::size_t>(n_r), {});
    for (int v = 1; v <= cfg.component_count(); ++v)
        pn.groups[static_cast<std::size_t>(label[static_cast<std::size_t>(v - 1)])].push_back(v);
    pn.internal_r.assign(static_cast<std::size_t>(n_r), {});
    pn.residual.assign(static_cast<std::size_t>(n_r), {});

    std::vector<char> in_r(cfg.nodes().size(), 0);
    for (std::uint32_t pos : pn.R) in_r[pos] = 1;

    for (std::uint32_t pos = 0; pos < cfg.nodes().size(); ++pos) {
        const Node& nd = cfg.nodes()[pos];
        const int la = label[static_cast<std::size_t>(nd.a - 1)];
        const int lb = label[static_cast<std::size_t>(nd.b - 1)];
        if (la != lb) {
            // an edge across groups is necessarily a removed one
            pn.separating.push_back(pos);
        } else if (in_r[pos]) {
            pn.internal_r[static_cast<std::size_t>(la)].push_back(pos);
        } else {
            pn.residual[static_cast<std::size_t>(la)].push_back(pos);
        }
    }
    return pn;
}

Degree partial_normalization_genus(const SpectralConfig& cfg, const PartialNormalization& pn) {
    Degree total = 0;
    for (std::size_t gi = 0; gi < pn.groups.size(); ++gi) {
        Degree genus_sum = 0;
        for (int v : pn.groups[gi]) genus_sum += cfg.component(v).genus;
        total += genus_sum + static_cast<Degree>(pn.residual[gi].size()) -
                 static_cast<Degree>(pn.groups[gi].size()) + 1;
    }
    return total;
}

AdmissibleMultidegrees admissible_multidegrees(const SpectralConfig& cfg,
                                               const PartialNormalization& pn) {
    AdmissibleMultidegrees out;
    out.strict_semistability_forced = !pn.separating.empty();

    if (cfg.is_cartan()) {
        for (const NodeSet& d_i : pn.residual) out.eta.push_back(static_cast<Degree>(d_i.size()));
        return out;
    }

    if (pn.R.size() != cfg.nodes().size())
        throw config_error(
            "admissible multidegrees on a non-Cartan config are only known at the full "
            "normalization R = D");
    const Degree g1 = cfg.base_genus() - 1;
    for (const std::vector<int>& group : pn.groups) {
        const Degree r = cfg.component(group.front()).rank;
        out.eta.push_back((r * r - r) * g1);
    }
    return out;
}

std::vector<NodeSet> stratum_representatives(const SpectralConfig& cfg) {
    const int s = cfg.component_count();
    std::vector<const std::vector<std::uint32_t>*> pairs;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) pairs.push_back(&cfg.nodes_between(i, j));

    std::vector<NodeSet> out;
    std::vector<std::size_t> profile(pairs.size(), 0);
    while (true) {
        NodeSet rep;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            rep.insert(rep.end(), pairs[p]->begin(), pairs[p]->begin() +
                       static_cast<std::ptrdiff_t>(profile[p]));
        std::sort(rep.begin(), rep.end());
        out.push_back(std::move(rep));

        // next profile, lexicographic with the last pair fastest
        std::size_t p = pairs.size();
        while (p > 0) {
            --p;
            if (profile[p] < pairs[p]->size()) {
                ++profile[p];
                break;
            }
            profile[p] = 0;
            if (p == 0) return out;
        }
        if (pairs.empty()) return out;
    }
}

std::vector<NodeSet> all_node_subsets(const SpectralConfig& cfg, int cap) {
    const int m = cfg.node_count();
    if (m > cap)
        throw config_error("explicit enumeration over " + std::to_string(m) +
                           " nodes exceeds the cap of " + std::to_string(cap));
    std::vector<NodeSet> out;
    out.reserve(1ull << m);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        NodeSet set;
        for (int t = 0; t < m; ++t)
            if (mask & (1ull << t)) set.push_back(static_cast<std::uint32_t>(t));
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<PartialNormalization> enumerate_strata(const SpectralConfig& cfg, StrataMode mode,
                                                   int cap) {
    const std::vector<NodeSet> sets = mode == StrataMode::by_profile
                                          ? stratum_representatives(cfg)
                                          : all_node_subsets(cfg, cap);
    std::vector<PartialNormalization> out;
    out.reserve(sets.size());
    for (const NodeSet& set : sets) out.push_back(normalize(cfg, set));
    return out;
}

}  // namespace specbrane
