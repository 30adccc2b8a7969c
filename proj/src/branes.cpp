#include "specbrane/branes.hpp"

#include <algorithm>
#include <numeric>

namespace specbrane {

namespace {

void check_ordering(const SpectralConfig& cfg, const std::vector<int>& ordering) {
    const int s = cfg.component_count();
    if (static_cast<int>(ordering.size()) != s)
        throw config_error("ordering length must equal the component count");
    std::vector<char> seen(static_cast<std::size_t>(s) + 1, 0);
    for (int v : ordering) {
        if (v < 1 || v > s || seen[static_cast<std::size_t>(v)])
            throw config_error("ordering is not a permutation of 1.." + std::to_string(s));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

void require_cartan(const SpectralConfig& cfg, const char* what) {
    if (!cfg.is_cartan())
        throw config_error(std::string(what) + " is defined for Cartan configs only");
}

MultiDegree resolve_degrees(const SpectralConfig& cfg,
                            const std::vector<LineBundleSymbol>& per_component) {
    MultiDegree out;
    out.reserve(per_component.size());
    for (std::size_t i = 0; i < per_component.size(); ++i)
        out.push_back(symbol_degree(cfg, per_component[i])[i]);
    return out;
}

}  // namespace

const char* to_string(StratumConstraint kind) {
    switch (kind) {
        case StratumConstraint::fixed_multidegree: return "fixed_multidegree";
        case StratumConstraint::pullback_equals: return "pullback_equals";
        case StratumConstraint::union_over_orderings: return "union_over_orderings";
    }
    return "?";
}

bool same_support(const StratumDescriptor& lhs, const StratumDescriptor& rhs) {
    if (lhs.R != rhs.R || lhs.kind != rhs.kind || lhs.dimension != rhs.dimension) return false;
    switch (lhs.kind) {
        case StratumConstraint::fixed_multidegree:
            return lhs.fixed == rhs.fixed;
        case StratumConstraint::pullback_equals:
            return lhs.symbol_degrees == rhs.symbol_degrees;
        case StratumConstraint::union_over_orderings: {
            if (lhs.orderings.size() != rhs.orderings.size()) return false;
            for (std::size_t i = 0; i < lhs.orderings.size(); ++i) {
                const OrderingStratum& a = lhs.orderings[i];
                const OrderingStratum& b = rhs.orderings[i];
                if (a.ordering != b.ordering || a.degrees != b.degrees ||
                    a.feasible != b.feasible)
                    return false;
            }
            return true;
        }
    }
    return false;
}

StratumDescriptor cartan_fiber(const SpectralConfig& cfg) {
    require_cartan(cfg, "cartan_fiber");

    StratumDescriptor desc;
    desc.R = full_node_set(cfg);
    desc.kind = StratumConstraint::fixed_multidegree;
    desc.fixed.assign(static_cast<std::size_t>(cfg.component_count()), 0);
    for (const Component& c : cfg.components()) desc.dimension += c.genus;

    // The multidegree 0 is the only admissible one at the full normalization.
    const AdmissibleMultidegrees adm = admissible_multidegrees(cfg, normalize(cfg, desc.R));
    for (Degree eta : adm.eta)
        if (eta != 0)
            throw identity_error("full normalization must force the zero multidegree");
    return desc;
}

StratumDescriptor uni_fiber(const SpectralConfig& cfg) {
    require_cartan(cfg, "uni_fiber");

    StratumDescriptor desc;
    desc.kind = StratumConstraint::pullback_equals;
    desc.symbols.assign(static_cast<std::size_t>(cfg.component_count()),
                        LineBundleSymbol::lhat_on(cfg));
    desc.symbol_degrees = resolve_degrees(cfg, desc.symbols);
    desc.dimension = jacobian_fiber_dimension(cfg, full_node_set(cfg));
    return desc;
}

Filtration filtration(const SpectralConfig& cfg, const MultiDegree& md,
                      const std::vector<int>& ordering) {
    check_ordering(cfg, ordering);
    if (md.size() != static_cast<std::size_t>(cfg.component_count()))
        throw config_error("multidegree length does not match component count");

    const int s = cfg.component_count();
    const Degree n = cfg.total_rank();
    const Degree g1 = cfg.base_genus() - 1;
    const bool uni_degrees =
        cfg.is_cartan() && std::all_of(md.begin(), md.end(),
                                       [&](Degree d) { return d == (n - 1) * g1; });

    Filtration fil;
    fil.ordering = ordering;
    for (int i = 1; i <= s; ++i) {
        const int comp = ordering[static_cast<std::size_t>(i - 1)];
        Degree forward = 0;
        LineBundleSymbol step = uni_degrees
                                    ? LineBundleSymbol::lhat_on(cfg).twist_k(comp, i - s)
                                    : LineBundleSymbol::abstract_on(cfg, "L");
        for (int k = i + 1; k <= s; ++k) {
            const int later = ordering[static_cast<std::size_t>(k - 1)];
            const auto& between = cfg.nodes_between(comp, later);
            forward += static_cast<Degree>(between.size());
            if (!uni_degrees)
                for (std::uint32_t pos : between) step.twist_node(comp, pos, -1);
        }
        const Degree q = md[static_cast<std::size_t>(comp - 1)] - forward;
        if (uni_degrees) {
            const Degree closed = (n - 1) * g1 + (i - n) * 2 * g1;
            if (q != closed)
                throw identity_error("quotient degree " + std::to_string(q) +
                                     " must equal the graded-piece degree " +
                                     std::to_string(closed));
        }
        fil.steps.push_back(std::move(step));
        fil.quotient_degrees.push_back(q);
        fil.quotient_total += q;
    }

    const Degree expected = total_degree(cfg, md) - cfg.node_count();
    if (fil.quotient_total != expected)
        throw identity_error("quotient degrees must telescope to total - |D|");
    return fil;
}

std::vector<BDivisorStep> b_divisors(const SpectralConfig& cfg, const NodeSet& R,
                                     const std::vector<int>& ordering) {
    require_cartan(cfg, "b_divisors");
    check_ordering(cfg, ordering);
    std::vector<char> in_r(cfg.nodes().size(), 0);
    for (std::uint32_t pos : R) {
        if (pos >= cfg.nodes().size()) throw config_error("node position out of range");
        in_r[pos] = 1;
    }

    const int s = cfg.component_count();
    const Degree g2 = 2 * (cfg.base_genus() - 1);
    std::vector<BDivisorStep> steps;
    steps.reserve(static_cast<std::size_t>(s));
    for (int i = 1; i <= s; ++i) {
        BDivisorStep step;
        step.step = i;
        step.component = ordering[static_cast<std::size_t>(i - 1)];
        for (int k = i + 1; k <= s; ++k) {
            const int later = ordering[static_cast<std::size_t>(k - 1)];
            for (std::uint32_t pos : cfg.nodes_between(step.component, later))
                (in_r[pos] ? step.inside_r : step.outside_r).push_back(pos);
        }
        std::sort(step.outside_r.begin(), step.outside_r.end());
        std::sort(step.inside_r.begin(), step.inside_r.end());
        const Degree want = static_cast<Degree>(s - i) * g2;
        if (static_cast<Degree>(step.outside_r.size() + step.inside_r.size()) != want)
            throw identity_error("forward node divisor of step " + std::to_string(i) +
                                 " must have degree (n-i)(2g-2)");
        steps.push_back(std::move(step));
    }
    return steps;
}

UniStratumCandidates uni_stratum_candidates(const SpectralConfig& cfg, const NodeSet& R) {
    require_cartan(cfg, "uni_stratum_candidates");

    UniStratumCandidates out;
    out.R = R;
    std::sort(out.R.begin(), out.R.end());
    for (const std::vector<int>& ordering : all_orderings(cfg.component_count())) {
        OrderingStratum stratum;
        stratum.ordering = ordering;
        for (const BDivisorStep& step : b_divisors(cfg, out.R, ordering)) {
            LineBundleSymbol sym = LineBundleSymbol::lhat_on(cfg);
            for (std::uint32_t pos : step.inside_r) sym.twist_node(step.component, pos, +1);
            stratum.degrees.push_back(
                symbol_degree(cfg, sym)[static_cast<std::size_t>(step.component - 1)]);
            stratum.symbols.push_back(std::move(sym));
        }
        out.orderings.push_back(std::move(stratum));
    }
    return out;
}

DimensionAudit dimension_audit(const SpectralConfig& cfg) {
    require_cartan(cfg, "dimension_audit");

    const Degree n = cfg.total_rank();
    const Degree g = cfg.base_genus();
    DimensionAudit audit;
    audit.base_dim = moduli_dimensions(cfg).dim_base;  // = n*g
    audit.fiber_dim = jacobian_fiber_dimension(cfg, full_node_set(cfg));
    audit.dim_total = audit.base_dim + audit.fiber_dim;
    audit.closed_form = n * n * (g - 1) + 1;
    audit.dim_moduli = moduli_dimensions(cfg).dim_moduli;
    audit.lagrangian =
        audit.dim_total == audit.closed_form && 2 * audit.dim_total == audit.dim_moduli;
    if (!audit.lagrangian)
        throw identity_error("half-dimension identity failed: " +
                             std::to_string(audit.dim_total) + " vs " +
                             std::to_string(audit.closed_form));
    return audit;
}

FmSupportReport fm_support_match(const SpectralConfig& cfg) {
    require_cartan(cfg, "fm_support_match");

    const StratumDescriptor cartan = cartan_fiber(cfg);
    const Degree n = cfg.total_rank();
    const Degree shift = (n - 1) * (cfg.base_genus() - 1);

    // Componentwise transform of the degree-0 tuple: each factor goes to the
    // point sheaf at the reference bundle, i.e. the degree-0 entry shifted by
    // (n-1)(g-1) lands on Lhat. The image lives on the locus of line bundles
    // pulling back to that constant tuple.
    FmSupportReport report;
    report.transform_image.kind = StratumConstraint::pullback_equals;
    for (std::size_t i = 0; i < cartan.fixed.size(); ++i) {
        const Degree deg = cartan.fixed[i] + shift;
        if (deg != shift)
            throw identity_error("transform image degree must be (n-1)(g-1)");
        report.transform_image.symbols.push_back(LineBundleSymbol::lhat_on(cfg));
    }
    report.transform_image.symbol_degrees =
        resolve_degrees(cfg, report.transform_image.symbols);
    report.transform_image.dimension = jacobian_fiber_dimension(cfg, cartan.R);
    report.transform_image.cohomological_shift = cfg.base_genus();

    report.uni = uni_fiber(cfg);
    report.match = same_support(report.transform_image, report.uni);
    return report;
}

std::vector<std::vector<int>> all_orderings(int s) {
    if (s < 1 || s > 8)
        throw config_error("ordering enumeration supports 1..8 components, got " +
                           std::to_string(s));
    std::vector<int> ordering(static_cast<std::size_t>(s));
    std::iota(ordering.begin(), ordering.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(ordering);
    } while (std::next_permutation(ordering.begin(), ordering.end()));
    return out;
}

}  // namespace specbrane
