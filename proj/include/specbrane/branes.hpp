#pragma once

#include "specbrane/curve_model.hpp"
#include "specbrane/divisor_calculus.hpp"
#include "specbrane/normalization.hpp"

#include <optional>
#include <vector>

namespace specbrane {

enum class StratumConstraint { fixed_multidegree, pullback_equals, union_over_orderings };

const char* to_string(StratumConstraint kind);

/// One ordering's contribution to a union-type stratum: per-position symbols
/// and their degrees.
struct OrderingStratum {
    std::vector<int> ordering;  // permutation of 1..s
    std::vector<LineBundleSymbol> symbols;
    MultiDegree degrees;
    bool feasible = true;
};

/// Names a locus inside a compactified Jacobian: the normalized node set R
/// together with a multidegree constraint. The common currency of brane
/// fibers and transform support checks.
struct StratumDescriptor {
    NodeSet R;
    StratumConstraint kind = StratumConstraint::fixed_multidegree;
    MultiDegree fixed;                      // fixed_multidegree
    std::vector<LineBundleSymbol> symbols;  // pullback_equals, per component
    MultiDegree symbol_degrees;             // resolved degrees of `symbols`
    std::vector<OrderingStratum> orderings;  // union_over_orderings
    Degree dimension = 0;
    std::optional<int> cohomological_shift;  // metadata; ignored by comparisons
};

/// Support-level equality on canonical forms (metadata excluded).
bool same_support(const StratumDescriptor& lhs, const StratumDescriptor& rhs);

/// Fiber of the Cartan locus over a nodal base point: pushforwards from the
/// full normalization with the unique admissible multidegree 0. Dimension is
/// that of the n-fold Jacobian product, n*g.
StratumDescriptor cartan_fiber(const SpectralConfig& cfg);

/// Fiber of the fixed-graded Borel locus: line bundles pulling back to the
/// constant reference tuple, a torus of dimension delta - n + 1.
StratumDescriptor uni_fiber(const SpectralConfig& cfg);

/// Ordered filtration with quotient degrees
/// md_{j_i} - sum_{k>i} |D_{j_i j_k}| at step i.
struct Filtration {
    std::vector<int> ordering;
    std::vector<LineBundleSymbol> steps;  // quotient symbol of step i
    MultiDegree quotient_degrees;
    Degree quotient_total = 0;
};

Filtration filtration(const SpectralConfig& cfg, const MultiDegree& md,
                      const std::vector<int>& ordering);

/// Step i of the two-part decomposition of the forward node divisor of
/// component j_i: the part missed by R and the part inside R. Their sizes
/// add up to (n-i)(2g-2) on Cartan configs.
struct BDivisorStep {
    int step = 0;       // i, 1-based
    int component = 0;  // j_i
    NodeSet outside_r;  // B_{J,i}
    NodeSet inside_r;   // B^{J,i}
};

std::vector<BDivisorStep> b_divisors(const SpectralConfig& cfg, const NodeSet& R,
                                     const std::vector<int>& ordering);

/// Candidate restriction symbols of the fixed-graded locus at a stratum R:
/// for each ordering J the per-step symbols Lhat(B^{J,i}) with degrees
/// (n-1)(g-1) + |B^{J,i}|. A containment statement, not a classification.
struct UniStratumCandidates {
    NodeSet R;
    std::vector<OrderingStratum> orderings;
    bool containment_only = true;
};

UniStratumCandidates uni_stratum_candidates(const SpectralConfig& cfg, const NodeSet& R);

/// Both sides of the half-dimension identity, computed independently.
struct DimensionAudit {
    Degree base_dim = 0;      // dimension of the relevant Hitchin base locus
    Degree fiber_dim = 0;     // generic fiber dimension of the Lagrangian
    Degree dim_total = 0;     // base + fiber
    Degree closed_form = 0;   // n^2(g-1) + 1
    Degree dim_moduli = 0;    // 2n^2(g-1) + 2
    bool lagrangian = false;  // dim_total == closed_form == dim_moduli / 2
};

DimensionAudit dimension_audit(const SpectralConfig& cfg);

/// Support comparison between the transform image of the Cartan fiber and the
/// fixed-graded fiber. The image descriptor is derived from cartan_fiber, not
/// copied from uni_fiber.
struct FmSupportReport {
    bool match = false;
    StratumDescriptor transform_image;
    StratumDescriptor uni;
};

FmSupportReport fm_support_match(const SpectralConfig& cfg);

/// All permutations of 1..s in lexicographic order; guarded for s <= 8.
std::vector<std::vector<int>> all_orderings(int s);

}  // namespace specbrane
