#pragma once

#include "specbrane/branes.hpp"
#include "specbrane/curve_model.hpp"
#include "specbrane/divisor_calculus.hpp"

#include <vector>

namespace specbrane {

/// A rank partition with per-block bundle degrees. The working degrees are
/// d_i = e_i + (r_i^2 - r_i)(g-1).
struct PartitionSpec {
    std::vector<int> ranks;      // nondecreasing, length s >= 2
    std::vector<Degree> degrees; // e_i
    int genus = 0;

    int length() const { return static_cast<int>(ranks.size()); }
    int total_rank() const;
    void validate() const;
    Degree d(int i) const;  // 1-based
};

struct SubsetCheck {
    std::vector<int> subset;  // positions into the ordering, 1-based
    Degree lhs = 0;
    Degree threshold = 0;
    bool pass = false;
};

/// Feasibility of an ordering J: the ledger of strict subset inequalities
/// sum_{i in I} d_i^J > (r_I^2 - r_I)(g-1) and the exact total
/// sum d_i^J = (n^2 - n)(g-1), where d_i^J = d_{j_i} + 2 R_i^J (g-1) and
/// R_i^J = sum_{k>i} r_{j_i} r_{j_k}.
struct FeasibilityReport {
    std::vector<int> ordering;
    std::vector<Degree> d_ordered;  // d_i^J by position
    std::vector<SubsetCheck> ledger;
    Degree total = 0;
    Degree expected_total = 0;
    bool total_ok = false;
    bool pass = false;
};

FeasibilityReport assumption_check(const PartitionSpec& spec, const std::vector<int>& ordering);

/// Exhaustive scan over the integer box [lo,hi]^s of degree tuples and all
/// orderings; returns the passing (degrees, ordering) pairs in lexicographic
/// order. Requires s <= 8.
struct FeasibleWitness {
    std::vector<Degree> degrees;
    std::vector<int> ordering;
};

std::vector<FeasibleWitness> find_feasible(const std::vector<int>& ranks, int genus, Degree lo,
                                           Degree hi);

/// For equal ranks r the choice m_i = (n-1)(g-1) satisfies the subset
/// inequalities strictly with d_i^J = r*m_i; returns the m vector, the
/// induced degrees e_i for the identity ordering, and the resulting ledger.
struct MiConstruction {
    std::vector<Degree> m;
    std::vector<Degree> degrees;    // induced e_i
    std::vector<Degree> d_ordered;  // d_i^J = r*m_i
    FeasibilityReport check;
};

MiConstruction mi_construction(const std::vector<int>& ranks, int genus);

/// Fiber of the Levi locus over a nodal base point: pushforwards from the
/// full normalization with multidegree ((r_i^2 - r_i)(g-1))_i.
StratumDescriptor levi_fiber(const SpectralConfig& cfg);

/// Same quotient law as the Borel filtration, on a partition config.
Filtration parabolic_filtration(const SpectralConfig& cfg, const MultiDegree& md,
                                const std::vector<int>& ordering);

/// Fiber of the fixed-graded parabolic locus: union over orderings J of the
/// pullback preimages of the J-twisted reference tuple, with position degrees
/// taken from the d^J ledger. Each stratum is a torus of dimension
/// delta_partition - s + 1. Requires a feasible ordering.
StratumDescriptor parabolic_uni_fiber(const PartitionSpec& spec, const SpectralConfig& cfg);

DimensionAudit parabolic_dimension_audit(const PartitionSpec& spec);

/// Sum over i<j of 2 r_i r_j (g-1): the number of nodes of the partition
/// config.
Degree partition_node_degree(const std::vector<int>& ranks, int genus);

/// Nondecreasing positive tuples summing to n, lexicographic.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace specbrane
