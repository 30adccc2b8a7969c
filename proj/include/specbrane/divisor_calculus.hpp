#pragma once

#include "specbrane/curve_model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specbrane {

/// Per-component integer degrees of a line bundle (one entry per component
/// of a config, or per connected component of a partial normalization).
using MultiDegree = std::vector<Degree>;

enum class BaseSymbol {
    trivial,  // O, degree 0
    lhat,     // the fixed reference bundle; degree (n-1)(g-1) per component on
              // Cartan configs, supplied per-component degrees otherwise
    abstract  // an opaque degree-0 tag (e.g. a topologically trivial bundle)
};

/// Symbolic line bundle on a config: a base bundle tensored by canonical
/// powers and by node divisors, tracked per component.
struct LineBundleSymbol {
    BaseSymbol base = BaseSymbol::trivial;
    std::string label;                                           // for abstract
    std::optional<MultiDegree> base_degrees;                     // overrides lhat default
    std::vector<int> k_power;                                    // per component
    std::vector<std::vector<std::pair<std::uint32_t, int>>> node_twists;  // (node pos, sign)

    static LineBundleSymbol trivial_on(const SpectralConfig& cfg);
    static LineBundleSymbol lhat_on(const SpectralConfig& cfg);
    static LineBundleSymbol lhat_on(const SpectralConfig& cfg, MultiDegree supplied);
    static LineBundleSymbol abstract_on(const SpectralConfig& cfg, std::string label);

    LineBundleSymbol& twist_k(int component, int power);
    LineBundleSymbol& twist_node(int component, std::uint32_t node_pos, int sign);
};

/// deg L = sum of the restrictions' degrees.
Degree total_degree(const SpectralConfig& cfg, const MultiDegree& md);

/// Degree law of the pushforward along the partial normalization at R:
/// deg(nu_{R,*}F) = deg(F) + |R|.
Degree pushforward_degree(const SpectralConfig& cfg, const NodeSet& R, Degree f_degree);

/// Dimension |R| - n_R + 1 of the torus fiber of the pullback map
/// Jac(X) -> Jac(X_R), where n_R counts the connected components left after
/// deleting the R-edges.
Degree jacobian_fiber_dimension(const SpectralConfig& cfg, const NodeSet& R);

/// Evaluates a symbol to its multidegree: base degree + K-twists (a K-power
/// on a rank-r component contributes r(2g-2) per unit) + node twist signs.
MultiDegree symbol_degree(const SpectralConfig& cfg, const LineBundleSymbol& sym);

/// Tensor product of symbols; at most one factor may carry a non-trivial base.
LineBundleSymbol tensor(const SpectralConfig& cfg, const LineBundleSymbol& lhs,
                        const LineBundleSymbol& rhs);

}  // namespace specbrane
