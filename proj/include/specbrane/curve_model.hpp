#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specbrane {

using Degree = std::int64_t;

/// Invalid user input (bad config, malformed arguments). CLI exit code 2.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical identity that must hold for every valid configuration failed.
/// Never expected at runtime; CLI exit code 3.
class identity_error : public std::logic_error {
public:
    explicit identity_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Irreducible component of the spectral curve. `index` is 1-based and
/// matches the position in SpectralConfig::components(). A rank-r component
/// is an r-sheeted spectral cover, of genus 1 + r^2(g-1).
struct Component {
    int index = 0;
    int rank = 1;
    int genus = 0;
};

/// A node joining two distinct components (endpoints 1-based, a < b).
struct Node {
    std::string id;
    int a = 0;
    int b = 0;
};

/// Subset of the nodes of a config, kept as sorted unique positions into
/// SpectralConfig::nodes().
using NodeSet = std::vector<std::uint32_t>;

/// Decorated dual graph of a totally reducible nodal spectral curve:
/// components carry (rank, genus), node multiplicity between components i<j
/// is 2*r_i*r_j*(g-1), and the graph is connected.
class SpectralConfig {
public:
    /// n rank-one components of genus g, 2(g-1) nodes per pair. Requires
    /// n >= 2, g >= 2.
    static SpectralConfig cartan(int n, int base_genus);

    /// One component per rank entry (nondecreasing, s >= 2), component i of
    /// genus 1 + r_i^2(g-1), 2*r_i*r_j*(g-1) nodes between i and j.
    static SpectralConfig parabolic(const std::vector<int>& ranks, int base_genus);

    /// Same shape as parabolic() but with a caller-supplied node list
    /// (ids and arrangement may differ from the generated ones; all config
    /// invariants are still enforced).
    static SpectralConfig with_nodes(const std::vector<int>& ranks, int base_genus,
                                     std::vector<Node> nodes);

    int base_genus() const { return base_genus_; }
    const std::vector<Component>& components() const { return components_; }
    const std::vector<Node>& nodes() const { return nodes_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    /// n = sum of ranks.
    int total_rank() const { return total_rank_; }

    bool is_cartan() const { return cartan_; }

    const Component& component(int index) const;

    /// Node positions between components i and j (unordered), in id order.
    const std::vector<std::uint32_t>& nodes_between(int i, int j) const;

    /// Node positions incident to component i.
    const std::vector<std::uint32_t>& nodes_at(int i) const;

    /// Position of a node id; throws config_error for unknown ids.
    std::uint32_t node_position(const std::string& id) const;

private:
    SpectralConfig() = default;
    void validate() const;
    void build_indexes();

    int base_genus_ = 0;
    int total_rank_ = 0;
    bool cartan_ = false;
    std::vector<Component> components_;
    std::vector<Node> nodes_;
    std::vector<std::vector<std::uint32_t>> pair_nodes_;      // (i,j) -> positions
    std::vector<std::vector<std::uint32_t>> incident_nodes_;  // i -> positions
};

/// Canonical node label for the k-th node (1-based) between components i<j.
std::string node_label(int i, int j, int k);

/// Validated NodeSet from node id strings (duplicates rejected).
NodeSet node_set_from_ids(const SpectralConfig& cfg, const std::vector<std::string>& ids);

/// All nodes of the config.
NodeSet full_node_set(const SpectralConfig& cfg);

std::vector<std::string> node_ids(const SpectralConfig& cfg, const NodeSet& set);

/// Labels components by connectivity of the dual graph with the edges in
/// `removed` deleted. Returns per-component group number, 0-based, numbered
/// by smallest member.
std::vector<int> component_labels_excluding(const SpectralConfig& cfg, const NodeSet& removed);

int component_count_excluding(const SpectralConfig& cfg, const NodeSet& removed);

/// Arithmetic genus via the dual graph: sum of component genera + |D| - s + 1.
/// Checks the closed form 1 + n^2(g-1) and throws identity_error on mismatch.
Degree arithmetic_genus(const SpectralConfig& cfg);

/// delta = n(n-1)(g-1), the degree making pushforwards degree-0 rank-n bundles.
Degree delta(const SpectralConfig& cfg);

struct ModuliDimensions {
    Degree dim_moduli = 0;  // 2n^2(g-1) + 2
    Degree dim_base = 0;    // sum_i (r_i^2(g-1) + 1); equals ng for Cartan configs
};

ModuliDimensions moduli_dimensions(const SpectralConfig& cfg);

}  // namespace specbrane
