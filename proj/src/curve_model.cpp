#include "specbrane/curve_model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace specbrane {

namespace {

int pair_slot(int s, int i, int j) {
    // lexicographic slot of the unordered pair (i,j), 1 <= i < j <= s
    int slot = 0;
    for (int a = 1; a < i; ++a) slot += s - a;
    return slot + (j - i - 1);
}

}  // namespace

std::string node_label(int i, int j, int k) {
    return "d" + std::to_string(i) + std::to_string(j) + "#" + std::to_string(k);
}

SpectralConfig SpectralConfig::cartan(int n, int base_genus) {
    if (n < 2) throw config_error("cartan config needs n >= 2, got n=" + std::to_string(n));
    return parabolic(std::vector<int>(static_cast<std::size_t>(n), 1), base_genus);
}

SpectralConfig SpectralConfig::parabolic(const std::vector<int>& ranks, int base_genus) {
    if (ranks.empty()) throw config_error("empty rank partition");
    if (base_genus < 2)
        throw config_error("base genus must be >= 2, got g=" + std::to_string(base_genus));
    const int s = static_cast<int>(ranks.size());
    std::vector<Node> nodes;
    for (int i = 1; i <= s; ++i) {
        for (int j = i + 1; j <= s; ++j) {
            const long long count = 2LL * ranks[i - 1] * ranks[j - 1] * (base_genus - 1);
            for (long long k = 1; k <= count; ++k)
                nodes.push_back(Node{node_label(i, j, static_cast<int>(k)), i, j});
        }
    }
    return with_nodes(ranks, base_genus, std::move(nodes));
}

SpectralConfig SpectralConfig::with_nodes(const std::vector<int>& ranks, int base_genus,
                                          std::vector<Node> nodes) {
    if (base_genus < 2)
        throw config_error("base genus must be >= 2, got g=" + std::to_string(base_genus));
    if (ranks.size() < 2) throw config_error("need at least 2 components");
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
        if (ranks[i] > ranks[i + 1]) throw config_error("ranks must be nondecreasing");

    SpectralConfig cfg;
    cfg.base_genus_ = base_genus;
    cfg.nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const int r = ranks[i];
        if (r < 1) throw config_error("component ranks must be >= 1");
        cfg.components_.push_back(
            Component{static_cast<int>(i) + 1, r, 1 + r * r * (base_genus - 1)});
        cfg.total_rank_ += r;
    }
    if (cfg.total_rank_ < 2) throw config_error("total rank n must be >= 2");
    cfg.cartan_ = std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 1; });
    cfg.build_indexes();
    cfg.validate();
    return cfg;
}

void SpectralConfig::build_indexes() {
    const int s = component_count();
    pair_nodes_.assign(static_cast<std::size_t>(s) * (s - 1) / 2, {});
    incident_nodes_.assign(static_cast<std::size_t>(s), {});
    for (std::uint32_t pos = 0; pos < nodes_.size(); ++pos) {
        const Node& nd = nodes_[pos];
        if (nd.a < 1 || nd.b < 1 || nd.a > s || nd.b > s)
            throw config_error("node '" + nd.id + "' references an unknown component");
        if (nd.a == nd.b)
            throw config_error("node '" + nd.id + "' joins a component to itself");
        const int i = std::min(nd.a, nd.b), j = std::max(nd.a, nd.b);
        pair_nodes_[static_cast<std::size_t>(pair_slot(s, i, j))].push_back(pos);
        incident_nodes_[static_cast<std::size_t>(i - 1)].push_back(pos);
        incident_nodes_[static_cast<std::size_t>(j - 1)].push_back(pos);
    }
}

void SpectralConfig::validate() const {
    const int s = component_count();

    std::unordered_map<std::string, int> seen;
    for (const Node& nd : nodes_)
        if (++seen[nd.id] > 1) throw config_error("duplicate node id '" + nd.id + "'");

    for (int i = 1; i <= s; ++i) {
        for (int j = i + 1; j <= s; ++j) {
            const long long want =
                2LL * component(i).rank * component(j).rank * (base_genus_ - 1);
            const long long got = static_cast<long long>(nodes_between(i, j).size());
            if (got != want)
                throw config_error("components " + std::to_string(i) + "," + std::to_string(j) +
                                   " must meet in " + std::to_string(want) + " nodes, got " +
                                   std::to_string(got));
        }
    }

    if (component_count_excluding(*this, {}) != 1)
        throw config_error("dual graph must be connected");
}

const Component& SpectralConfig::component(int index) const {
    if (index < 1 || index > component_count())
        throw config_error("component index out of range: " + std::to_string(index));
    return components_[static_cast<std::size_t>(index - 1)];
}

const std::vector<std::uint32_t>& SpectralConfig::nodes_between(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > component_count() || j > component_count())
        throw config_error("invalid component pair");
    if (i > j) std::swap(i, j);
    return pair_nodes_[static_cast<std::size_t>(pair_slot(component_count(), i, j))];
}

const std::vector<std::uint32_t>& SpectralConfig::nodes_at(int i) const {
    component(i);
    return incident_nodes_[static_cast<std::size_t>(i - 1)];
}

std::uint32_t SpectralConfig::node_position(const std::string& id) const {
    for (std::uint32_t pos = 0; pos < nodes_.size(); ++pos)
        if (nodes_[pos].id == id) return pos;
    throw config_error("unknown node id '" + id + "'");
}

NodeSet node_set_from_ids(const SpectralConfig& cfg, const std::vector<std::string>& ids) {
    NodeSet set;
    set.reserve(ids.size());
    for (const std::string& id : ids) set.push_back(cfg.node_position(id));
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw config_error("node set contains a repeated id");
    return set;
}

NodeSet full_node_set(const SpectralConfig& cfg) {
    NodeSet set(static_cast<std::size_t>(cfg.node_count()));
    std::iota(set.begin(), set.end(), 0u);
    return set;
}

std::vector<std::string> node_ids(const SpectralConfig& cfg, const NodeSet& set) {
    std::vector<std::string> ids;
    ids.reserve(set.size());
    for (std::uint32_t pos : set) {
        if (pos >= cfg.nodes().size()) throw config_error("node position out of range");
        ids.push_back(cfg.nodes()[pos].id);
    }
    return ids;
}

std::vector<int> component_labels_excluding(const SpectralConfig& cfg, const NodeSet& removed) {
    const int s = cfg.component_count();
    std::vector<int> parent(static_cast<std::size_t>(s));
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };

    std::vector<char> gone(cfg.nodes().size(), 0);
    for (std::uint32_t pos : removed) {
        if (pos >= cfg.nodes().size()) throw config_error("node position out of range");
        gone[pos] = 1;
    }
    for (std::uint32_t pos = 0; pos < cfg.nodes().size(); ++pos) {
        if (gone[pos]) continue;
        const Node& nd = cfg.nodes()[pos];
        const int ra = find(nd.a - 1), rb = find(nd.b - 1);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }

    std::vector<int> label(static_cast<std::size_t>(s), -1);
    int next = 0;
    for (int v = 0; v < s; ++v) {
        const int root = find(v);
        if (label[static_cast<std::size_t>(root)] < 0) label[static_cast<std::size_t>(root)] = next++;
        label[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(root)];
    }
    return label;
}

int component_count_excluding(const SpectralConfig& cfg, const NodeSet& removed) {
    const std::vector<int> label = component_labels_excluding(cfg, removed);
    return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

Degree arithmetic_genus(const SpectralConfig& cfg) {
    Degree sum = 0;
    for (const Component& c : cfg.components()) sum += c.genus;
    const Degree graph = sum + cfg.node_count() - cfg.component_count() + 1;
    const Degree n = cfg.total_rank();
    const Degree closed = 1 + n * n * (cfg.base_genus() - 1);
    if (graph != closed)
        throw identity_error("arithmetic genus mismatch: graph formula " + std::to_string(graph) +
                             " vs closed form " + std::to_string(closed));
    return graph;
}

Degree delta(const SpectralConfig& cfg) {
    const Degree n = cfg.total_rank();
    return n * (n - 1) * (cfg.base_genus() - 1);
}

ModuliDimensions moduli_dimensions(const SpectralConfig& cfg) {
    const Degree n = cfg.total_rank();
    const Degree g1 = cfg.base_genus() - 1;
    ModuliDimensions dims;
    dims.dim_moduli = 2 * n * n * g1 + 2;
    for (const Component& c : cfg.components())
        dims.dim_base += static_cast<Degree>(c.rank) * c.rank * g1 + 1;
    if (cfg.is_cartan() && dims.dim_base != n * cfg.base_genus())
        throw identity_error("Cartan base dimension must equal n*g");
    return dims;
}

}  // namespace specbrane
