#include "specbrane/divisor_calculus.hpp"

#include <algorithm>

namespace specbrane {

namespace {

LineBundleSymbol blank(const SpectralConfig& cfg, BaseSymbol base) {
    LineBundleSymbol sym;
    sym.base = base;
    sym.k_power.assign(static_cast<std::size_t>(cfg.component_count()), 0);
    sym.node_twists.assign(static_cast<std::size_t>(cfg.component_count()), {});
    return sym;
}

void check_shape(const SpectralConfig& cfg, const LineBundleSymbol& sym) {
    const std::size_t s = static_cast<std::size_t>(cfg.component_count());
    if (sym.k_power.size() != s || sym.node_twists.size() != s)
        throw config_error("symbol is indexed by a different config");
    if (sym.base_degrees && sym.base_degrees->size() != s)
        throw config_error("supplied base degrees have wrong length");
}

}  // namespace

LineBundleSymbol LineBundleSymbol::trivial_on(const SpectralConfig& cfg) {
    return blank(cfg, BaseSymbol::trivial);
}

LineBundleSymbol LineBundleSymbol::lhat_on(const SpectralConfig& cfg) {
    return blank(cfg, BaseSymbol::lhat);
}

LineBundleSymbol LineBundleSymbol::lhat_on(const SpectralConfig& cfg, MultiDegree supplied) {
    LineBundleSymbol sym = blank(cfg, BaseSymbol::lhat);
    if (supplied.size() != static_cast<std::size_t>(cfg.component_count()))
        throw config_error("supplied base degrees have wrong length");
    sym.base_degrees = std::move(supplied);
    return sym;
}

LineBundleSymbol LineBundleSymbol::abstract_on(const SpectralConfig& cfg, std::string label) {
    LineBundleSymbol sym = blank(cfg, BaseSymbol::abstract);
    sym.label = std::move(label);
    return sym;
}

LineBundleSymbol& LineBundleSymbol::twist_k(int component, int power) {
    k_power.at(static_cast<std::size_t>(component - 1)) += power;
    return *this;
}

LineBundleSymbol& LineBundleSymbol::twist_node(int component, std::uint32_t node_pos, int sign) {
    node_twists.at(static_cast<std::size_t>(component - 1)).emplace_back(node_pos, sign);
    return *this;
}

Degree total_degree(const SpectralConfig& cfg, const MultiDegree& md) {
    if (md.size() != static_cast<std::size_t>(cfg.component_count()))
        throw config_error("multidegree length does not match component count");
    Degree sum = 0;
    for (Degree d : md) sum += d;
    return sum;
}

Degree pushforward_degree(const SpectralConfig& cfg, const NodeSet& R, Degree f_degree) {
    for (std::uint32_t pos : R)
        if (pos >= cfg.nodes().size()) throw config_error("node position out of range");
    return f_degree + static_cast<Degree>(R.size());
}

Degree jacobian_fiber_dimension(const SpectralConfig& cfg, const NodeSet& R) {
    const int n_r = component_count_excluding(cfg, R);
    return static_cast<Degree>(R.size()) - n_r + 1;
}

MultiDegree symbol_degree(const SpectralConfig& cfg, const LineBundleSymbol& sym) {
    check_shape(cfg, sym);
    const int s = cfg.component_count();
    const Degree n = cfg.total_rank();
    const Degree g1 = cfg.base_genus() - 1;

    MultiDegree out(static_cast<std::size_t>(s), 0);
    for (int i = 1; i <= s; ++i) {
        const std::size_t slot = static_cast<std::size_t>(i - 1);
        Degree d = 0;
        switch (sym.base) {
            case BaseSymbol::trivial:
            case BaseSymbol::abstract:
                break;
            case BaseSymbol::lhat:
                if (sym.base_degrees) {
                    d = (*sym.base_degrees)[slot];
                } else {
                    if (!cfg.is_cartan())
                        throw config_error(
                            "lhat degree on a non-Cartan config must be supplied per component");
                    d = (n - 1) * g1;
                }
                break;
        }
        d += static_cast<Degree>(sym.k_power[slot]) * 2 * g1 * cfg.component(i).rank;
        for (const auto& [pos, sign] : sym.node_twists[slot]) {
            if (pos >= cfg.nodes().size()) throw config_error("twist node position out of range");
            const Node& nd = cfg.nodes()[pos];
            if (nd.a != i && nd.b != i)
                throw config_error("twist node '" + nd.id + "' is not incident to component " +
                                   std::to_string(i));
            d += sign;
        }
        out[slot] = d;
    }
    return out;
}

LineBundleSymbol tensor(const SpectralConfig& cfg, const LineBundleSymbol& lhs,
                        const LineBundleSymbol& rhs) {
    check_shape(cfg, lhs);
    check_shape(cfg, rhs);
    if (lhs.base != BaseSymbol::trivial && rhs.base != BaseSymbol::trivial)
        throw config_error("cannot tensor two symbols with non-trivial base");

    LineBundleSymbol out = lhs.base == BaseSymbol::trivial ? rhs : lhs;
    const LineBundleSymbol& other = lhs.base == BaseSymbol::trivial ? lhs : rhs;
    for (std::size_t slot = 0; slot < out.k_power.size(); ++slot) {
        out.k_power[slot] += other.k_power[slot];
        out.node_twists[slot].insert(out.node_twists[slot].end(),
                                     other.node_twists[slot].begin(),
                                     other.node_twists[slot].end());
    }
    return out;
}

}  // namespace specbrane
