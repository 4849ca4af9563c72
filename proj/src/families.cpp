#include "ramsey/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "ramsey/densities.hpp"

namespace ramsey {

CoverageReport is_pairwise_covered(const Hypergraph& f) {
    const int n = f.n();
    std::vector<std::vector<char>> covered(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : f.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                covered[static_cast<std::size_t>(e[i])][static_cast<std::size_t>(e[j])] = 1;
                covered[static_cast<std::size_t>(e[j])][static_cast<std::size_t>(e[i])] = 1;
            }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!covered[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                return {false, std::make_pair(u, v)};
    return {true, std::nullopt};
}

ConnectivityReport is_nontrivially_connected(const Hypergraph& f) {
    const int n = f.n();
    if (n > 12)
        throw std::invalid_argument("non-trivial connectivity: vertex count exceeds bound 12");
    if (!is_connected(f)) return {false, VertexSet{}};

    // Cuts enumerated by size then lexicographically, so the witness is the
    // smallest one.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) masks.push_back(w);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint32_t w : masks) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (w & (std::uint32_t{1} << v)) s.push_back(v);
        if (!is_vertex_cut(f, s)) continue;
        if (is_strongly_r_partite(induced(f, s))) return {false, s};
    }
    return {true, std::nullopt};
}

ClassReport family_membership(const Hypergraph& f) {
    const ConnectivityReport x = is_nontrivially_connected(f);
    const CoverageReport y = is_pairwise_covered(f);
    ClassReport rep;
    rep.in_xr = x.member;
    rep.in_yr = y.member;
    if (!x.member && is_connected(f)) rep.xr_witness = x.witness;
    rep.yr_witness = y.witness;
    return rep;
}

DensenessResult ramsey_dense_sufficient(const Hypergraph& t, const Hypergraph& f) {
    const Rational mt = max_r_density(t).value;
    const Rational mf = max_r_density(f).value;
    if (!(mt >= mf && mf > Rational(1)))
        throw std::invalid_argument("denseness check requires m_r(T) >= m_r(F) > 1, got m_r(T)=" +
                                    mt.str() + ", m_r(F)=" + mf.str());
    if (f.r() == 2) return {Denseness::Proven, std::nullopt, "pair of 2-graphs"};

    // Candidate subgraphs with the same maximum r-density: the hypergraph
    // itself, proper induced subgraphs (largest first), and the spanning
    // subgraphs missing one edge.
    std::vector<Hypergraph> candidates;
    candidates.push_back(f);
    const int n = f.n();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t w = 0; w + 1 < (std::uint32_t{1} << n); ++w) masks.push_back(w);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    for (std::uint32_t w : masks) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (w & (std::uint32_t{1} << v)) s.push_back(v);
        candidates.push_back(induced(f, s));
    }
    for (int drop = 0; drop < f.edge_count(); ++drop) {
        std::vector<Edge> edges;
        for (int i = 0; i < f.edge_count(); ++i)
            if (i != drop) edges.push_back(f.edge(i));
        candidates.emplace_back(f.r(), f.n(), std::move(edges));
    }

    for (const Hypergraph& cand : candidates) {
        if (cand.edge_count() == 0) continue;
        if (max_r_density(cand).value != mf) continue;
        if (!is_strictly_r_balanced(cand)) continue;
        if (chromatic_number(cand) > f.r())
            return {Denseness::Proven, cand, "strictly balanced subgraph with chromatic number above r"};
    }
    return {Denseness::Inconclusive, std::nullopt, ""};
}

}  // namespace ramsey
