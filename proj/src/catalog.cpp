#include "ramsey/catalog.hpp"

#include <algorithm>

namespace ramsey {

Hypergraph complete_graph(int m) { return complete_hypergraph(2, m); }

Hypergraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < m; ++v) {
        Edge e{v, (v + 1) % m};
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(2, m, std::move(edges));
}

Hypergraph path_graph(int vertices) {
    if (vertices < 2) throw std::invalid_argument("path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1});
    return Hypergraph(2, vertices, std::move(edges));
}

namespace {

Hypergraph k6_minus_edge() {
    const Hypergraph k6 = complete_graph(6);
    std::vector<Edge> edges;
    for (const Edge& e : k6.edges())
        if (!(e[0] == 0 && e[1] == 1)) edges.push_back(e);
    return Hypergraph(2, 6, std::move(edges));
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    for (int m = 2; m <= 8; ++m) out.push_back({"K" + std::to_string(m), complete_graph(m)});
    for (int m = 3; m <= 8; ++m)
        out.push_back({"K" + std::to_string(m) + "_3", complete_hypergraph(3, m)});
    for (int m = 3; m <= 6; ++m) out.push_back({"C" + std::to_string(m), cycle_graph(m)});
    for (int m = 2; m <= 5; ++m) out.push_back({"P" + std::to_string(m), path_graph(m)});
    out.push_back({"K6-e", k6_minus_edge()});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<Hypergraph> catalog_lookup(std::string_view name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e.hypergraph;
    return std::nullopt;
}

}  // namespace ramsey
