#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

struct CatalogEntry {
    std::string name;
    Hypergraph hypergraph;
};

/// Bundled small hypergraphs addressable by name everywhere a file path is
/// accepted: complete graphs K2..K8, complete 3-graphs K3_3..K8_3, cycles
/// C3..C6, paths P2..P5 (Pk has k vertices), and K6-e (K6 minus one edge).
const std::vector<CatalogEntry>& catalog();

std::optional<Hypergraph> catalog_lookup(std::string_view name);

Hypergraph complete_graph(int m);  // r = 2
Hypergraph cycle_graph(int m);
Hypergraph path_graph(int vertices);

}  // namespace ramsey
