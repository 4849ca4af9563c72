#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// Witness-carrying membership answers for the two highly connected families.
struct ConnectivityReport {
    bool member = false;
    /// A vertex cut whose induced subhypergraph is strongly r-partite;
    /// present exactly when member is false.
    std::optional<VertexSet> witness;
};

struct CoverageReport {
    bool member = false;
    /// A pair of vertices contained in no common edge, present iff not member.
    std::optional<std::pair<int, int>> witness;
};

struct ClassReport {
    bool in_xr = false;
    bool in_yr = false;
    std::optional<VertexSet> xr_witness;                // iff !in_xr and connected
    std::optional<std::pair<int, int>> yr_witness;      // iff !in_yr
};

/// Non-trivially connected: every vertex cut induces a subhypergraph that is
/// not strongly r-partite. Disconnected hypergraphs are not members (the empty
/// cut already disconnects them). Exhaustive over all cuts; requires n <= 12.
ConnectivityReport is_nontrivially_connected(const Hypergraph& f);

/// Every pair of vertices lies in a common edge.
CoverageReport is_pairwise_covered(const Hypergraph& f);

ClassReport family_membership(const Hypergraph& f);

enum class Denseness { Proven, Inconclusive };

struct DensenessResult {
    Denseness verdict = Denseness::Inconclusive;
    /// The strictly r-balanced subgraph with chromatic number above r that
    /// proves the verdict, when one was needed.
    std::optional<Hypergraph> f_prime;
    std::string rule;
};

/// Sufficient check that the pair (t, f) is Ramsey-dense. Proven for every
/// pair of 2-graphs, or when f has a strictly r-balanced subgraph of equal
/// maximum r-density and chromatic number above r. Never disproves; requires
/// m_r(t) >= m_r(f) > 1.
DensenessResult ramsey_dense_sufficient(const Hypergraph& t, const Hypergraph& f);

}  // namespace ramsey
