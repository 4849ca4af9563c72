#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// One arrowing question: does every s-edge-coloring of host contain a
/// monochromatic copy of targets[i] in color i for some i?
struct ArrowInstance {
    Hypergraph host;
    std::vector<Hypergraph> targets;  // nonempty; uniformities match the host
};

/// A coloring of the host's edges, indexed like host.edges(), colors 0..s-1.
/// Refutes arrowing when no target copy is monochromatic in its own color.
using ArrowWitness = std::vector<int>;

enum class ArrowStatus { Arrows, NotArrows, Unknown };

struct ArrowResult {
    ArrowStatus status = ArrowStatus::Unknown;
    std::optional<ArrowWitness> witness;  // present iff NotArrows
    std::uint64_t nodes = 0;              // decision nodes explored
};

struct SearchLimits {
    std::uint64_t node_budget = 64'000'000;
};

/// Decides the instance by backtracking over edge colors with copy-state
/// propagation, branching on the edge in the most live copies. Exceeding the
/// node budget yields Unknown, never a guessed answer.
ArrowResult arrows(const ArrowInstance& inst, const SearchLimits& lim = {});

/// Independent certificate check: true iff no copy of targets[i] lies entirely
/// in color i. Implemented directly over copies_of, sharing nothing with the
/// search.
bool verify_witness(const ArrowInstance& inst, const ArrowWitness& w);

struct RamseyNumberResult {
    int value = 0;
    /// Non-arrowing coloring of the complete host on value-1 vertices.
    ArrowWitness witness_below;
    Hypergraph host_below;
};

struct RamseyNumberOutcome {
    enum class Status { Found, CapExceeded, Unknown } status = Status::Unknown;
    std::optional<RamseyNumberResult> result;
    int stopped_at = -1;  // host size at which the search gave out
    std::uint64_t nodes = 0;
};

/// Least N <= cap such that the complete r-graph on N vertices arrows the
/// tuple. Only complete hosts are examined: any N-vertex host that arrows
/// embeds in the complete one, and restricting a coloring of the complete
/// host to the subgraph's edges colors the subgraph, so the complete host
/// arrows whenever any N-vertex host does.
RamseyNumberOutcome ramsey_number(const std::vector<Hypergraph>& targets, int cap,
                                  const SearchLimits& lim = {});

}  // namespace ramsey
