#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

/// An edge is a sorted list of r distinct vertex labels.
using Edge = std::vector<int>;
/// A sorted set of vertex labels, always within 0..n-1 of the hypergraph it refers to.
using VertexSet = std::vector<int>;

/// An r-uniform hypergraph on vertices 0..n-1. Immutable after construction;
/// edges are stored sorted (within each edge and lexicographically across edges)
/// with no duplicates, so iteration order is deterministic everywhere.
class Hypergraph {
public:
    Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges = {});

    int r() const { return r_; }
    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool has_edge(const Edge& sorted_edge) const;

    /// Number of edges containing each vertex.
    std::vector<int> degrees() const;
    /// Vertices contained in at least one edge.
    VertexSet support() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
};

/// A subgraph of `host` isomorphic to some pattern, identified by its edge set.
struct Copy {
    const Hypergraph* host = nullptr;
    std::vector<int> edge_indices;  // sorted indices into host->edges()
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Text format: header "r=<int> n=<int>" followed by semicolon-separated edges,
/// each a whitespace-separated vertex list; '#' starts a comment that runs to
/// the end of the line. A JSON object {"r":..,"n":..,"edges":[[..],..]} is
/// accepted with the same semantics (detected by a leading '{').
Hypergraph parse_hypergraph(const std::string& text);

/// Deterministic reprint: edges sorted lexicographically, e.g.
/// "r=2 n=3; 0 1; 0 2; 1 2". An edgeless hypergraph prints as "r=2 n=2;".
std::string serialize_hypergraph(const Hypergraph& h);

/// JSON mirror of the text format.
std::string serialize_hypergraph_json(const Hypergraph& h);

/// Hypergraph on |w| relabeled vertices whose edges are exactly the edges of h
/// inside w. Vertices of w are relabeled 0..|w|-1 in ascending order.
Hypergraph induced(const Hypergraph& h, const VertexSet& w);

/// Copy of h restricted to its support (isolated vertices removed, relabeled).
Hypergraph strip_isolated(const Hypergraph& h);

/// True iff h has at least one vertex and every pair of vertices is joined by
/// a path of pairwise-intersecting edges. A single vertex counts as connected;
/// an isolated vertex next to anything else does not.
bool is_connected(const Hypergraph& h);

/// True iff deleting s leaves fewer than 2 vertices or a disconnected remainder.
bool is_vertex_cut(const Hypergraph& h, const VertexSet& s);

/// True iff the vertices admit a partition into at most r classes such that
/// every edge meets each class at most once.
bool is_strongly_r_partite(const Hypergraph& h);

/// Minimum k such that some k-coloring of the vertices leaves no edge
/// monochromatic. Edgeless hypergraphs need 1 color; the empty hypergraph 0.
int chromatic_number(const Hypergraph& h);

/// Isomorphism-invariant key: equal for two hypergraphs iff they are
/// isomorphic. Decided by permutation search with vertex-invariant and twin
/// pruning; intended for v(h) <= max_vertices (default 12).
std::string canonical_form(const Hypergraph& h, int max_vertices = 12);

/// All distinct subgraphs of host isomorphic to pattern, deduplicated by edge
/// set. Isolated vertices of the pattern are ignored.
std::vector<Copy> copies_of(const Hypergraph& pattern, const Hypergraph& host);

/// Early-exit variant of copies_of.
bool contains_copy(const Hypergraph& pattern, const Hypergraph& host);

/// Complete r-graph on m vertices (edgeless when m < r).
Hypergraph complete_hypergraph(int r, int m);

}  // namespace ramsey
