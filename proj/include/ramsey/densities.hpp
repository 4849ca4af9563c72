#pragma once

#include <vector>

#include "ramsey/hypergraph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

struct DensityReport {
    Rational value;
    /// Vertex set of an induced subgraph attaining the maximum.
    VertexSet maximizer;
    /// Maximum attained only by the full hypergraph, with the spanning
    /// one-edge-deleted subgraph counted among the proper candidates.
    bool unique_at_whole = false;
};

/// A minimal strictly balanced pair carrying the same densities as (T, F):
/// f_prime is a strictly r-balanced subgraph of F with equal maximum
/// r-density, and t_prime is a subgraph of T that is strictly r-balanced
/// (equal-density case) or strictly f_prime-balanced (otherwise).
struct Heart {
    Hypergraph t_prime;
    Hypergraph f_prime;
};

struct ThresholdExponents {
    Rational appearance_density;  // max of the plain maximum densities
    Rational arrowing_density;    // min asymmetric density of a source against Q_{s+1}
    Rational governing_density;   // max of the two; the threshold exponent is its -1/x
    int arrowing_source_index;    // 0-based source attaining arrowing_density
};

/// max e(J)/v(J) over subgraphs; 0 for an edgeless hypergraph.
DensityReport max_density(const Hypergraph& f);

/// Maximum r-density: 0 if no edges, 1/r if one edge, otherwise the maximum of
/// (e(J)-1)/(v(J)-r) over subgraphs with more than r vertices.
DensityReport max_r_density(const Hypergraph& f);

/// Asymmetric maximum r-density of the ordered pair (t, f): the maximum of
/// e(J)/(v(J)-r+1/m_r(f)) over subgraphs J of t with at least one edge.
/// Requires m_r(t) >= m_r(f) > 0.
DensityReport asym_density(const Hypergraph& t, const Hypergraph& f);

/// True iff every proper subgraph of f has strictly smaller maximum r-density.
/// Requires at least one edge.
bool is_strictly_r_balanced(const Hypergraph& f);

/// True iff the asymmetric maximum of (t, f) is attained only at t. When the
/// two maximum r-densities coincide, single-edge subgraphs always tie the
/// maximum, so the check degenerates to strict r-balance of t.
bool is_strictly_f_balanced(const Hypergraph& t, const Hypergraph& f);

/// Smallest heart of (t, f), minimizing (v(F'), e(F'), v(T'), e(T'))
/// lexicographically. Returned parts are relabeled onto 0..v-1.
Heart find_heart(const Hypergraph& t, const Hypergraph& f);

/// Threshold densities for R(H; sources) inside R(qs[0..t-1]). Requires
/// 2 <= sources < qs.size() and non-increasing, positive maximum r-densities.
ThresholdExponents threshold_exponents(const std::vector<Hypergraph>& qs, int sources);

}  // namespace ramsey
