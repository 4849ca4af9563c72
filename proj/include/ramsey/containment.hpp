#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

/// Surfaces when a result could not be decided within the search budget.
class UnknownError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// assignment[j] = i places target j into part A_i; parts may be empty, and a
/// source arrows an empty tuple vacuously. Witnesses that each F_i arrows the
/// tuple of targets assigned to it.
struct PartitionCertificate {
    std::vector<int> assignment;  // 0-based source index per target
};

/// Why one assignment fails: the failing source index and a coloring of that
/// source with no monochromatic assigned target. Witness colors index the
/// assigned targets in increasing target order.
struct AssignmentRefutation {
    std::vector<int> assignment;
    int failing_source = -1;
    ArrowWitness witness;
};

enum class PartitionStatus { Found, None, Unknown };

struct PartitionOutcome {
    PartitionStatus status = PartitionStatus::Unknown;
    std::optional<PartitionCertificate> certificate;
    std::vector<AssignmentRefutation> refutations;  // one per refuted assignment
    int unknown_assignments = 0;
};

/// Searches the s^t assignments of targets to sources in lexicographic order,
/// memoizing arrowing calls and pruning assignments that place a target into
/// a source containing no copy of it. Returns the first certificate found;
/// None only when every assignment carries a verified refutation.
PartitionOutcome partition_condition(const std::vector<Hypergraph>& fs,
                                     const std::vector<Hypergraph>& qs,
                                     const SearchLimits& lim = {});

struct ContainmentVerdict {
    bool holds = false;
    PartitionStatus status = PartitionStatus::Unknown;
    std::optional<PartitionCertificate> certificate;
    std::vector<AssignmentRefutation> refutations;
};

/// Ramsey-class containment R(fs) within R(qs), decided through the partition
/// condition. Every target must be non-trivially connected or pairwise
/// covered; otherwise the equivalence with the partition condition is not
/// available and the call refuses (std::invalid_argument naming violators).
ContainmentVerdict containment_decision(const std::vector<Hypergraph>& fs,
                                        const std::vector<Hypergraph>& qs,
                                        const SearchLimits& lim = {});

struct EquivalenceResult {
    bool equivalent = false;
    /// mapping[i] = j matches fs[i] to an isomorphic qs[j] when equivalent.
    std::vector<int> mapping;
};

/// Ramsey equivalence of two tuples: identical up to reordering and
/// isomorphism. Every member must lie in the supported families and have at
/// least two edges.
EquivalenceResult equivalence_decision(const std::vector<Hypergraph>& fs,
                                       const std::vector<Hypergraph>& qs);

enum class SeparationItem { I, II, III };

/// Certified separation instances around cliques: for each item the reported
/// tuples satisfy R(fs) not within R(qs), certified by refuting every
/// assignment of the partition condition, which by the containment
/// characterization guarantees a hypergraph arrowing fs but not qs.
///   item I:   fs = (K_q, K_l) with q = R(K_k, K_k) - 1, qs = (K_k, K_k)
///   item II:  fs = (K_{k-1}, K_{k-1}, K_l),             qs = (K_k, K_l)
///   item III: fs = (K_{k+1}, K_{k-1}, K_l),             qs = (K_k, K_k, K_l)
struct SeparationReport {
    SeparationItem item;
    int r, k, l;
    int q = -1;  // item I only
    std::vector<Hypergraph> fs, qs;
    ContainmentVerdict verdict;
    bool separation_certified = false;
    std::uint64_t ramsey_nodes = 0;
};

SeparationReport verify_clique_separation(SeparationItem item, int r, int k, int l,
                                          int ramsey_cap = 8, const SearchLimits& lim = {});

}  // namespace ramsey
