#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// One random hypergraph draw: every r-subset of [n] appears independently
/// with probability p. The uniform variate of a subset depends only on
/// (seed, subset rank), so samples with the same seed are nested across p:
/// raising p only ever adds edges.
struct SampleConfig {
    int r = 2;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

Hypergraph sample(const SampleConfig& cfg);

/// Deterministic stream mixer used for all derived seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

struct EventSpec {
    enum class Kind { ContainsCopy, ArrowsTuple, ContainmentHolds };
    Kind kind = Kind::ContainsCopy;
    std::vector<Hypergraph> targets;
    int sources = 2;  // ContainmentHolds only: number of identical sources
};

enum class EventOutcome { False, True, Unknown };

/// Decides the event on one hypergraph. ContainmentHolds evaluates the
/// partition condition with every source equal to h; its targets must lie in
/// the supported families (checked once via validate_event).
EventOutcome evaluate_event(const Hypergraph& h, const EventSpec& ev, const SearchLimits& lim = {});

/// Checks event invariants up front (uniformities, family membership for
/// ContainmentHolds). Returns the common uniformity.
int validate_event(const EventSpec& ev);

struct SweepRecord {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    int successes = 0;
    int unknowns = 0;  // > 0 invalidates the record
    double phat() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
    bool valid() const { return unknowns == 0; }
};

/// Success fraction over independent trials; trial i samples with seed
/// mix_seed(base.seed, i). Trials may run on several threads; results are
/// identical regardless of thread count.
SweepRecord estimate_event(const SampleConfig& base, const EventSpec& ev, int trials,
                           const SearchLimits& lim = {}, int threads = 1);

/// One record per grid point; point k derives its seed from (base.seed, k).
std::vector<SweepRecord> sweep(const SampleConfig& base, const EventSpec& ev,
                               const std::vector<double>& p_grid, int trials,
                               const SearchLimits& lim = {}, int threads = 1);

struct ThresholdFit {
    std::map<int, double> p_half_by_n;
    double slope = 0.0;
    double predicted_slope = 0.0;
    Rational predicted_exponent_density;  // predicted slope is -1 / this
    std::vector<double> residuals;        // per n, in n_list order
};

/// Bisection on p per n until the success probability crosses 1/2 within tol,
/// then the least-squares slope of log p_half against log n, next to the
/// exponent predicted exactly from the density machinery. Fails loudly when
/// the event does not bracket on [0, 1] at some n or a probe hits the budget.
ThresholdFit fit_threshold(const EventSpec& ev, const std::vector<int>& n_list, int trials,
                           double tol, std::uint64_t master_seed, const SearchLimits& lim = {},
                           int threads = 1);

/// Density whose negated reciprocal is the predicted threshold slope.
Rational threshold_density(const EventSpec& ev);

/// CSV with header "n,p,trials,successes,phat". Writing refuses invalidated
/// records; parsing round-trips every written record exactly.
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_csv(std::istream& is);

}  // namespace ramsey
