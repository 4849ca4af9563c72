#include "ramsey/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ramsey/containment.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/families.hpp"

namespace ramsey {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double unit_interval(std::uint64_t z) {
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

Hypergraph sample(const SampleConfig& cfg) {
    if (cfg.r < 2) throw std::invalid_argument("sample: uniformity must be at least 2");
    if (cfg.n < cfg.r) throw std::invalid_argument("sample: need n >= r");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw std::invalid_argument("sample: p outside [0,1]");
    std::vector<Edge> edges;
    Edge cur(static_cast<std::size_t>(cfg.r));
    std::uint64_t rank = 0;
    const auto rec = [&](auto&& self, int idx, int next) -> void {
        if (idx == cfg.r) {
            if (unit_interval(mix_seed(cfg.seed, rank)) < cfg.p) edges.push_back(cur);
            ++rank;
            return;
        }
        for (int v = next; v < cfg.n; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return Hypergraph(cfg.r, cfg.n, std::move(edges));
}

int validate_event(const EventSpec& ev) {
    if (ev.targets.empty()) throw std::invalid_argument("event needs at least one target");
    const int r = ev.targets.front().r();
    for (const Hypergraph& t : ev.targets) {
        if (t.r() != r) throw std::invalid_argument("event targets have mixed uniformities");
        if (strip_isolated(t).edge_count() == 0)
            throw std::invalid_argument("event targets must have at least one edge");
    }
    if (ev.kind == EventSpec::Kind::ContainsCopy && ev.targets.size() != 1)
        throw std::invalid_argument("contains-copy event takes exactly one target");
    if (ev.kind == EventSpec::Kind::ContainmentHolds) {
        if (ev.sources < 1) throw std::invalid_argument("containment event needs sources >= 1");
        for (std::size_t j = 0; j < ev.targets.size(); ++j) {
            const ClassReport rep = family_membership(ev.targets[j]);
            if (!rep.in_xr && !rep.in_yr)
                throw std::invalid_argument("containment event target " + std::to_string(j + 1) +
                                            " lies outside the supported families");
        }
    }
    return r;
}

EventOutcome evaluate_event(const Hypergraph& h, const EventSpec& ev, const SearchLimits& lim) {
    switch (ev.kind) {
        case EventSpec::Kind::ContainsCopy:
            return contains_copy(ev.targets.front(), h) ? EventOutcome::True : EventOutcome::False;
        case EventSpec::Kind::ArrowsTuple: {
            const ArrowResult res = arrows(ArrowInstance{h, ev.targets}, lim);
            if (res.status == ArrowStatus::Unknown) return EventOutcome::Unknown;
            return res.status == ArrowStatus::Arrows ? EventOutcome::True : EventOutcome::False;
        }
        case EventSpec::Kind::ContainmentHolds: {
            const std::vector<Hypergraph> fs(static_cast<std::size_t>(ev.sources), h);
            const PartitionOutcome po = partition_condition(fs, ev.targets, lim);
            if (po.status == PartitionStatus::Unknown) return EventOutcome::Unknown;
            return po.status == PartitionStatus::Found ? EventOutcome::True : EventOutcome::False;
        }
    }
    throw std::logic_error("unreachable event kind");
}

SweepRecord estimate_event(const SampleConfig& base, const EventSpec& ev, int trials,
                           const SearchLimits& lim, int threads) {
    validate_event(ev);
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    SweepRecord rec;
    rec.n = base.n;
    rec.p = base.p;
    rec.trials = trials;

    const int workers = std::max(1, std::min(threads, trials));
    std::vector<int> succ(static_cast<std::size_t>(workers), 0);
    std::vector<int> unk(static_cast<std::size_t>(workers), 0);
    const auto body = [&](int w) {
        for (int i = w; i < trials; i += workers) {
            SampleConfig cfg = base;
            cfg.seed = mix_seed(base.seed, static_cast<std::uint64_t>(i));
            const EventOutcome out = evaluate_event(sample(cfg), ev, lim);
            if (out == EventOutcome::True) ++succ[static_cast<std::size_t>(w)];
            if (out == EventOutcome::Unknown) ++unk[static_cast<std::size_t>(w)];
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (std::thread& th : pool) th.join();
    }
    for (int w = 0; w < workers; ++w) {
        rec.successes += succ[static_cast<std::size_t>(w)];
        rec.unknowns += unk[static_cast<std::size_t>(w)];
    }
    return rec;
}

std::vector<SweepRecord> sweep(const SampleConfig& base, const EventSpec& ev,
                               const std::vector<double>& p_grid, int trials,
                               const SearchLimits& lim, int threads) {
    std::vector<SweepRecord> out;
    out.reserve(p_grid.size());
    for (std::size_t k = 0; k < p_grid.size(); ++k) {
        SampleConfig cfg = base;
        cfg.p = p_grid[k];
        cfg.seed = mix_seed(mix_seed(base.seed, static_cast<std::uint64_t>(base.n)),
                            static_cast<std::uint64_t>(k));
        out.push_back(estimate_event(cfg, ev, trials, lim, threads));
    }
    return out;
}

Rational threshold_density(const EventSpec& ev) {
    switch (ev.kind) {
        case EventSpec::Kind::ContainsCopy:
            return max_density(ev.targets.front()).value;
        case EventSpec::Kind::ArrowsTuple: {
            std::vector<Hypergraph> sorted = ev.targets;
            std::stable_sort(sorted.begin(), sorted.end(),
                             [](const Hypergraph& a, const Hypergraph& b) {
                                 return max_r_density(a).value > max_r_density(b).value;
                             });
            if (sorted.size() == 1) return max_density(sorted.front()).value;
            return asym_density(sorted[0], sorted[1]).value;
        }
        case EventSpec::Kind::ContainmentHolds: {
            std::vector<Hypergraph> sorted = ev.targets;
            std::stable_sort(sorted.begin(), sorted.end(),
                             [](const Hypergraph& a, const Hypergraph& b) {
                                 return max_r_density(a).value > max_r_density(b).value;
                             });
            return threshold_exponents(sorted, ev.sources).governing_density;
        }
    }
    throw std::logic_error("unreachable event kind");
}

ThresholdFit fit_threshold(const EventSpec& ev, const std::vector<int>& n_list, int trials,
                           double tol, std::uint64_t master_seed, const SearchLimits& lim,
                           int threads) {
    const int r = validate_event(ev);
    {
        std::vector<int> distinct = n_list;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 3)
            throw std::invalid_argument("threshold fit needs at least 3 distinct n values");
    }
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tol must lie in (0,1)");

    ThresholdFit fit;
    for (int n : n_list) {
        const std::uint64_t nseed = mix_seed(master_seed, static_cast<std::uint64_t>(n));
        // Endpoints: p=0 never succeeds, p=1 must, otherwise there is nothing
        // to bracket at this n.
        {
            const Hypergraph empty = sample({r, n, 0.0, mix_seed(nseed, 0)});
            if (evaluate_event(empty, ev, lim) != EventOutcome::False)
                throw std::invalid_argument("event succeeds at p=0 for n=" + std::to_string(n));
            const Hypergraph full = sample({r, n, 1.0, mix_seed(nseed, 1)});
            if (evaluate_event(full, ev, lim) != EventOutcome::True)
                throw std::invalid_argument("event does not occur at p=1 for n=" +
                                            std::to_string(n) + "; bisection cannot bracket");
        }
        double lo = 0.0, hi = 1.0;
        int probe = 2;
        while (hi - lo > tol && probe < 64) {
            const double mid = 0.5 * (lo + hi);
            const SampleConfig cfg{r, n, mid, mix_seed(nseed, static_cast<std::uint64_t>(probe))};
            const SweepRecord rec = estimate_event(cfg, ev, trials, lim, threads);
            if (!rec.valid())
                throw UnknownError("search budget exhausted during bisection at n=" +
                                   std::to_string(n) + ", p=" + std::to_string(mid));
            if (rec.phat() >= 0.5)
                hi = mid;
            else
                lo = mid;
            ++probe;
        }
        fit.p_half_by_n[n] = 0.5 * (lo + hi);
    }

    const std::size_t m = n_list.size();
    std::vector<double> xs, ys;
    for (int n : n_list) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(fit.p_half_by_n.at(n)));
    }
    double xbar = 0, ybar = 0;
    for (std::size_t i = 0; i < m; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    fit.slope = sxy / sxx;
    for (std::size_t i = 0; i < m; ++i)
        fit.residuals.push_back(ys[i] - (ybar + fit.slope * (xs[i] - xbar)));

    fit.predicted_exponent_density = threshold_density(ev);
    fit.predicted_slope = -1.0 / fit.predicted_exponent_density.to_double();
    return fit;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "n,p,trials,successes,phat\n";
    for (const SweepRecord& r : records) {
        if (!r.valid())
            throw std::invalid_argument("refusing to serialize a record invalidated by budget "
                                        "exhaustion");
        char buf[512];
        std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%d,%.17g\n", r.n, r.p, r.trials, r.successes,
                      r.phat());
        os << buf;
    }
}

std::vector<SweepRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "n,p,trials,successes,phat")
        throw std::invalid_argument("bad CSV header, expected 'n,p,trials,successes,phat'");
    std::vector<SweepRecord> out;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        SweepRecord r;
        double phat = 0;
        if (!(row >> r.n >> r.p >> r.trials >> r.successes >> phat))
            throw std::invalid_argument("bad CSV row at line " + std::to_string(lineno));
        out.push_back(r);
    }
    return out;
}

}  // namespace ramsey
