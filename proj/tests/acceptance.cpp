// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exits nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/families.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/montecarlo.hpp"

using namespace ramsey;
using oracles::TestRng;

namespace {

constexpr std::uint64_t kMasterSeed = 20260810ULL;

int failures = 0;

struct Criterion {
    const char* label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* l) : label(l) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void finish(double time_limit_s = 0) {
        const double secs = seconds();
        if (time_limit_s > 0 && secs > time_limit_s) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "exceeded time limit of " + std::to_string(time_limit_s) + "s";
        }
        std::printf("[%s] %-58s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", label,
                    ok ? "ok" : "failed", secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

const Hypergraph k2 = complete_graph(2);
const Hypergraph k3 = complete_graph(3);
const Hypergraph k4 = complete_graph(4);
const Hypergraph k5 = complete_graph(5);
const Hypergraph k6 = complete_graph(6);

void criterion1_exact_densities() {
    Criterion c("1. exact densities vs. brute-force enumerator");
    const struct {
        Hypergraph g;
        Rational expect;
    } mr_cases[] = {{k3, Rational(2)},
                    {k4, Rational(5, 2)},
                    {k5, Rational(3)},
                    {complete_hypergraph(3, 4), Rational(3)}};
    for (const auto& [g, expect] : mr_cases) {
        c.expect(max_r_density(g).value == expect, "max r-density mismatch");
        c.expect(oracles::max_r_density_oracle(g) == expect, "oracle disagrees");
    }
    c.expect(max_density(k4).value == Rational(3, 2), "m(K4)");
    c.expect(oracles::max_density_oracle(k4) == Rational(3, 2), "oracle m(K4)");
    c.expect(asym_density(k4, k3).value == Rational(12, 5), "m2(K4,K3)");
    c.expect(oracles::asym_density_oracle(k4, k3) == Rational(12, 5), "oracle m2(K4,K3)");
    c.finish(1.0);
}

void criterion2_ordering_facts() {
    Criterion c("2. asymmetric density ordering on 200 random pairs");
    TestRng rng(kMasterSeed);
    int pairs = 0;
    while (pairs < 200) {
        const int r = 2 + rng.below(2);
        const int nt = r + 1 + rng.below(7 - r);
        const int nf = r + 1 + rng.below(7 - r);
        Hypergraph t = oracles::random_hypergraph(rng, r, nt, 30 + rng.below(55));
        Hypergraph f = oracles::random_hypergraph(rng, r, nf, 30 + rng.below(55));
        if (t.edge_count() == 0 || f.edge_count() == 0) continue;
        Rational mt = max_r_density(t).value, mf = max_r_density(f).value;
        if (mt < mf) {
            std::swap(t, f);
            std::swap(mt, mf);
        }
        ++pairs;
        const Rational a = asym_density(t, f).value;
        c.expect(mt >= a && a >= mf, "ordering violated");
        if (mt > mf)
            c.expect(mt > a && a > mf, "strictness violated");
        else
            c.expect(a == mf, "equal-density case violated");
    }
    c.finish();
}

void criterion3_arrowing_ground_truth() {
    Criterion c("3. arrowing ground truth and full-enumeration agreement");
    c.expect(arrows({k6, {k3, k3}}).status == ArrowStatus::Arrows, "K6 must arrow");
    const ArrowResult r5 = arrows({k5, {k3, k3}});
    c.expect(r5.status == ArrowStatus::NotArrows, "K5 must not arrow");
    c.expect(r5.witness && verify_witness({k5, {k3, k3}}, *r5.witness), "witness must verify");
    const RamseyNumberOutcome rn = ramsey_number({k3, k3}, 8);
    c.expect(rn.status == RamseyNumberOutcome::Status::Found && rn.result->value == 6,
             "R(K3,K3) = 6");

    TestRng rng(kMasterSeed + 1);
    std::vector<Hypergraph> hosts = {k4,
                                     k5,
                                     k6,
                                     cycle_graph(4),
                                     cycle_graph(5),
                                     cycle_graph(6),
                                     path_graph(4),
                                     complete_hypergraph(3, 4),
                                     complete_hypergraph(3, 5)};
    for (int i = 0; i < 12; ++i) hosts.push_back(oracles::random_hypergraph(rng, 2, 6, 55));
    for (int i = 0; i < 6; ++i) hosts.push_back(oracles::random_hypergraph(rng, 3, 6, 40));
    int checked = 0;
    for (const Hypergraph& host : hosts) {
        if (host.edge_count() > 15) continue;
        std::vector<std::vector<Hypergraph>> tuples;
        if (host.r() == 2)
            tuples = {{k3, k3}, {k3, path_graph(3)}, {k2, k3}};
        else
            tuples = {{complete_hypergraph(3, 4), complete_hypergraph(3, 4)},
                      {complete_hypergraph(3, 3), complete_hypergraph(3, 4)}};
        for (const auto& targets : tuples) {
            const ArrowResult res = arrows({host, targets});
            c.expect(res.status != ArrowStatus::Unknown, "budget must suffice at this size");
            c.expect((res.status == ArrowStatus::Arrows) ==
                         oracles::arrows_oracle(host, targets),
                     "solver disagrees with enumeration");
            ++checked;
        }
    }
    c.expect(checked >= 50, "host suite too small");
    c.finish(60.0);
}

void criterion4_class_claims() {
    Criterion c("4. family membership of complete hypergraphs and K6-e");
    for (int m = 2; m <= 8; ++m)
        c.expect(is_nontrivially_connected(complete_graph(m)).member == (m >= 4),
                 "r=2 boundary at m=" + std::to_string(m));
    for (int m = 3; m <= 8; ++m)
        c.expect(is_nontrivially_connected(complete_hypergraph(3, m)).member == (m >= 6),
                 "r=3 boundary at m=" + std::to_string(m));
    for (int r = 2; r <= 3; ++r)
        for (int m = r; m <= 8; ++m)
            c.expect(is_pairwise_covered(complete_hypergraph(r, m)).member,
                     "complete must be pairwise covered");
    const ClassReport k6e = family_membership(*catalog_lookup("K6-e"));
    c.expect(k6e.in_xr && !k6e.in_yr, "K6-e must sit in exactly one family");
    c.finish();
}

void criterion5_heart_and_denseness() {
    Criterion c("5. hearts and the denseness sufficient condition");
    const Heart h = find_heart(k4, k3);
    c.expect(h.t_prime == k4 && h.f_prime == k3, "heart of (K4,K3)");

    const Hypergraph k7_3 = complete_hypergraph(3, 7);
    c.expect(ramsey_dense_sufficient(k7_3, k7_3).verdict == Denseness::Proven,
             "(K7(3),K7(3)) must be proven");
    c.expect(ramsey_dense_sufficient(complete_hypergraph(3, 5), complete_hypergraph(3, 4))
                     .verdict == Denseness::Inconclusive,
             "(K5(3),K4(3)) must stay inconclusive");

    int proven = 0, pairs = 0;
    for (const CatalogEntry& te : catalog()) {
        if (te.hypergraph.r() != 2) continue;
        for (const CatalogEntry& fe : catalog()) {
            if (fe.hypergraph.r() != 2) continue;
            const Rational mt = max_r_density(te.hypergraph).value;
            const Rational mf = max_r_density(fe.hypergraph).value;
            if (!(mt >= mf && mf > Rational(1))) continue;
            ++pairs;
            if (ramsey_dense_sufficient(te.hypergraph, fe.hypergraph).verdict ==
                Denseness::Proven)
                ++proven;
        }
    }
    c.expect(pairs > 0 && proven == pairs,
             "every admissible 2-graph pair must be proven (" + std::to_string(proven) + "/" +
                 std::to_string(pairs) + ")");
    c.finish();
}

void criterion6_containment_equivalence() {
    Criterion c("6. containment, refutations, equivalence cross-checks");
    const PartitionOutcome sep = partition_condition({k5, k2}, {k3, k3});
    c.expect(sep.status == PartitionStatus::None, "(K5,K2) vs (K3,K3) has no partition");
    c.expect(sep.refutations.size() == 4, "all four assignments refuted");
    for (const AssignmentRefutation& ref : sep.refutations) {
        std::vector<Hypergraph> part;
        const std::vector<Hypergraph> fs = {k5, k2}, qs = {k3, k3};
        for (std::size_t j = 0; j < qs.size(); ++j)
            if (ref.assignment[j] == ref.failing_source) part.push_back(qs[j]);
        c.expect(!part.empty() &&
                     verify_witness({fs[static_cast<std::size_t>(ref.failing_source)], part},
                                    ref.witness),
                 "refutation witness must verify");
    }
    const SeparationReport item1 = verify_clique_separation(SeparationItem::I, 2, 3, 2);
    c.expect(item1.q == 5 && item1.separation_certified, "item i at (2,3,2)");

    c.expect(equivalence_decision({k3, k4}, {k4, k3}).equivalent, "(K3,K4) ~ (K4,K3)");
    c.expect(!equivalence_decision({k3, k3}, {k3}).equivalent, "(K3,K3) !~ (K3)");

    const Hypergraph k6e = *catalog_lookup("K6-e");
    const Hypergraph k43 = complete_hypergraph(3, 4);
    const Hypergraph k53 = complete_hypergraph(3, 5);
    const struct {
        std::vector<Hypergraph> fs, qs;
    } pairs[] = {
        {{k3, k4}, {k4, k3}},
        {{k6}, {k3, k3}},
        {{k4}, {k4, k4}},
        {{k5}, {k5}},
        {{k3, k3}, {k3}},
        {{k6e}, {k6e}},
        {{k6e}, {k6}},
        {{k4, k3}, {k3, k4}},
        {{k3}, {k4}},
        {{k4}, {k3}},
        {{k5, k3}, {k3, k5}},
        {{k6}, {k6}},
        {{k3, k3}, {k3, k3}},
        {{k3, k3, k3}, {k3, k3}},
        {{k4, k4}, {k4}},
        {{k43}, {k43}},
        {{k53}, {k43}},
        {{k43, k43}, {k43}},
        {{k43, k53}, {k53, k43}},
        {{k6, k3}, {k3, k6}},
    };
    int cross_checked = 0;
    for (const auto& pr : pairs) {
        const bool fwd = containment_decision(pr.fs, pr.qs).holds;
        const bool bwd = containment_decision(pr.qs, pr.fs).holds;
        bool equiv = false;
        try {
            equiv = equivalence_decision(pr.fs, pr.qs).equivalent;
        } catch (const std::invalid_argument&) {
            continue;
        }
        c.expect((fwd && bwd) == equiv, "containment/equivalence mismatch");
        ++cross_checked;
    }
    c.expect(cross_checked == 20, "expected 20 tuple pairs, got " +
                                      std::to_string(cross_checked));
    c.finish(300.0);
}

void criterion7_threshold_exponents() {
    Criterion c("7. threshold exponent recovery at desk scale");
    const int threads = 8;
    const double tol = 1.0 / 4096.0;

    const EventSpec contains_k4{EventSpec::Kind::ContainsCopy, {k4}, 0};
    const ThresholdFit f1 =
        fit_threshold(contains_k4, {12, 18, 24, 30}, 200, tol, kMasterSeed, {}, threads);
    c.expect(f1.predicted_exponent_density == Rational(3, 2), "predicted density m(K4)");
    c.expect(std::abs(f1.slope - (-2.0 / 3.0)) <= 0.10,
             "contains-K4 slope " + std::to_string(f1.slope) + " misses -2/3 by more than 0.10");

    const EventSpec arrows_33{EventSpec::Kind::ArrowsTuple, {k3, k3}, 0};
    const ThresholdFit f2 =
        fit_threshold(arrows_33, {8, 12, 16, 20}, 200, tol, kMasterSeed, {}, threads);
    c.expect(f2.predicted_exponent_density == Rational(2), "predicted density m2(K3)");
    c.expect(std::abs(f2.slope - (-0.5)) <= 0.15,
             "arrowing slope " + std::to_string(f2.slope) + " misses -1/2 by more than 0.15");

    const EventSpec cont{EventSpec::Kind::ContainmentHolds, {k3, k3, k3}, 2};
    const ThresholdFit f3 =
        fit_threshold(cont, {8, 12, 16, 20}, 200, tol, kMasterSeed, {}, threads);
    c.expect(f3.predicted_exponent_density == Rational(2),
             "governing density of the triangle triple");
    c.expect(f3.predicted_slope == -0.5, "predicted slope -1/2");
    c.expect(std::abs(f3.slope - (-0.5)) <= 0.15,
             "containment slope " + std::to_string(f3.slope) + " misses -1/2 by more than 0.15");
    c.finish(900.0);
}

void criterion8_coupled_monotonicity() {
    Criterion c("8. samplewise-coupled monotonicity in p");
    const std::vector<EventSpec> events = {
        {EventSpec::Kind::ContainsCopy, {k4}, 0},
        {EventSpec::Kind::ArrowsTuple, {k3, k3}, 0},
        {EventSpec::Kind::ContainmentHolds, {k3, k3, k3}, 2},
    };
    const std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    for (const EventSpec& ev : events) {
        for (int s = 0; s < 5; ++s) {
            const std::uint64_t seed = mix_seed(kMasterSeed, static_cast<std::uint64_t>(s));
            Hypergraph prev = sample({2, 8, 0.0, seed});
            bool seen = false;
            for (double p : grid) {
                const Hypergraph cur = sample({2, 8, p, seed});
                for (const Edge& e : prev.edges())
                    c.expect(cur.has_edge(e), "edge sets must be nested");
                prev = cur;
                const EventOutcome out = evaluate_event(cur, ev);
                c.expect(out != EventOutcome::Unknown, "events must decide at n=8");
                const bool success = out == EventOutcome::True;
                if (seen && !success) c.expect(false, "success indicator dropped");
                seen = seen || success;
            }
        }
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1_exact_densities();
    criterion2_ordering_facts();
    criterion3_arrowing_ground_truth();
    criterion4_class_claims();
    criterion5_heart_and_denseness();
    criterion6_containment_equivalence();
    criterion7_threshold_exponents();
    criterion8_coupled_monotonicity();
    if (failures == 0)
        std::printf("ACCEPTANCE: all 8 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
