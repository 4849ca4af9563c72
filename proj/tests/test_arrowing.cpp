#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/catalog.hpp"

using namespace ramsey;
using oracles::TestRng;

namespace {

const Hypergraph k3 = complete_graph(3);

bool color_class_is_cycle(const Hypergraph& host, const ArrowWitness& w, int color) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < w.size(); ++e)
        if (w[e] == color) edges.push_back(host.edge(static_cast<int>(e)));
    if (edges.size() != static_cast<std::size_t>(host.n())) return false;
    std::vector<int> deg(static_cast<std::size_t>(host.n()), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e[0])];
        ++deg[static_cast<std::size_t>(e[1])];
    }
    for (int d : deg)
        if (d != 2) return false;
    return is_connected(Hypergraph(2, host.n(), edges));
}

}  // namespace

TEST_CASE("two triangles on small complete hosts") {
    CHECK(arrows({complete_graph(6), {k3, k3}}).status == ArrowStatus::Arrows);
    const ArrowResult r5 = arrows({complete_graph(5), {k3, k3}});
    REQUIRE(r5.status == ArrowStatus::NotArrows);
    REQUIRE(r5.witness.has_value());
    CHECK(verify_witness({complete_graph(5), {k3, k3}}, *r5.witness));
    // Every valid 2-coloring of K5 splits into two pentagons.
    CHECK(color_class_is_cycle(complete_graph(5), *r5.witness, 0));
    CHECK(color_class_is_cycle(complete_graph(5), *r5.witness, 1));
}

TEST_CASE("single-edge targets degenerate to nonemptiness") {
    const Hypergraph edge = complete_graph(2);
    CHECK(arrows({complete_graph(4), {edge}}).status == ArrowStatus::Arrows);
    CHECK(arrows({Hypergraph(2, 3), {edge}}).status == ArrowStatus::NotArrows);
    CHECK(arrows({path_graph(2), {edge, edge}}).status == ArrowStatus::Arrows);
}

TEST_CASE("single-target arrowing is copy containment") {
    TestRng rng(31);
    for (int i = 0; i < 30; ++i) {
        const Hypergraph host = oracles::random_hypergraph(rng, 2, 4 + rng.below(3), 50);
        const Hypergraph target = oracles::random_hypergraph(rng, 2, 3 + rng.below(2), 60);
        if (strip_isolated(target).edge_count() == 0) continue;
        const ArrowResult res = arrows({host, {target}});
        CHECK((res.status == ArrowStatus::Arrows) == contains_copy(target, host));
    }
}

TEST_CASE("ramsey numbers of small tuples") {
    const RamseyNumberOutcome r33 = ramsey_number({k3, k3}, 8);
    REQUIRE(r33.status == RamseyNumberOutcome::Status::Found);
    CHECK(r33.result->value == 6);
    CHECK(r33.result->host_below == complete_graph(5));
    CHECK(verify_witness({complete_graph(5), {k3, k3}}, r33.result->witness_below));

    const RamseyNumberOutcome r32 = ramsey_number({k3, complete_graph(2)}, 8);
    REQUIRE(r32.status == RamseyNumberOutcome::Status::Found);
    CHECK(r32.result->value == 3);

    const RamseyNumberOutcome edge2 = ramsey_number({complete_graph(2)}, 8);
    REQUIRE(edge2.status == RamseyNumberOutcome::Status::Found);
    CHECK(edge2.result->value == 2);
    const RamseyNumberOutcome edge3 = ramsey_number({complete_hypergraph(3, 3)}, 8);
    REQUIRE(edge3.status == RamseyNumberOutcome::Status::Found);
    CHECK(edge3.result->value == 3);

    CHECK(ramsey_number({k3, k3}, 4).status == RamseyNumberOutcome::Status::CapExceeded);
}

TEST_CASE("witness verification") {
    // The classical pentagon certificate.
    const Hypergraph k5 = complete_graph(5);
    ArrowWitness pentagon(10, 1);
    for (int i = 0; i < k5.edge_count(); ++i) {
        const Edge& e = k5.edge(i);
        const int d = e[1] - e[0];
        if (d == 1 || d == 4) pentagon[static_cast<std::size_t>(i)] = 0;
    }
    CHECK(verify_witness({k5, {k3, k3}}, pentagon));

    // No coloring of K6 verifies.
    TestRng rng(32);
    const Hypergraph k6 = complete_graph(6);
    for (int i = 0; i < 50; ++i) {
        ArrowWitness w(15);
        for (int& c : w) c = rng.below(2);
        CHECK_FALSE(verify_witness({k6, {k3, k3}}, w));
    }

    // All-one-color fails whenever the host contains the target.
    CHECK_FALSE(verify_witness({complete_graph(4), {k3}}, ArrowWitness(6, 0)));
    CHECK_THROWS_AS(verify_witness({k6, {k3, k3}}, ArrowWitness(3, 0)), std::invalid_argument);
}

TEST_CASE("solver agrees with full coloring enumeration") {
    TestRng rng(33);
    std::vector<Hypergraph> hosts = {complete_graph(4), complete_graph(5), complete_graph(6),
                                     cycle_graph(5),    cycle_graph(6),    path_graph(4),
                                     complete_hypergraph(3, 4), complete_hypergraph(3, 5)};
    for (int i = 0; i < 12; ++i) hosts.push_back(oracles::random_hypergraph(rng, 2, 6, 55));
    for (int i = 0; i < 6; ++i) hosts.push_back(oracles::random_hypergraph(rng, 3, 6, 40));

    const Hypergraph p3 = path_graph(3);
    const Hypergraph e3 = complete_hypergraph(3, 3);
    const Hypergraph k4_3 = complete_hypergraph(3, 4);
    int checked = 0;
    for (const Hypergraph& host : hosts) {
        if (host.edge_count() > 15) continue;
        std::vector<std::vector<Hypergraph>> tuples;
        if (host.r() == 2)
            tuples = {{k3, k3}, {k3, p3}, {p3, p3}, {complete_graph(2), k3}};
        else
            tuples = {{k4_3, k4_3}, {e3, k4_3}};
        for (const auto& targets : tuples) {
            const bool oracle = oracles::arrows_oracle(host, targets);
            const ArrowResult res = arrows({host, targets});
            REQUIRE(res.status != ArrowStatus::Unknown);
            CHECK((res.status == ArrowStatus::Arrows) == oracle);
            if (res.status == ArrowStatus::NotArrows)
                CHECK(verify_witness({host, targets}, *res.witness));
            ++checked;
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("arrowing is monotone under adding edges") {
    TestRng rng(34);
    int confirmed = 0, attempts = 0;
    while (confirmed < 100 && attempts < 3000) {
        ++attempts;
        const int n = 5 + rng.below(2);
        const Hypergraph host = oracles::random_hypergraph(rng, 2, n, 70 + rng.below(25));
        const std::vector<Hypergraph> targets =
            rng.below(2) ? std::vector<Hypergraph>{k3, path_graph(3)}
                         : std::vector<Hypergraph>{path_graph(3), path_graph(3)};
        if (arrows({host, targets}).status != ArrowStatus::Arrows) continue;
        // Add one absent edge, if any.
        std::vector<Edge> edges = host.edges();
        bool added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v) {
                Edge e{u, v};
                if (!host.has_edge(e)) {
                    edges.push_back(e);
                    added = true;
                }
            }
        if (!added) continue;
        CHECK(arrows({Hypergraph(2, n, edges), targets}).status == ArrowStatus::Arrows);
        ++confirmed;
    }
    CHECK(confirmed == 100);
}

TEST_CASE("outcome is invariant under permuting the target tuple") {
    TestRng rng(35);
    for (int i = 0; i < 30; ++i) {
        const Hypergraph host = oracles::random_hypergraph(rng, 2, 5 + rng.below(2), 60);
        std::vector<Hypergraph> targets = {k3, path_graph(3), complete_graph(2)};
        const ArrowStatus base = arrows({host, targets}).status;
        std::swap(targets[0], targets[2]);
        CHECK(arrows({host, targets}).status == base);
        std::swap(targets[1], targets[2]);
        CHECK(arrows({host, targets}).status == base);
    }
}

TEST_CASE("budget exhaustion reports unknown") {
    const ArrowResult res = arrows({complete_graph(6), {k3, k3}}, SearchLimits{1});
    CHECK(res.status == ArrowStatus::Unknown);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(arrows({complete_graph(4), {}}), std::invalid_argument);
    CHECK_THROWS_AS(arrows({complete_graph(4), {Hypergraph(2, 3)}}), std::invalid_argument);
    CHECK_THROWS_AS(arrows({complete_graph(4), {complete_hypergraph(3, 4)}}),
                    std::invalid_argument);
}
