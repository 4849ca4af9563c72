#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ramsey/catalog.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/families.hpp"

using namespace ramsey;

TEST_CASE("pairwise coverage") {
    for (int m = 2; m <= 8; ++m) CHECK(is_pairwise_covered(complete_graph(m)).member);
    for (int m = 3; m <= 8; ++m) CHECK(is_pairwise_covered(complete_hypergraph(3, m)).member);
    const CoverageReport p3 = is_pairwise_covered(path_graph(3));
    CHECK_FALSE(p3.member);
    CHECK(*p3.witness == std::make_pair(0, 2));
    const CoverageReport c4 = is_pairwise_covered(cycle_graph(4));
    CHECK_FALSE(c4.member);
    CHECK(*c4.witness == std::make_pair(0, 2));  // a diagonal
}

TEST_CASE("non-trivial connectivity of small cliques") {
    const ConnectivityReport k3 = is_nontrivially_connected(complete_graph(3));
    CHECK_FALSE(k3.member);
    REQUIRE(k3.witness.has_value());
    CHECK(is_vertex_cut(complete_graph(3), *k3.witness));
    CHECK(is_strongly_r_partite(induced(complete_graph(3), *k3.witness)));

    CHECK(is_nontrivially_connected(complete_graph(4)).member);
    CHECK_FALSE(is_nontrivially_connected(complete_hypergraph(3, 5)).member);
    CHECK(is_nontrivially_connected(complete_hypergraph(3, 6)).member);
}

TEST_CASE("complete hypergraphs join the connected family exactly from twice the uniformity") {
    for (int r = 2; r <= 3; ++r)
        for (int m = r; m <= 8; ++m) {
            const Hypergraph km = complete_hypergraph(r, m);
            CHECK(is_nontrivially_connected(km).member == (m >= 2 * r));
            CHECK(is_pairwise_covered(km).member);
        }
}

TEST_CASE("witnesses verify against the cut and partiteness predicates") {
    const std::vector<Hypergraph> graphs = {complete_graph(3), path_graph(4), cycle_graph(5),
                                            complete_hypergraph(3, 4), complete_hypergraph(3, 5)};
    for (const Hypergraph& f : graphs) {
        const ConnectivityReport rep = is_nontrivially_connected(f);
        if (!rep.member && is_connected(f)) {
            REQUIRE(rep.witness.has_value());
            CHECK(is_vertex_cut(f, *rep.witness));
            CHECK(is_strongly_r_partite(induced(f, *rep.witness)));
        }
        const CoverageReport cov = is_pairwise_covered(f);
        if (!cov.member) {
            const auto [u, v] = *cov.witness;
            bool covered = false;
            for (const Edge& e : f.edges())
                if (std::find(e.begin(), e.end(), u) != e.end() &&
                    std::find(e.begin(), e.end(), v) != e.end())
                    covered = true;
            CHECK_FALSE(covered);
        }
    }
}

TEST_CASE("combined membership report") {
    const ClassReport k6e = family_membership(*catalog_lookup("K6-e"));
    CHECK(k6e.in_xr);
    CHECK_FALSE(k6e.in_yr);
    CHECK(k6e.yr_witness == std::make_pair(0, 1));

    const ClassReport k3 = family_membership(complete_graph(3));
    CHECK_FALSE(k3.in_xr);
    CHECK(k3.in_yr);
    CHECK(k3.xr_witness.has_value());

    const ClassReport p4 = family_membership(path_graph(4));
    CHECK_FALSE(p4.in_xr);
    CHECK_FALSE(p4.in_yr);

    const ClassReport split = family_membership(Hypergraph(2, 4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(split.in_xr);
    CHECK_FALSE(split.xr_witness.has_value());  // disconnected: no cut witness reported
}

TEST_CASE("denseness sufficient condition") {
    const DensenessResult graphs = ramsey_dense_sufficient(complete_graph(4), complete_graph(4));
    CHECK(graphs.verdict == Denseness::Proven);
    CHECK(graphs.rule == "pair of 2-graphs");

    const Hypergraph k7_3 = complete_hypergraph(3, 7);
    const DensenessResult big = ramsey_dense_sufficient(k7_3, k7_3);
    CHECK(big.verdict == Denseness::Proven);
    REQUIRE(big.f_prime.has_value());
    CHECK(is_strictly_r_balanced(*big.f_prime));
    CHECK(max_r_density(*big.f_prime).value == max_r_density(k7_3).value);
    CHECK(chromatic_number(*big.f_prime) > 3);

    const DensenessResult incon =
        ramsey_dense_sufficient(complete_hypergraph(3, 5), complete_hypergraph(3, 4));
    CHECK(incon.verdict == Denseness::Inconclusive);
    CHECK_FALSE(incon.f_prime.has_value());

    // Density at most 1 violates the precondition.
    CHECK_THROWS_AS(ramsey_dense_sufficient(path_graph(3), path_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_dense_sufficient(complete_graph(3), complete_graph(4)),
                    std::invalid_argument);
}
