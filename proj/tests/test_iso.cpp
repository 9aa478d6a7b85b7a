#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "epglab/catalog.hpp"
#include "epglab/iso.hpp"

using namespace epglab;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

bool preserves_edges(const SimpleGraph& a, const SimpleGraph& b, const std::vector<int>& m) {
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = u + 1; v < a.vertex_count(); ++v)
            if (a.adjacent(u, v) != b.adjacent(m[u], m[v]))
                return false;
    return true;
}

std::uint64_t brute_aut_count(const SimpleGraph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (preserves_edges(g, g, perm))
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

} // namespace

TEST_CASE("complete graphs are isomorphic to themselves and not to others") {
    IsoCertificate same = are_isomorphic(complete(6), complete(6));
    REQUIRE(same.isomorphic());
    CHECK(preserves_edges(complete(6), complete(6), *same.mapping));

    CHECK_FALSE(are_isomorphic(complete(6), complete(5)).isomorphic());
    SimpleGraph nearly = complete(6);
    SimpleGraph missing(6);
    for (auto [u, v] : nearly.edges())
        if (!(u == 0 && v == 1))
            missing.add_edge(u, v);
    IsoCertificate cert = are_isomorphic(nearly, missing);
    CHECK_FALSE(cert.isomorphic());
    CHECK_FALSE(cert.refutation.empty());
}

TEST_CASE("the order-27 pair has isomorphic graphs") {
    SimpleGraph a = build_bundle(heisenberg27()).enhanced;
    SimpleGraph b = build_bundle(abelian({3, 3, 3})).enhanced;
    IsoCertificate cert = are_isomorphic(a, b);
    REQUIRE(cert.isomorphic());
    CHECK(preserves_edges(a, b, *cert.mapping));
}

TEST_CASE("degree sequences refute quickly") {
    SimpleGraph a = build_bundle(abelian({4, 2})).enhanced;
    SimpleGraph b = build_bundle(abelian({2, 2, 2})).enhanced;
    IsoCertificate cert = are_isomorphic(a, b);
    CHECK_FALSE(cert.isomorphic());
    CHECK(cert.refutation.find("refinement") != std::string::npos);
}

TEST_CASE("digraph isomorphism distinguishes orientation structure") {
    GroupGraphBundle c6 = build_bundle(cyclic(6));
    GroupGraphBundle s3 = build_bundle(dihedral(6));
    CHECK(digraph_isomorphic(c6.directed_power, c6.directed_power).isomorphic());
    CHECK_FALSE(digraph_isomorphic(c6.directed_power, s3.directed_power).isomorphic());
}

TEST_CASE("three isomorphism verdicts coincide on equal-order catalog pairs") {
    auto catalog = build_catalog(16);
    for (size_t i = 0; i < catalog.size(); ++i)
        for (size_t j = i + 1; j < catalog.size(); ++j) {
            if (catalog[i].group.order() != catalog[j].group.order())
                continue;
            GroupGraphBundle a = build_bundle(catalog[i].group);
            GroupGraphBundle b = build_bundle(catalog[j].group);
            const bool epg = are_isomorphic(a.enhanced, b.enhanced).isomorphic();
            const bool pg = are_isomorphic(a.power, b.power).isomorphic();
            const bool dpg = digraph_isomorphic(a.directed_power, b.directed_power).isomorphic();
            CHECK(epg == pg);
            CHECK(pg == dpg);
        }
}

TEST_CASE("directed map construction from an enhanced isomorphism") {
    // identity on a cyclic group
    FiniteGroup c8 = cyclic(8);
    std::vector<int> ident(8);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<int> theta = epg_iso_to_directed_iso(c8, c8, ident);
    GroupGraphBundle b = build_bundle(c8);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            if (x != y)
                CHECK(b.directed_power.has_arc(x, y) ==
                      b.directed_power.has_arc(theta[x], theta[y]));

    // the order-27 pair via a discovered isomorphism
    FiniteGroup h = heisenberg27();
    FiniteGroup e = abelian({3, 3, 3});
    IsoCertificate psi = are_isomorphic(build_bundle(h).enhanced, build_bundle(e).enhanced);
    REQUIRE(psi.isomorphic());
    std::vector<int> theta27 = epg_iso_to_directed_iso(h, e, *psi.mapping);
    DiGraph dh = build_bundle(h).directed_power;
    DiGraph de = build_bundle(e).directed_power;
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y)
            if (x != y)
                CHECK(dh.has_arc(x, y) == de.has_arc(theta27[x], theta27[y]));

    // a vertex-swapping map on the Klein group
    FiniteGroup v4 = klein();
    std::vector<int> swap_map = {0, 2, 1, 3};
    std::vector<int> theta_v4 = epg_iso_to_directed_iso(v4, v4, swap_map);
    CHECK(theta_v4.size() == 4);

    // maps that break enhanced adjacency are rejected
    FiniteGroup g42 = abelian({4, 2});
    std::vector<int> bad(8);
    std::iota(bad.begin(), bad.end(), 0);
    std::swap(bad[0], bad[1]); // moves the universal vertex onto a degree-3 one
    CHECK_THROWS_AS(epg_iso_to_directed_iso(g42, g42, bad), Error);
    CHECK_THROWS_AS(epg_iso_to_directed_iso(c8, c8, std::vector<int>{0, 1}), Error);
}

TEST_CASE("power isomorphisms preserve enhanced adjacency") {
    // identity map
    FiniteGroup g = abelian({4, 2});
    std::vector<int> ident(8);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(power_iso_preserves_enhanced(g, g, ident));

    // every generator of Aut(power graph of C6)
    GroupGraphBundle c6 = build_bundle(cyclic(6));
    AutGroupSummary aut = automorphism_summary(c6.power);
    for (const auto& gen : aut.generators)
        CHECK(power_iso_preserves_enhanced(cyclic(6), cyclic(6), gen));

    // every power isomorphism between the order-27 pair
    FiniteGroup h = heisenberg27();
    FiniteGroup e = abelian({3, 3, 3});
    IsoCertificate psi = are_isomorphic(build_bundle(h).power, build_bundle(e).power);
    REQUIRE(psi.isomorphic());
    CHECK(power_iso_preserves_enhanced(h, e, *psi.mapping));
}

TEST_CASE("directed arrows recovered from the power graph and class sizes") {
    for (const FiniteGroup& g : {dihedral(6), dihedral(8), dihedral(12), abelian({4, 2}), klein(),
                                 abelian({2, 2, 2}), dihedral(16)}) {
        GroupGraphBundle b = build_bundle(g);
        DiGraph recovered = recover_directed_power(b.power, approx_classes_of(g), 0);
        CHECK(recovered == b.directed_power);
    }
}

TEST_CASE("automorphism group summaries") {
    AutGroupSummary k2 = automorphism_summary(build_bundle(cyclic(2)).enhanced);
    CHECK(k2.order == BigUint(2));
    CHECK(k2.abelian);

    AutGroupSummary k3 = automorphism_summary(build_bundle(cyclic(3)).enhanced);
    CHECK(k3.order == BigUint(6));
    CHECK_FALSE(k3.abelian);

    AutGroupSummary c42 = automorphism_summary(build_bundle(abelian({4, 2})).enhanced);
    CHECK(c42.order == BigUint(16));
    // swapping the two 4-cliques while flipping one does not commute with a
    // flip alone, so this group is dihedral-by-C2, not elementary abelian;
    // all generators are still involutions
    CHECK_FALSE(c42.abelian);
    for (const auto& gen : c42.generators) {
        std::vector<int> sq(gen.size());
        for (size_t v = 0; v < gen.size(); ++v)
            sq[v] = gen[gen[v]];
        std::vector<int> ident(gen.size());
        std::iota(ident.begin(), ident.end(), 0);
        CHECK(sq == ident);
    }
    CHECK(c42.order_factorization == std::map<long long, int>({{2, 4}}));
}

TEST_CASE("automorphism counts match brute force on small graphs") {
    for (const auto& entry : build_catalog(8)) {
        if (entry.group.order() > 7)
            continue; // 8! permutations is the oracle's practical limit here
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        AutGroupSummary aut = automorphism_summary(epg);
        REQUIRE(aut.order.fits_u64());
        CHECK(aut.order.as_u64() == brute_aut_count(epg));
    }
}

TEST_CASE("generators validate and the order is consistent with class factorials") {
    for (const auto& entry : build_catalog(20)) {
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        AutGroupSummary aut = automorphism_summary(epg);
        for (const auto& gen : aut.generators)
            CHECK(preserves_edges(epg, epg, gen));
        // order >= product over closed-twin classes of |class|!
        std::map<std::vector<int>, int> classes;
        for (int v = 0; v < epg.vertex_count(); ++v)
            ++classes[epg.closed_neighborhood(v)];
        std::uint64_t lower = 1;
        for (auto& [nb, size] : classes)
            for (int k = 2; k <= size; ++k)
                lower *= k;
        REQUIRE(aut.order.fits_u64());
        CHECK(aut.order.as_u64() % lower == 0);
        CHECK(aut.order.as_u64() >= lower);
    }
}

TEST_CASE("big automorphism orders print exactly") {
    // star K1,31 (elementary abelian C2^5): the leaves permute freely
    SimpleGraph epg = build_bundle(abelian({2, 2, 2, 2, 2})).enhanced;
    AutGroupSummary aut = automorphism_summary(epg);
    CHECK(aut.order.to_string() == "8222838654177922817725562880000000"); // 31!
    long long twos = 0;
    for (long long k = 2; k <= 31; ++k)
        for (long long v = k; v % 2 == 0; v /= 2)
            ++twos;
    CHECK(aut.order_factorization.at(2) == twos);
}

TEST_CASE("group automorphisms by brute force") {
    CHECK(group_automorphisms(cyclic(5)).size() == 4);   // phi(5)
    CHECK(group_automorphisms(klein()).size() == 6);     // GL(2,2)
    CHECK(group_automorphisms(cyclic(8)).size() == 4);   // phi(8)
    CHECK(group_automorphisms(dihedral(6)).size() == 6); // Inn(S3) = S3
}

TEST_CASE("automorphism inclusion chain") {
    AutInclusionReport v4 = aut_inclusion_check(klein());
    CHECK(v4.chain_holds);
    CHECK(v4.group_aut_order == BigUint(6));
    CHECK(v4.epg_aut_order == BigUint(6)); // Aut(star K1,3) = S3

    AutInclusionReport c5 = aut_inclusion_check(cyclic(5));
    CHECK(c5.chain_holds);
    // strict at the first two inclusions: 4 < |Aut(dpg)| < |Aut(pg)| = 120
    CHECK(c5.group_aut_order == BigUint(4));
    REQUIRE(c5.dpg_aut_order.fits_u64());
    CHECK(c5.dpg_aut_order.as_u64() > 4);
    CHECK(c5.pg_aut_order.as_u64() > c5.dpg_aut_order.as_u64());
    CHECK(c5.pg_aut_order == BigUint(120));
    CHECK(c5.epg_aut_order == BigUint(120));

    AutInclusionReport c6 = aut_inclusion_check(cyclic(6));
    CHECK(c6.chain_holds);
    // strict at the last inclusion: power graph of C6 is not complete
    REQUIRE(c6.pg_aut_order.fits_u64());
    REQUIRE(c6.epg_aut_order.fits_u64());
    CHECK(c6.pg_aut_order.as_u64() < c6.epg_aut_order.as_u64());
    CHECK(c6.epg_aut_order == BigUint(720));

    for (const auto& entry : build_catalog(12))
        if (entry.group.order() >= 2)
            CHECK(aut_inclusion_check(entry.group).chain_holds);
}

TEST_CASE("undirected isomorphism against the permutation oracle") {
    struct Rng {
        std::uint64_t s;
        std::uint64_t next() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            return s;
        }
    } rng{8675309};
    auto random_graph = [&](int n, int percent) {
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (static_cast<int>(rng.next() % 100) < percent)
                    g.add_edge(u, v);
        return g;
    };
    auto brute_iso = [](const SimpleGraph& a, const SimpleGraph& b) {
        std::vector<int> perm(a.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (preserves_edges(a, b, perm))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (int trial = 0; trial < 30; ++trial) {
        SimpleGraph a = random_graph(7, 20 + 2 * trial);
        SimpleGraph b = random_graph(7, 20 + 2 * trial);
        IsoCertificate cert = are_isomorphic(a, b);
        CHECK(cert.isomorphic() == brute_iso(a, b));
        if (cert.isomorphic())
            CHECK(preserves_edges(a, b, *cert.mapping));

        // a shuffled copy must always be recognized
        std::vector<int> relabel(7);
        std::iota(relabel.begin(), relabel.end(), 0);
        for (int i = 6; i > 0; --i)
            std::swap(relabel[i], relabel[rng.next() % (i + 1)]);
        SimpleGraph shuffled(7);
        for (auto [u, v] : a.edges())
            shuffled.add_edge(relabel[u], relabel[v]);
        CHECK(are_isomorphic(a, shuffled).isomorphic());
    }
}

TEST_CASE("digraph isomorphism against the permutation oracle") {
    struct Rng {
        std::uint64_t s;
        std::uint64_t next() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            return s;
        }
    } rng{1290};
    auto random_digraph = [&](int n, int percent) {
        DiGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && static_cast<int>(rng.next() % 100) < percent)
                    g.add_arc(u, v);
        return g;
    };
    auto preserves_arcs = [](const DiGraph& a, const DiGraph& b, const std::vector<int>& m) {
        for (int u = 0; u < a.vertex_count(); ++u)
            for (int v = 0; v < a.vertex_count(); ++v)
                if (u != v && a.has_arc(u, v) != b.has_arc(m[u], m[v]))
                    return false;
        return true;
    };
    auto brute_iso = [&](const DiGraph& a, const DiGraph& b) {
        std::vector<int> perm(a.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (preserves_arcs(a, b, perm))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (int trial = 0; trial < 25; ++trial) {
        DiGraph a = random_digraph(6, 25 + 2 * trial);
        DiGraph b = random_digraph(6, 25 + 2 * trial);
        IsoCertificate cert = digraph_isomorphic(a, b);
        CHECK(cert.isomorphic() == brute_iso(a, b));
        if (cert.isomorphic())
            CHECK(preserves_arcs(a, b, *cert.mapping));
    }
}

TEST_CASE("search budget exhaustion is an error, not a refutation") {
    SimpleGraph a = build_bundle(abelian({3, 3, 3})).enhanced;
    SimpleGraph b = build_bundle(heisenberg27()).enhanced;
    CHECK_THROWS_WITH_AS(are_isomorphic(a, b, kDefaultIsoCap, 2),
                         doctest::Contains("SearchBudgetExceeded"), Error);
}
