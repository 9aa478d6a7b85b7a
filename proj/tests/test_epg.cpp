#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "epglab/catalog.hpp"
#include "epglab/epg.hpp"

using namespace epglab;

namespace {

// oracle: enhanced adjacency by the exists-z triple loop
SimpleGraph enhanced_oracle(const FiniteGroup& g) {
    const int n = g.order();
    SimpleGraph out(n);
    for (int z = 0; z < n; ++z) {
        auto members = cyclic_subgroup(g, z).members;
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                out.add_edge(members[i], members[j]);
    }
    return out;
}

bool subgraph_of(const SimpleGraph& small, const SimpleGraph& big) {
    for (auto [u, v] : small.edges())
        if (!big.adjacent(u, v))
            return false;
    return true;
}

} // namespace

TEST_CASE("bundle invariants on the catalog") {
    for (const auto& entry : build_catalog(32)) {
        GroupGraphBundle b = build_bundle(entry.group);
        const int n = entry.group.order();

        // directed: x -> y iff y in <x>, y != x
        for (int x = 0; x < n; ++x) {
            auto members = cyclic_subgroup(entry.group, x).members;
            for (int y = 0; y < n; ++y) {
                const bool expected =
                    y != x && std::binary_search(members.begin(), members.end(), y);
                CHECK(b.directed_power.has_arc(x, y) == expected);
            }
        }
        // power is the symmetrization
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                CHECK(b.power.adjacent(x, y) ==
                      (b.directed_power.has_arc(x, y) || b.directed_power.has_arc(y, x)));

        // chain of subgraphs
        CHECK(subgraph_of(b.power, b.enhanced));
        CHECK(subgraph_of(b.enhanced, commuting_graph(entry.group)));

        // identity adjacency: x -> 0 for every x != 0, and 0 adjacent to all
        for (int x = 1; x < n; ++x) {
            CHECK(b.directed_power.has_arc(x, 0));
            CHECK(b.power.adjacent(0, x));
            CHECK(b.enhanced.adjacent(0, x));
        }
    }
}

TEST_CASE("enhanced adjacency computed two ways") {
    for (const auto& entry : build_catalog(100)) {
        if (entry.group.order() > 100)
            continue;
        CHECK(build_bundle(entry.group).enhanced == enhanced_oracle(entry.group));
    }
}

TEST_CASE("enhanced power graph of a cyclic group is complete") {
    for (int n : {1, 2, 5, 9, 12}) {
        SimpleGraph epg = build_bundle(cyclic(n)).enhanced;
        CHECK(epg.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    }
}

TEST_CASE("enhanced power graph of the Klein group is a star") {
    SimpleGraph epg = build_bundle(klein()).enhanced;
    CHECK(epg.edge_count() == 3);
    CHECK(epg.degree(0) == 3);
    for (int v = 1; v < 4; ++v)
        CHECK(epg.degree(v) == 1);
}

TEST_CASE("p-groups have equal enhanced and power graphs") {
    GroupGraphBundle q8 = build_bundle(generalized_quaternion(8));
    CHECK(q8.enhanced == q8.power);
    for (const FiniteGroup& g :
         {generalized_quaternion(16), dihedral(16), m16(), heisenberg27(), abelian({4, 4})}) {
        GroupGraphBundle b = build_bundle(g);
        CHECK(b.enhanced == b.power);
    }
}

TEST_CASE("commuting graphs") {
    CHECK(commuting_graph(abelian({3, 4})).edge_count() == 12LL * 11 / 2);

    // S3: identity universal, the two rotations adjacent, involutions isolated from each other
    FiniteGroup s3 = dihedral(6);
    SimpleGraph cg = commuting_graph(s3);
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) {
            const bool commute = s3.mul(x, y) == s3.mul(y, x);
            CHECK(cg.adjacent(x, y) == commute);
        }
    CHECK(cg.degree(0) == 5);
    int rot_edges = 0;
    for (auto [u, v] : cg.edges())
        if (u != 0 && s3.element_order(u) == 3 && s3.element_order(v) == 3)
            ++rot_edges;
    CHECK(rot_edges == 1);

    // Q8: the center {1, -1} is adjacent to everything
    FiniteGroup q8 = generalized_quaternion(8);
    SimpleGraph qc = commuting_graph(q8);
    int central = 0;
    for (int x = 0; x < 8; ++x)
        if (qc.degree(x) == 7)
            ++central;
    CHECK(central == 2);
}

TEST_CASE("product law verdicts") {
    ProductLawResult coprime = check_product_law(cyclic(2), cyclic(3));
    CHECK(coprime.equal);
    CHECK_FALSE(coprime.witness.has_value());

    ProductLawResult c2c2 = check_product_law(cyclic(2), cyclic(2));
    CHECK_FALSE(c2c2.equal);
    REQUIRE(c2c2.witness.has_value());
    // the witness is an edge of the boxed product missing from EPG(C2 x C2)
    SimpleGraph boxed = strong_product(build_bundle(cyclic(2)).enhanced,
                                       build_bundle(cyclic(2)).enhanced);
    SimpleGraph epg = build_bundle(direct_product(cyclic(2), cyclic(2))).enhanced;
    auto [u, v] = *c2c2.witness;
    CHECK(boxed.adjacent(u, v));
    CHECK_FALSE(epg.adjacent(u, v));
    // a coordinate-diagonal pair of involutions, so neither side is the identity
    CHECK(u != 0);
    CHECK(v != 0);

    CHECK_FALSE(check_product_law(cyclic(2), cyclic(4)).equal);
}

TEST_CASE("product law matches the coprimality criterion on a sweep") {
    auto catalog = build_catalog(12);
    for (const auto& a : catalog)
        for (const auto& b : catalog) {
            if (a.group.order() * b.group.order() > 36)
                continue;
            const bool expect = std::gcd(exponent(a.group), exponent(b.group)) == 1;
            CHECK(check_product_law(a.group, b.group).equal == expect);
        }
}
