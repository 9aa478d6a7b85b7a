#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "epglab/catalog.hpp"
#include "epglab/perfectness.hpp"

using namespace epglab;

TEST_CASE("clique number of the enhanced power graph") {
    for (int n : {2, 5, 12})
        CHECK(omega_epg(cyclic(n)) == n);
    CHECK(omega_epg(klein()) == 2);
    CHECK(omega_epg(abelian({2, 2, 3, 3, 5, 5})) == 30);

    // equals the generic clique number on small instances
    for (const auto& entry : build_catalog(36)) {
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        CHECK(omega_epg(entry.group) == clique_number_generic(epg));
    }
}

TEST_CASE("perfectness verdict for nilpotent groups") {
    CHECK(perfect_verdict_nilpotent(abelian({4, 4})));       // one non-cyclic Sylow
    CHECK(perfect_verdict_nilpotent(abelian({2, 2, 3, 3}))); // two
    CHECK_FALSE(perfect_verdict_nilpotent(abelian({2, 2, 3, 3, 5, 5}))); // three
    CHECK_THROWS_WITH_AS(perfect_verdict_nilpotent(dihedral(6)), doctest::Contains("NotNilpotent"),
                         Error);
}

TEST_CASE("no short holes in a perfect nilpotent instance") {
    // two non-cyclic Sylow subgroups: the 36-vertex graph stays hole-free
    SimpleGraph epg = build_bundle(abelian({2, 2, 3, 3})).enhanced;
    CHECK_FALSE(find_induced_odd_hole_or_antihole(epg, 9).has_value());
}

TEST_CASE("pentagon witness in the smallest three-Sylow example") {
    FiniteGroup g = abelian({2, 2, 3, 3, 5, 5});
    auto witness = pentagon_witness(g);
    REQUIRE(witness.has_value());
    SimpleGraph epg = build_bundle(g).enhanced;
    CHECK(is_induced_cycle(epg, std::vector<int>(witness->begin(), witness->end())));
}

TEST_CASE("pentagon witness by the same recipe for 2,3,7") {
    FiniteGroup g = abelian({2, 2, 3, 3, 7, 7});
    auto witness = pentagon_witness(g);
    REQUIRE(witness.has_value());
    SimpleGraph epg = build_bundle(g).enhanced;
    CHECK(is_induced_cycle(epg, std::vector<int>(witness->begin(), witness->end())));
}

TEST_CASE("no pentagon in complete graphs") {
    CHECK_FALSE(pentagon_witness(cyclic(12)).has_value());
    CHECK_FALSE(pentagon_witness(klein()).has_value());
}

TEST_CASE("weakly perfect coloring of a cyclic group") {
    Coloring c = weakly_perfect_coloring(cyclic(7));
    CHECK(c.num_colors == 7);
    std::vector<int> sorted = c.color;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 7; ++i)
        CHECK(sorted[i] == i); // all colors distinct on a complete graph
}

TEST_CASE("weakly perfect coloring needs an exponent-attaining element") {
    // S3 has exponent 6 but elements of order 1, 2, 3 only
    CHECK_THROWS_WITH_AS(weakly_perfect_coloring(dihedral(6)),
                         doctest::Contains("NoExponentElement"), Error);
}

TEST_CASE("coloring is proper with omega colors across the catalog") {
    for (const auto& entry : build_catalog(40)) {
        const int expo = exponent(entry.group);
        bool attained = false;
        for (int x = 0; x < entry.group.order(); ++x)
            attained |= entry.group.element_order(x) == expo;
        if (!attained)
            continue;
        Coloring c = weakly_perfect_coloring(entry.group);
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        CHECK(is_proper_coloring(epg, c));
        CHECK(c.num_colors == omega_epg(entry.group));
        if (entry.group.order() <= 40)
            CHECK(chromatic_number_exact(epg) == c.num_colors);
    }
}

TEST_CASE("the 900-vertex coloring validates") {
    FiniteGroup g = abelian({2, 2, 3, 3, 5, 5});
    Coloring c = weakly_perfect_coloring(g);
    CHECK(c.num_colors == 30);
    CHECK(is_proper_coloring(build_bundle(g).enhanced, c));
}
