#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <string>

#include "epglab/epg.hpp"
#include "epglab/json_io.hpp"

using namespace epglab;

namespace {

std::string bin_path() {
    const char* p = std::getenv("EPG_LAB_BIN");
    return p ? p : "";
}

int run(const std::string& cmd, std::string* output = nullptr) {
    std::string full = cmd + " > /tmp/epg_cli_out.txt 2>&1";
    int rc = std::system(full.c_str());
    if (output)
        *output = read_file("/tmp/epg_cli_out.txt");
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("group JSON round trip") {
    FiniteGroup g = abelian({4, 2});
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back == g);
    CHECK(back.name() == g.name());
    CHECK_THROWS_AS(group_from_json("{\"n\": 2}"), Error);
    CHECK_THROWS_AS(group_from_json("{\"n\": 2, \"table\": [0,1,1,1]}"), Error);
    CHECK_THROWS_AS(group_from_json("not json"), Error);
}

TEST_CASE("graph JSON round trip and shape") {
    SimpleGraph g = build_bundle(dihedral(8)).enhanced;
    std::string text = graph_to_json(g);
    SimpleGraph back = graph_from_json(text);
    CHECK(back == g);
    // edges are emitted u < v in sorted order
    auto edges = g.edges();
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    for (auto [u, v] : edges)
        CHECK(u < v);
}

TEST_CASE("dot export") {
    SimpleGraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    std::string dot = graph_to_dot(tri, {"a", "b", "c"});
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);

    DiGraph d(2);
    d.add_arc(0, 1);
    std::string ddot = digraph_to_dot(d);
    CHECK(ddot.find("digraph g {") == 0);
    CHECK(ddot.find("0 -> 1") != std::string::npos);
}

TEST_CASE("cli end to end") {
    const std::string bin = bin_path();
    REQUIRE_FALSE(bin.empty());

    SUBCASE("group build then graph emit") {
        CHECK(run(bin + " group build --kind abelian --params 4,2 --out /tmp/epg_g.json") == 0);
        FiniteGroup g = load_group("/tmp/epg_g.json");
        CHECK(g.order() == 8);

        CHECK(run(bin + " graph emit --group /tmp/epg_g.json --kind epg --out /tmp/epg_e.json") == 0);
        SimpleGraph epg = load_graph("/tmp/epg_e.json");
        CHECK(epg == build_bundle(g).enhanced);

        std::string dot;
        CHECK(run(bin + " --format dot graph emit --group /tmp/epg_g.json --kind dpg --labels orders",
                  &dot) == 0);
        CHECK(dot.find("digraph") != std::string::npos);
        CHECK(dot.find("o=4") != std::string::npos);
    }

    SUBCASE("analyze orders") {
        run(bin + " group build --kind abelian --params 4,2 --out /tmp/epg_g.json");
        run(bin + " graph emit --group /tmp/epg_g.json --kind epg --out /tmp/epg_e.json");
        std::string out;
        CHECK(run(bin + " analyze orders --graph /tmp/epg_e.json --m 2", &out) == 0);
        CHECK(out.find("\"count_by_classes\": 3") != std::string::npos);
        CHECK(out.find("\"count_by_inclusion_exclusion\": 3") != std::string::npos);
    }

    SUBCASE("semitree build and recognize") {
        CHECK(run(bin + " semitree build --p 2 --tuple 2,1 --out /tmp/epg_st.json") == 0);
        std::string out;
        CHECK(run(bin + " semitree recognize --graph /tmp/epg_st.json --p 2", &out) == 0);
        CHECK(out.find("\"is_semitree\": true") != std::string::npos);
    }

    SUBCASE("recognize and perfect subcommands") {
        run(bin + " group build --kind cyclic --params 12 --out /tmp/epg_c12.json");
        run(bin + " graph emit --group /tmp/epg_c12.json --kind epg --out /tmp/epg_k12.json");
        std::string out;
        CHECK(run(bin + " recognize conditions --graph /tmp/epg_k12.json", &out) == 0);
        CHECK(out.find("\"e1\": true") != std::string::npos);
        CHECK(run(bin + " recognize abelian --graph /tmp/epg_k12.json", &out) == 0);
        CHECK(out.find("\"recognized\": true") != std::string::npos);
        CHECK(run(bin + " recognize nilpotent --graph /tmp/epg_k12.json", &out) == 0);
        CHECK(out.find("\"nilpotent\": true") != std::string::npos);
        CHECK(run(bin + " recognize pcomponent --graph /tmp/epg_k12.json --p 2 --out /tmp/epg_p2.json") == 0);
        SimpleGraph sub = load_graph("/tmp/epg_p2.json"); // K4 component of K12
        CHECK(sub.vertex_count() == 4);
        CHECK(sub.edge_count() == 6);
        CHECK(run(bin + " perfect check --group /tmp/epg_c12.json", &out) == 0);
        CHECK(out.find("\"perfect\": true") != std::string::npos);
        CHECK(run(bin + " perfect color --group /tmp/epg_c12.json", &out) == 0);
        CHECK(out.find("\"num_colors\": 12") != std::string::npos);
    }

    SUBCASE("iso compare and aut") {
        run(bin + " group build --kind heisenberg27 --out /tmp/epg_h.json");
        run(bin + " group build --kind abelian --params 3,3,3 --out /tmp/epg_a.json");
        run(bin + " graph emit --group /tmp/epg_h.json --kind epg --out /tmp/epg_hg.json");
        run(bin + " graph emit --group /tmp/epg_a.json --kind epg --out /tmp/epg_ag.json");
        std::string out;
        CHECK(run(bin + " iso compare --a /tmp/epg_hg.json --b /tmp/epg_ag.json", &out) == 0);
        CHECK(out.find("\"isomorphic\": true") != std::string::npos);

        run(bin + " graph emit --group /tmp/epg_h.json --kind dpg --out /tmp/epg_hd.json");
        run(bin + " graph emit --group /tmp/epg_a.json --kind dpg --out /tmp/epg_ad.json");
        CHECK(run(bin + " iso compare --directed --a /tmp/epg_hd.json --b /tmp/epg_ad.json", &out) == 0);
        CHECK(out.find("\"isomorphic\": true") != std::string::npos);

        CHECK(run(bin + " analyze abelian-invariants --graph /tmp/epg_ag.json", &out) == 0);
        CHECK(out.find("\"3\"") != std::string::npos); // 3 factors of 3^1
        CHECK(out.find("\"1\": 3") != std::string::npos);

        run(bin + " group build --kind cyclic --params 3 --out /tmp/epg_c3.json");
        run(bin + " graph emit --group /tmp/epg_c3.json --kind epg --out /tmp/epg_k3.json");
        CHECK(run(bin + " iso aut --graph /tmp/epg_k3.json", &out) == 0);
        CHECK(out.find("\"order\": \"6\"") != std::string::npos);
        CHECK(out.find("\"abelian\": false") != std::string::npos);
    }

    SUBCASE("verify runs a small check subset") {
        std::string out;
        CHECK(run(bin + " --format text verify --max-order 16 --checks counting product-law",
                  &out) == 0);
        CHECK(out.find("PASS  counting") != std::string::npos);
        CHECK(out.find("PASS  product-law") != std::string::npos);
    }

    SUBCASE("verify reports are byte-identical across runs") {
        CHECK(run(bin + " --seed 7 verify --max-order 12 --checks counting --out /tmp/epg_v1.json") == 0);
        CHECK(run(bin + " --seed 7 verify --max-order 12 --checks counting --out /tmp/epg_v2.json") == 0);
        CHECK(read_file("/tmp/epg_v1.json") == read_file("/tmp/epg_v2.json"));
        CHECK(read_file("/tmp/epg_v1.json").find("epg-lab/1") != std::string::npos);
    }

    SUBCASE("catalog file is an array of group records") {
        std::string out;
        CHECK(run(bin + " group catalog --max-order 8", &out) == 0);
        CHECK(out.find("\"table\"") != std::string::npos);
        CHECK(out.find("\"Q8\"") != std::string::npos);
        CHECK(out[0] == '[');
    }

    SUBCASE("bad input exits with code 2") {
        CHECK(run(bin + " group build --kind cyclic --params 0") == 2);
        CHECK(run(bin + " analyze orders --graph /tmp/does_not_exist.json --m 2") == 2);
    }
}
