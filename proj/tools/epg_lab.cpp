#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epglab/catalog.hpp"
#include "epglab/checks.hpp"
#include "epglab/cliques.hpp"
#include "epglab/epg.hpp"
#include "epglab/iso.hpp"
#include "epglab/json_io.hpp"
#include "epglab/perfectness.hpp"
#include "epglab/recognition.hpp"
#include "epglab/semitree.hpp"

using nlohmann::json;
using namespace epglab;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct GlobalOpts {
    std::uint64_t seed = 0;
    int cap = kDefaultGroupSizeCap;
    std::string out;
    std::string format = "json";
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty())
        std::cout << text;
    else
        write_file(g.out, text);
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

json tuple_map_to_json(const std::map<long long, PTuple>& tuples) {
    json j = json::object();
    for (const auto& [p, tuple] : tuples)
        j[std::to_string(p)] = tuple.a;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"enhanced power graph laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after subcommands

    GlobalOpts gopt;
    app.add_option("--seed", gopt.seed, "seed recorded in reports");
    app.add_option("--cap", gopt.cap, "size cap for group/graph construction");
    app.add_option("--out", gopt.out, "output file (stdout when absent)");
    app.add_option("--format", gopt.format, "json|text|dot where applicable");

    // group build
    auto* group = app.add_subcommand("group", "group construction");
    auto* build = group->add_subcommand("build", "build a group and write its table");
    std::string kind = "cyclic", params;
    build->add_option("--kind", kind,
                      "cyclic|abelian|dihedral|quaternion|klein|m16|heisenberg27|product");
    build->add_option("--params", params, "comma-separated integers (orders / factor list)");
    std::vector<std::string> product_files;
    build->add_option("--factors", product_files, "group JSON files for --kind product");
    auto* catalog_cmd = group->add_subcommand("catalog", "emit the generated catalog");
    int catalog_max = 32;
    catalog_cmd->add_option("--max-order", catalog_max, "largest group order");

    // graph emit
    auto* graph = app.add_subcommand("graph", "graph construction from a group");
    auto* emit_cmd = graph->add_subcommand("emit", "emit epg|pg|dpg|commuting");
    std::string group_file, graph_kind = "epg", labels = "none";
    emit_cmd->add_option("--group", group_file, "group JSON file")->required();
    emit_cmd->add_option("--kind", graph_kind, "epg|pg|dpg|commuting");
    emit_cmd->add_option("--labels", labels, "orders|ids|none (dot output)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "clique-based counting");
    auto* orders_cmd = analyze->add_subcommand("orders", "count elements of a given order");
    std::string graph_file;
    long long m_value = 1;
    orders_cmd->add_option("--graph", graph_file, "graph JSON file")->required();
    orders_cmd->add_option("--m", m_value, "order to count")->required();
    auto* invariants_cmd =
        analyze->add_subcommand("abelian-invariants", "recover abelian invariants from a graph");
    std::string inv_graph_file;
    invariants_cmd->add_option("--graph", inv_graph_file, "graph JSON file")->required();

    // semitree
    auto* semitree = app.add_subcommand("semitree", "p-semitrees");
    auto* st_build = semitree->add_subcommand("build", "build S_p(tuple)");
    long long st_p = 2;
    std::string st_tuple;
    st_build->add_option("--p", st_p, "prime")->required();
    st_build->add_option("--tuple", st_tuple, "comma-separated exponents")->required();
    auto* st_rec = semitree->add_subcommand("recognize", "recognize a p-semitree");
    std::string st_graph;
    long long st_rec_p = 2;
    st_rec->add_option("--graph", st_graph, "graph JSON file")->required();
    st_rec->add_option("--p", st_rec_p, "prime")->required();

    // recognize
    auto* recognize = app.add_subcommand("recognize", "graph-side recognition");
    auto* rc_cond = recognize->add_subcommand("conditions", "necessary conditions E1-E5");
    std::string rc_graph;
    rc_cond->add_option("--graph", rc_graph, "graph JSON file")->required();
    auto* rc_pcomp = recognize->add_subcommand("pcomponent", "extract a p-component");
    std::string rc_pcomp_graph;
    long long rc_p = 2;
    rc_pcomp->add_option("--graph", rc_pcomp_graph, "graph JSON file")->required();
    rc_pcomp->add_option("--p", rc_p, "prime")->required();
    auto* rc_nilp = recognize->add_subcommand("nilpotent", "graph-side nilpotency");
    std::string rc_nilp_graph;
    rc_nilp->add_option("--graph", rc_nilp_graph, "graph JSON file")->required();
    auto* rc_ab = recognize->add_subcommand("abelian", "recognize an abelian enhanced power graph");
    std::string rc_ab_graph;
    rc_ab->add_option("--graph", rc_ab_graph, "graph JSON file")->required();

    // perfect
    auto* perfect = app.add_subcommand("perfect", "perfectness tools");
    auto* pf_check = perfect->add_subcommand("check", "perfectness verdict and hole search");
    std::string pf_group;
    int hole_bound = 7;
    pf_check->add_option("--group", pf_group, "group JSON file")->required();
    pf_check->add_option("--hole-bound", hole_bound, "odd bound for the Berge search");
    auto* pf_color = perfect->add_subcommand("color", "weakly perfect coloring");
    std::string pf_color_group;
    pf_color->add_option("--group", pf_color_group, "group JSON file")->required();

    // iso
    auto* iso = app.add_subcommand("iso", "isomorphism and automorphisms");
    auto* iso_cmp = iso->add_subcommand("compare", "isomorphism of two graphs");
    std::string iso_a, iso_b;
    bool iso_directed = false;
    iso_cmp->add_option("--a", iso_a, "graph JSON file")->required();
    iso_cmp->add_option("--b", iso_b, "graph JSON file")->required();
    iso_cmp->add_flag("--directed", iso_directed, "treat inputs as digraphs");
    auto* iso_aut = iso->add_subcommand("aut", "automorphism group summary");
    std::string aut_graph;
    iso_aut->add_option("--graph", aut_graph, "graph JSON file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the catalog check suite");
    int max_order = 100;
    std::vector<std::string> check_ids;
    verify->add_option("--max-order", max_order, "catalog bound (<= 200)");
    verify->add_option("--checks", check_ids, "subset of check ids (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            std::vector<int> p = parse_int_list(params);
            FiniteGroup g = [&] {
                if (kind == "cyclic") {
                    if (p.size() != 1)
                        throw Error(Errc::BadParameter, "cyclic needs one order");
                    return cyclic(p[0]);
                }
                if (kind == "abelian")
                    return abelian(p);
                if (kind == "dihedral") {
                    if (p.size() != 1)
                        throw Error(Errc::BadParameter, "dihedral needs one order");
                    return dihedral(p[0]);
                }
                if (kind == "quaternion") {
                    if (p.size() != 1)
                        throw Error(Errc::BadParameter, "quaternion needs one order");
                    return generalized_quaternion(p[0]);
                }
                if (kind == "klein")
                    return klein();
                if (kind == "m16")
                    return m16();
                if (kind == "heisenberg27")
                    return heisenberg27();
                if (kind == "product") {
                    if (product_files.size() < 2)
                        throw Error(Errc::BadParameter, "product needs two --factors files");
                    FiniteGroup acc = load_group(product_files[0]);
                    for (size_t i = 1; i < product_files.size(); ++i)
                        acc = direct_product(acc, load_group(product_files[i]), gopt.cap);
                    return acc;
                }
                throw Error(Errc::BadParameter, "unknown kind " + kind);
            }();
            emit(gopt, group_to_json(g));
            return 0;
        }

        if (catalog_cmd->parsed()) {
            json arr = json::array();
            for (const auto& entry : build_catalog(catalog_max))
                arr.push_back(json::parse(group_to_json(entry.group)));
            emit(gopt, arr.dump(2) + "\n");
            return 0;
        }

        if (emit_cmd->parsed()) {
            FiniteGroup g = load_group(group_file);
            GroupGraphBundle b = build_bundle(g);
            std::vector<std::string> label_strings;
            if (labels == "orders")
                for (int x = 0; x < g.order(); ++x)
                    label_strings.push_back("o=" + std::to_string(g.element_order(x)));
            else if (labels == "ids")
                for (int x = 0; x < g.order(); ++x)
                    label_strings.push_back(std::to_string(x));
            if (graph_kind == "dpg") {
                emit(gopt, gopt.format == "dot" ? digraph_to_dot(b.directed_power, label_strings)
                                                : digraph_to_json(b.directed_power));
                return 0;
            }
            SimpleGraph chosen;
            if (graph_kind == "epg")
                chosen = b.enhanced;
            else if (graph_kind == "pg")
                chosen = b.power;
            else if (graph_kind == "commuting")
                chosen = commuting_graph(g);
            else
                throw Error(Errc::BadParameter, "unknown graph kind " + graph_kind);
            emit(gopt, gopt.format == "dot" ? graph_to_dot(chosen, label_strings)
                                            : graph_to_json(chosen));
            return 0;
        }

        if (orders_cmd->parsed()) {
            SimpleGraph g = load_graph(graph_file);
            CliqueFamily f = clique_family(g);
            json j;
            j["m"] = m_value;
            j["count_by_classes"] = count_order_elements_by_classes(f, m_value);
            j["count_by_inclusion_exclusion"] = count_order_elements_by_inclusion_exclusion(f, m_value);
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (invariants_cmd->parsed()) {
            SimpleGraph g = load_graph(inv_graph_file);
            auto inv = abelian_invariants_from_graph(g);
            json j = json::object();
            for (auto& [p, factors] : inv) {
                json f = json::object();
                for (auto& [exp, mult] : factors)
                    f[std::to_string(exp)] = mult;
                j[std::to_string(p)] = f;
            }
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (st_build->parsed()) {
            PSemitree st = build_p_semitree(st_p, parse_int_list(st_tuple));
            emit(gopt, gopt.format == "dot" ? graph_to_dot(st.graph) : graph_to_json(st.graph));
            return 0;
        }

        if (st_rec->parsed()) {
            auto tuple = is_p_semitree(load_graph(st_graph), st_rec_p);
            json j;
            j["is_semitree"] = tuple.has_value();
            if (tuple)
                j["tuple"] = tuple->a;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (rc_cond->parsed()) {
            ConditionReport rep = check_conditions(load_graph(rc_graph));
            json j;
            j["e1"] = rep.e1;
            j["e2"] = rep.e2;
            j["e3"] = rep.e3;
            j["e4"] = rep.e4;
            j["e5"] = rep.e5;
            if (!rep.witness.empty())
                j["witness"] = rep.witness;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (rc_pcomp->parsed()) {
            PComponent comp = p_component(load_graph(rc_pcomp_graph), rc_p);
            // graph JSON plus the marked original vertex ids
            json j = json::parse(graph_to_json(comp.graph));
            j["vertices"] = comp.vertices;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (rc_nilp->parsed()) {
            NilpotencyReport rep = nilpotency_from_graph(load_graph(rc_nilp_graph));
            json j;
            j["nilpotent"] = rep.nilpotent;
            json pp = json::object();
            for (auto [p, sum] : rep.per_prime)
                pp[std::to_string(p)] = sum;
            j["per_prime"] = pp;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (rc_ab->parsed()) {
            auto tuples = recognize_abelian_epg(load_graph(rc_ab_graph));
            json j;
            j["recognized"] = tuples.has_value();
            if (tuples)
                j["tuples"] = tuple_map_to_json(*tuples);
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (pf_check->parsed()) {
            FiniteGroup g = load_group(pf_group);
            json j;
            j["omega"] = omega_epg(g);
            j["nilpotent"] = is_nilpotent(g);
            if (is_nilpotent(g)) {
                j["non_cyclic_sylow_count"] = non_cyclic_sylow_count(g);
                j["perfect"] = perfect_verdict_nilpotent(g);
            }
            SimpleGraph epg = build_bundle(g).enhanced;
            if (epg.vertex_count() <= kDefaultHoleSearchCap) {
                auto hole = find_induced_odd_hole_or_antihole(epg, hole_bound);
                j["hole_found"] = hole.has_value();
                if (hole) {
                    j["hole"] = hole->vertices;
                    j["in_complement"] = hole->in_complement;
                }
            }
            auto pent = pentagon_witness(g);
            j["pentagon_found"] = pent.has_value();
            if (pent)
                j["pentagon"] = std::vector<int>(pent->begin(), pent->end());
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (pf_color->parsed()) {
            FiniteGroup g = load_group(pf_color_group);
            Coloring c = weakly_perfect_coloring(g);
            json j;
            j["colors"] = c.color;
            j["num_colors"] = c.num_colors;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (iso_cmp->parsed()) {
            json j;
            if (iso_directed) {
                // directed graphs arrive as edge lists with "directed": true
                auto parse_digraph = [](const std::string& path) {
                    json src = json::parse(read_file(path));
                    DiGraph d(src.at("n").get<int>());
                    for (const auto& e : src.at("edges"))
                        d.add_arc(e[0].get<int>(), e[1].get<int>());
                    return d;
                };
                IsoCertificate cert = digraph_isomorphic(parse_digraph(iso_a), parse_digraph(iso_b));
                j["isomorphic"] = cert.isomorphic();
                if (cert.isomorphic())
                    j["mapping"] = *cert.mapping;
                else
                    j["refutation"] = cert.refutation;
            } else {
                IsoCertificate cert = are_isomorphic(load_graph(iso_a), load_graph(iso_b));
                j["isomorphic"] = cert.isomorphic();
                if (cert.isomorphic())
                    j["mapping"] = *cert.mapping;
                else
                    j["refutation"] = cert.refutation;
            }
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (iso_aut->parsed()) {
            AutGroupSummary aut = automorphism_summary(load_graph(aut_graph));
            json j;
            j["order"] = aut.order.to_string();
            j["abelian"] = aut.abelian;
            json f = json::object();
            for (auto [p, e] : aut.order_factorization)
                f[std::to_string(p)] = e;
            j["factorization"] = f;
            j["generators"] = aut.generators;
            emit(gopt, j.dump(2) + "\n");
            return 0;
        }

        if (verify->parsed()) {
            if (max_order > 200)
                throw Error(Errc::BadParameter, "verify max-order is capped at 200");
            CheckOptions opt;
            opt.max_order = max_order;
            opt.seed = gopt.seed;
            auto results = run_checks(check_ids, opt);
            json j;
            j["schema"] = "epg-lab/1";
            j["tool_version"] = "1.0.0";
            j["seed"] = gopt.seed;
            j["max_order"] = max_order;
            json checks = json::array();
            long long passed = 0;
            for (const auto& r : results) {
                json c;
                c["check_id"] = r.id;
                c["property"] = r.property;
                c["pass"] = r.pass;
                c["instances"] = r.sub_checked;
                c["failures"] = r.sub_failed;
                c["details"] = r.details;
                checks.push_back(c);
                if (r.pass)
                    ++passed;
            }
            j["checks"] = checks;
            j["summary"] = {{"total", results.size()}, {"passed", passed},
                            {"failed", results.size() - passed}};
            if (gopt.format == "text") {
                std::ostringstream text;
                for (const auto& r : results)
                    text << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  (" << r.sub_checked
                         << " instances, " << r.sub_failed << " failures)\n";
                emit(gopt, text.str());
            } else {
                emit(gopt, j.dump(2) + "\n");
            }
            return passed == static_cast<long long>(results.size()) ? 0 : kExitCheckFailure;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::cerr << "no subcommand executed\n";
    return kExitInputError;
}
