#include "epglab/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "epglab/catalog.hpp"
#include "epglab/cliques.hpp"
#include "epglab/epg.hpp"
#include "epglab/iso.hpp"
#include "epglab/perfectness.hpp"
#include "epglab/recognition.hpp"
#include "epglab/semitree.hpp"

namespace epglab {

namespace {

bool is_commutative(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a))
                return false;
    return true;
}

long long brute_order_count(const FiniteGroup& g, long long m) {
    long long c = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == m)
            ++c;
    return c;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (first_failure.empty())
                first_failure = what;
        }
    }

    CheckResult finish(std::string id, std::string property) const {
        CheckResult r;
        r.id = std::move(id);
        r.property = std::move(property);
        r.pass = failed == 0;
        r.sub_checked = checked;
        r.sub_failed = failed;
        r.details = failed == 0 ? (std::to_string(checked) + " instances") : first_failure;
        return r;
    }
};

} // namespace

CheckResult check_counting_formulas(int max_order) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& entry : build_catalog(max_order)) {
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        CliqueFamily family = clique_family(epg);
        for (long long m : divisors(exponent(entry.group))) {
            const long long expected = brute_order_count(entry.group, m);
            long long by_classes = -1, by_ie = -1;
            try {
                by_classes = count_order_elements_by_classes(family, m);
                by_ie = count_order_elements_by_inclusion_exclusion(family, m);
            } catch (const Error& e) {
                t.expect(false, entry.name + " m=" + std::to_string(m) + ": " + e.what());
                continue;
            }
            t.expect(by_classes == expected && by_ie == expected,
                     entry.name + " m=" + std::to_string(m) + ": brute=" + std::to_string(expected) +
                         " classes=" + std::to_string(by_classes) + " incl-excl=" + std::to_string(by_ie));
        }
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    t.expect(elapsed.count() < 60, "counting sweep exceeded 60 s");
    return t.finish("counting", "order-count-formulas-match-brute-force");
}

CheckResult check_abelian_reconstruction(int max_order) {
    Tally t;
    for (const auto& entry : build_catalog(max_order)) {
        if (!is_commutative(entry.group))
            continue;
        std::map<long long, std::map<int, int>> expected;
        for (int f : entry.abelian_factors) {
            auto fac = factorize(f);
            ++expected[fac.begin()->first][fac.begin()->second];
        }
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        try {
            auto got = abelian_invariants_from_graph(epg);
            t.expect(got == expected, entry.name + ": recovered invariants differ");
        } catch (const Error& e) {
            t.expect(false, entry.name + ": " + e.what());
        }
    }
    return t.finish("abelian-invariants", "abelian-group-recovered-from-graph");
}

CheckResult check_semitree_characterization() {
    Tally t;
    const long long primes[] = {2, 3, 5};
    for (long long p : primes) {
        int max_sum = 0;
        for (long long v = 1; v * p <= 256; v *= p)
            ++max_sum;
        // every tuple up to reordering is a partition of some s <= max_sum
        for (int s = 1; s <= max_sum; ++s) {
            std::vector<std::vector<int>> parts;
            std::vector<int> stack;
            auto gen = [&](auto&& self, int rest, int max_part) -> void {
                if (rest == 0) {
                    parts.push_back(stack);
                    return;
                }
                for (int part = std::min(rest, max_part); part >= 1; --part) {
                    stack.push_back(part);
                    self(self, rest - part, part);
                    stack.pop_back();
                }
            };
            gen(gen, s, s);
            for (const auto& tuple : parts) {
                std::vector<int> factors;
                for (int e : tuple) {
                    long long pe = 1;
                    for (int i = 0; i < e; ++i)
                        pe *= p;
                    factors.push_back(static_cast<int>(pe));
                }
                PSemitree st = build_p_semitree(p, tuple, 256);
                SimpleGraph epg = build_bundle(abelian(factors)).enhanced;
                std::ostringstream name;
                name << "S_" << p << "(";
                for (size_t i = 0; i < tuple.size(); ++i)
                    name << (i ? "," : "") << tuple[i];
                name << ")";
                t.expect(are_isomorphic(st.graph, epg).isomorphic(),
                         name.str() + " is not the corresponding abelian enhanced power graph");
            }
        }
    }
    t.expect(are_isomorphic(build_bundle(m16()).enhanced, build_p_semitree(2, {3, 1}).graph).isomorphic(),
             "EPG(M16) != S_2(3,1)");
    t.expect(are_isomorphic(build_bundle(heisenberg27()).enhanced,
                            build_p_semitree(3, {1, 1, 1}).graph)
                 .isomorphic(),
             "EPG(Heis27) != S_3(1,1,1)");
    return t.finish("semitree", "p-semitrees-are-abelian-p-group-graphs");
}

CheckResult check_iso_equivalence(int max_order) {
    Tally t;
    auto catalog = build_catalog(max_order);
    std::map<int, std::vector<const CatalogEntry*>> by_order;
    for (const auto& e : catalog)
        by_order[e.group.order()].push_back(&e);

    bool pair27_isomorphic = false;
    for (auto& [order, entries] : by_order) {
        std::vector<GroupGraphBundle> bundles;
        bundles.reserve(entries.size());
        for (const auto* e : entries)
            bundles.push_back(build_bundle(e->group));
        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j) {
                IsoCertificate epg = are_isomorphic(bundles[i].enhanced, bundles[j].enhanced);
                IsoCertificate pg = are_isomorphic(bundles[i].power, bundles[j].power);
                IsoCertificate dpg =
                    digraph_isomorphic(bundles[i].directed_power, bundles[j].directed_power);
                const std::string pair = entries[i]->name + " vs " + entries[j]->name;
                t.expect(epg.isomorphic() == pg.isomorphic() &&
                             pg.isomorphic() == dpg.isomorphic(),
                         pair + ": verdicts diverge (epg=" + std::to_string(epg.isomorphic()) +
                             " pg=" + std::to_string(pg.isomorphic()) +
                             " dpg=" + std::to_string(dpg.isomorphic()) + ")");
                if (epg.isomorphic()) {
                    if ((entries[i]->name == "C3xC3xC3" && entries[j]->name == "Heis27") ||
                        (entries[i]->name == "Heis27" && entries[j]->name == "C3xC3xC3"))
                        pair27_isomorphic = true;
                    try {
                        epg_iso_to_directed_iso(entries[i]->group, entries[j]->group, *epg.mapping);
                        t.expect(true, "");
                    } catch (const Error& e) {
                        t.expect(false, pair + ": directed map construction failed: " + e.what());
                    }
                }
            }
    }
    if (max_order >= 27)
        t.expect(pair27_isomorphic, "the order-27 pair was not found isomorphic");
    return t.finish("iso-equivalence", "three-graph-isomorphism-verdicts-coincide");
}

CheckResult check_power_preserves_enhanced(int max_order) {
    Tally t;
    auto catalog = build_catalog(max_order);
    std::map<int, std::vector<const CatalogEntry*>> by_order;
    for (const auto& e : catalog)
        by_order[e.group.order()].push_back(&e);

    for (auto& [order, entries] : by_order) {
        std::vector<GroupGraphBundle> bundles;
        for (const auto* e : entries)
            bundles.push_back(build_bundle(e->group));
        for (size_t i = 0; i < entries.size(); ++i) {
            // every power-graph automorphism (generators suffice: the checked
            // property is closed under composition and inverse)
            AutGroupSummary aut = automorphism_summary(bundles[i].power, std::max(64, order));
            for (const auto& gen : aut.generators)
                t.expect(power_iso_preserves_enhanced(entries[i]->group, entries[i]->group, gen),
                         entries[i]->name + ": power automorphism breaks enhanced adjacency");
            for (size_t j = i + 1; j < entries.size(); ++j) {
                IsoCertificate pg = are_isomorphic(bundles[i].power, bundles[j].power);
                if (pg.isomorphic())
                    t.expect(power_iso_preserves_enhanced(entries[i]->group, entries[j]->group,
                                                          *pg.mapping),
                             entries[i]->name + " vs " + entries[j]->name +
                                 ": power isomorphism breaks enhanced adjacency");
            }
        }
    }
    return t.finish("power-preserves-enhanced", "power-iso-is-enhanced-iso");
}

CheckResult check_aut_classifications() {
    Tally t;
    std::set<std::string> abelian_aut, square_free, prime_power;
    for (const auto& entry : build_catalog(16)) {
        if (entry.group.order() < 2)
            continue;
        SimpleGraph epg = build_bundle(entry.group).enhanced;
        AutGroupSummary aut = automorphism_summary(epg);
        if (aut.abelian)
            abelian_aut.insert(entry.name);
        bool sq_free = true;
        for (auto [p, e] : aut.order_factorization)
            if (e > 1)
                sq_free = false;
        if (sq_free)
            square_free.insert(entry.name);
        if (aut.order_factorization.size() == 1)
            prime_power.insert(entry.name);

        if (entry.name == "C4xC2") {
            t.expect(aut.order == BigUint(16), "Aut(EPG(C4xC2)) order is " + aut.order.to_string());
            bool involutions = true;
            for (const auto& gen : aut.generators) {
                std::vector<int> sq(gen.size());
                for (size_t v = 0; v < gen.size(); ++v)
                    sq[v] = gen[gen[v]];
                for (size_t v = 0; v < sq.size(); ++v)
                    if (sq[v] != static_cast<int>(v))
                        involutions = false;
            }
            t.expect(involutions, "Aut(EPG(C4xC2)) has a generator of order > 2");
        }
    }
    auto set_str = [](const std::set<std::string>& s) {
        std::string out;
        for (const auto& x : s)
            out += (out.empty() ? "" : ",") + x;
        return out;
    };
    t.expect(abelian_aut == std::set<std::string>{"C2"},
             "abelian Aut set is {" + set_str(abelian_aut) + "}");
    t.expect(square_free == std::set<std::string>({"C2", "C2xC2", "C3"}),
             "square-free Aut set is {" + set_str(square_free) + "}");
    t.expect(prime_power == std::set<std::string>({"C2", "C4xC2"}),
             "prime-power Aut set is {" + set_str(prime_power) + "}");
    return t.finish("aut-classification", "graph-automorphism-group-classifications");
}

CheckResult check_p_component(int max_order_marking, int max_order_nilpotency) {
    Tally t;
    for (const auto& entry : build_catalog(std::max(max_order_marking, max_order_nilpotency))) {
        const int n = entry.group.order();
        SimpleGraph epg = build_bundle(entry.group).enhanced;

        if (n <= max_order_nilpotency && n >= 2) {
            NilpotencyReport rep = nilpotency_from_graph(epg);
            t.expect(rep.nilpotent == is_nilpotent(entry.group),
                     entry.name + ": nilpotency verdicts disagree");
        }

        if (n <= max_order_marking && n >= 2 && is_nilpotent(entry.group)) {
            for (auto [p, k] : factorize(n)) {
                (void)k;
                PComponent comp;
                try {
                    comp = p_component(epg, p);
                } catch (const Error& e) {
                    t.expect(false, entry.name + " p=" + std::to_string(p) + ": " + e.what());
                    continue;
                }
                // group side: elements of p-power order form the Sylow subgroup
                std::vector<int> gp;
                for (int x = 0; x < n; ++x)
                    if (largest_p_power_divisor(entry.group.element_order(x), p) ==
                        entry.group.element_order(x))
                        gp.push_back(x);
                SimpleGraph induced_gp = induced_subgraph(epg, gp).graph;
                FiniteGroup sylow = subgroup_from_elements(entry.group, gp, "sylow");
                SimpleGraph sylow_epg = build_bundle(sylow).enhanced;

                t.expect(are_isomorphic(comp.graph, induced_gp).isomorphic(),
                         entry.name + " p=" + std::to_string(p) +
                             ": marked component differs from the p-power induced subgraph");
                t.expect(are_isomorphic(induced_gp, sylow_epg).isomorphic(),
                         entry.name + " p=" + std::to_string(p) +
                             ": induced subgraph differs from the Sylow subgroup's graph");
            }
        }
    }
    return t.finish("p-component", "marking-algorithm-recovers-sylow-graph");
}

CheckResult check_pentagon() {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    FiniteGroup g = abelian({2, 2, 3, 3, 5, 5});
    auto witness = pentagon_witness(g);
    if (!witness) {
        t.expect(false, "no pentagon found in the order-900 graph");
    } else {
        SimpleGraph epg = build_bundle(g).enhanced;
        std::vector<int> cyc(witness->begin(), witness->end());
        t.expect(is_induced_cycle(epg, cyc), "pentagon witness is not an induced 5-cycle");
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    t.expect(elapsed.count() < 10, "pentagon verification exceeded 10 s");
    return t.finish("pentagon", "three-noncyclic-sylow-pentagon-witness");
}

CheckResult check_perfectness(int berge_max_order, int berge_length) {
    Tally t;

    // the order-900 pentagon
    {
        CheckResult pentagon = check_pentagon();
        t.checked += pentagon.sub_checked;
        t.failed += pentagon.sub_failed;
        if (!pentagon.pass && t.first_failure.empty())
            t.first_failure = pentagon.details;
    }

    for (const auto& entry : build_catalog(berge_max_order)) {
        const int n = entry.group.order();
        if (n < 2)
            continue;
        const bool nilpotent = is_nilpotent(entry.group);

        if (nilpotent && non_cyclic_sylow_count(entry.group) <= 2 && n <= berge_max_order) {
            SimpleGraph epg = build_bundle(entry.group).enhanced;
            try {
                auto hole = find_induced_odd_hole_or_antihole(epg, berge_length);
                t.expect(!hole.has_value(),
                         entry.name + ": unexpected odd hole/antihole of length <= " +
                             std::to_string(berge_length));
            } catch (const Error& e) {
                t.expect(false, entry.name + ": " + e.what());
            }
        }

        // weakly perfect coloring wherever the exponent is attained
        bool attained = false;
        const int expo = exponent(entry.group);
        for (int x = 0; x < n && !attained; ++x)
            attained = entry.group.element_order(x) == expo;
        if (attained) {
            try {
                Coloring c = weakly_perfect_coloring(entry.group);
                SimpleGraph epg = build_bundle(entry.group).enhanced;
                const int omega = omega_epg(entry.group);
                t.expect(is_proper_coloring(epg, c) && c.num_colors == omega,
                         entry.name + ": coloring invalid or not omega colors");
                if (n <= 64)
                    t.expect(chromatic_number_exact(epg) == omega,
                             entry.name + ": exact chromatic number differs from omega");
            } catch (const Error& e) {
                t.expect(false, entry.name + ": " + e.what());
            }
        }
    }
    return t.finish("perfectness", "pentagon-witness-berge-bound-and-omega-coloring");
}

CheckResult check_product_law_sweep(int max_product_order) {
    Tally t;
    auto catalog = build_catalog(max_product_order / 2);
    for (size_t i = 0; i < catalog.size(); ++i)
        for (size_t j = i; j < catalog.size(); ++j) {
            const auto& g = catalog[i].group;
            const auto& h = catalog[j].group;
            if (static_cast<long long>(g.order()) * h.order() > max_product_order)
                continue;
            const bool expect_equal = std::gcd(exponent(g), exponent(h)) == 1;
            ProductLawResult res = check_product_law(g, h);
            t.expect(res.equal == expect_equal,
                     catalog[i].name + " x " + catalog[j].name + ": equal=" +
                         std::to_string(res.equal) + " expected " + std::to_string(expect_equal));
            if (!res.equal)
                t.expect(res.witness.has_value(),
                         catalog[i].name + " x " + catalog[j].name + ": missing witness edge");
        }
    return t.finish("product-law", "strong-product-factorization-iff-coprime");
}

std::vector<std::string> all_check_ids() {
    return {"counting",       "abelian-invariants", "semitree",
            "iso-equivalence", "power-preserves-enhanced", "aut-classification",
            "p-component",    "pentagon",           "perfectness",
            "product-law"};
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CheckOptions& opt) {
    std::vector<std::string> selected = ids.empty() ? all_check_ids() : ids;
    std::set<std::string> want(selected.begin(), selected.end());
    for (const auto& id : want)
        if (std::find(all_check_ids().begin(), all_check_ids().end(), id) == all_check_ids().end())
            throw Error(Errc::BadParameter, "unknown check id: " + id);

    std::vector<CheckResult> out;
    auto maybe = [&](const std::string& id, auto&& fn) {
        if (!want.count(id))
            return;
        try {
            out.push_back(fn());
        } catch (const std::exception& e) { // a check error fails its check, not the run
            CheckResult r;
            r.id = id;
            r.pass = false;
            r.sub_failed = 1;
            r.details = e.what();
            out.push_back(std::move(r));
        }
    };
    const int m = opt.max_order;
    maybe("counting", [&] { return check_counting_formulas(std::min(m, 100)); });
    maybe("abelian-invariants", [&] { return check_abelian_reconstruction(std::min(m, 128)); });
    maybe("semitree", [&] { return check_semitree_characterization(); });
    maybe("iso-equivalence", [&] { return check_iso_equivalence(std::min(m, 64)); });
    maybe("power-preserves-enhanced", [&] { return check_power_preserves_enhanced(std::min(m, 32)); });
    maybe("aut-classification", [&] { return check_aut_classifications(); });
    maybe("p-component", [&] { return check_p_component(std::min(m, 100), std::min(m, 200)); });
    maybe("pentagon", [&] { return check_pentagon(); });
    maybe("perfectness", [&] { return check_perfectness(std::min(m, 200)); });
    maybe("product-law", [&] { return check_product_law_sweep(std::min(m, 144)); });
    return out;
}

} // namespace epglab
