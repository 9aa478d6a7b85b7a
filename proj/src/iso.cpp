#include "epglab/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace epglab {

namespace {

// Adjacency oracle shared by the undirected and directed searches.
struct GraphView {
    int n = 0;
    const SimpleGraph* ug = nullptr;
    const DiGraph* dg = nullptr;

    bool directed() const { return dg != nullptr; }
    bool edge(int u, int v) const { return ug ? ug->adjacent(u, v) : dg->has_arc(u, v); }
    const std::vector<int>& out(int v) const { return ug ? ug->neighbors(v) : dg->successors(v); }
    const std::vector<int>& in(int v) const { return ug ? ug->neighbors(v) : dg->predecessors(v); }
};

using Signature = std::vector<int>;

// One round of color refinement over both graphs with a shared signature
// dictionary; iterates until stable. Returns false as soon as the two color
// histograms diverge (no bijection can exist).
bool refine_pair(const GraphView& a, const GraphView& b,
                 std::vector<int>& ca, std::vector<int>& cb) {
    for (;;) {
        std::map<Signature, int> dict;
        auto signature = [&](const GraphView& g, const std::vector<int>& col, int v) {
            Signature s;
            s.push_back(col[v]);
            std::vector<int> outc;
            for (int u : g.out(v))
                outc.push_back(col[u]);
            std::sort(outc.begin(), outc.end());
            s.push_back(-1);
            s.insert(s.end(), outc.begin(), outc.end());
            if (g.directed()) {
                std::vector<int> inc;
                for (int u : g.in(v))
                    inc.push_back(col[u]);
                std::sort(inc.begin(), inc.end());
                s.push_back(-2);
                s.insert(s.end(), inc.begin(), inc.end());
            }
            return s;
        };
        std::vector<int> na(a.n), nb(b.n);
        for (int v = 0; v < a.n; ++v) {
            auto s = signature(a, ca, v);
            auto it = dict.try_emplace(s, static_cast<int>(dict.size())).first;
            na[v] = it->second;
        }
        for (int v = 0; v < b.n; ++v) {
            auto s = signature(b, cb, v);
            auto it = dict.find(s);
            if (it == dict.end())
                return false;
            nb[v] = it->second;
        }
        std::vector<int> hist_a(dict.size(), 0), hist_b(dict.size(), 0);
        for (int c : na)
            ++hist_a[c];
        for (int c : nb)
            ++hist_b[c];
        if (hist_a != hist_b)
            return false;
        bool stable = (na == ca && nb == cb);
        // Color ids may be renumbered even when the partition is stable;
        // detect stability by partition refinement instead.
        if (!stable) {
            auto partition_equal = [](const std::vector<int>& x, const std::vector<int>& y) {
                std::map<int, int> fwd, bwd;
                for (size_t i = 0; i < x.size(); ++i) {
                    auto f = fwd.try_emplace(x[i], y[i]);
                    if (!f.second && f.first->second != y[i])
                        return false;
                    auto g = bwd.try_emplace(y[i], x[i]);
                    if (!g.second && g.first->second != x[i])
                        return false;
                }
                return true;
            };
            stable = partition_equal(ca, na) && partition_equal(cb, nb);
        }
        ca = std::move(na);
        cb = std::move(nb);
        if (stable)
            return true;
    }
}

bool mapping_valid(const GraphView& a, const GraphView& b, const std::vector<int>& m) {
    std::vector<char> hit(b.n, 0);
    for (int v = 0; v < a.n; ++v) {
        if (m[v] < 0 || m[v] >= b.n || hit[m[v]])
            return false;
        hit[m[v]] = 1;
    }
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < a.n; ++v) {
            if (u == v)
                continue;
            if (a.edge(u, v) != b.edge(m[u], m[v]))
                return false;
        }
    return true;
}

struct IsoSearch {
    const GraphView& a;
    const GraphView& b;
    long long budget;

    std::optional<std::vector<int>> search(std::vector<int> ca, std::vector<int> cb) {
        if (--budget < 0)
            throw Error(Errc::SearchBudgetExceeded, "isomorphism search budget exhausted");
        if (!refine_pair(a, b, ca, cb))
            return std::nullopt;
        // pick the smallest non-singleton color class
        std::map<int, std::vector<int>> cells_a, cells_b;
        for (int v = 0; v < a.n; ++v)
            cells_a[ca[v]].push_back(v);
        for (int v = 0; v < b.n; ++v)
            cells_b[cb[v]].push_back(v);
        int target = -1;
        size_t target_size = 0;
        for (auto& [c, vs] : cells_a)
            if (vs.size() > 1 && (target < 0 || vs.size() < target_size)) {
                target = c;
                target_size = vs.size();
            }
        if (target < 0) {
            // discrete: colors give the bijection
            std::vector<int> m(a.n, -1);
            std::map<int, int> where_b;
            for (int v = 0; v < b.n; ++v)
                where_b[cb[v]] = v;
            for (int v = 0; v < a.n; ++v)
                m[v] = where_b[ca[v]];
            if (mapping_valid(a, b, m))
                return m;
            return std::nullopt;
        }
        const int u = cells_a[target][0];
        const int fresh = a.n + b.n + 7; // unused color id
        for (int v : cells_b[target]) {
            std::vector<int> na = ca, nb = cb;
            na[u] = fresh;
            nb[v] = fresh;
            if (auto r = search(std::move(na), std::move(nb)))
                return r;
        }
        return std::nullopt;
    }
};

IsoCertificate iso_generic(const GraphView& a, const GraphView& b, int cap, long long budget) {
    IsoCertificate cert;
    if (a.n != b.n) {
        cert.refutation = "vertex counts differ";
        return cert;
    }
    if (a.n > cap)
        throw Error(Errc::TooLarge, "isomorphism cap " + std::to_string(cap) + " exceeded");
    if (a.n == 0) {
        cert.mapping = std::vector<int>{};
        return cert;
    }
    std::vector<int> ca(a.n, 0), cb(b.n, 0);
    if (!refine_pair(a, b, ca, cb)) {
        cert.refutation = "refinement class mismatch (degree/neighborhood invariants differ)";
        return cert;
    }
    IsoSearch s{a, b, budget};
    if (auto m = s.search(ca, cb)) {
        cert.mapping = std::move(m);
        return cert;
    }
    cert.refutation = "search exhausted without a bijection";
    return cert;
}

// Orbit-stabilizer chain on one graph. `colors` may pre-individualize
// vertices; every automorphism found respects them.
struct AutChain {
    const GraphView& g;
    long long budget;
    BigUint order{1};
    std::map<long long, int> factorization;
    std::vector<std::vector<int>> generators;

    void factor_into(long long k) {
        for (long long p = 2; p * p <= k; ++p)
            while (k % p == 0) {
                ++factorization[p];
                k /= p;
            }
        if (k > 1)
            ++factorization[k];
    }

    std::optional<std::vector<int>> find_mapping(const std::vector<int>& base_colors, int u, int v) {
        std::vector<int> ca = base_colors, cb = base_colors;
        const int fresh = 2 * g.n + 9;
        ca[u] = fresh;
        cb[v] = fresh;
        IsoSearch s{g, g, budget};
        auto r = s.search(std::move(ca), std::move(cb));
        budget = s.budget;
        return r;
    }

    void run(std::vector<int> colors) {
        for (;;) {
            std::vector<int> cb = colors;
            refine_pair(g, g, colors, cb);
            std::map<int, std::vector<int>> cells;
            for (int v = 0; v < g.n; ++v)
                cells[colors[v]].push_back(v);
            int target = -1;
            size_t target_size = 0;
            for (auto& [c, vs] : cells)
                if (vs.size() > 1 && (target < 0 || vs.size() < target_size)) {
                    target = c;
                    target_size = vs.size();
                }
            if (target < 0)
                return;
            const int u = cells[target][0];
            long long orbit = 1;
            for (size_t i = 1; i < cells[target].size(); ++i) {
                if (auto m = find_mapping(colors, u, cells[target][i])) {
                    ++orbit;
                    generators.push_back(std::move(*m));
                }
            }
            order *= static_cast<std::uint64_t>(orbit);
            factor_into(orbit);
            colors[u] = g.n + 1 + static_cast<int>(generators.size()); // individualize u, continue with its stabilizer
        }
    }
};

bool permutations_commute(const std::vector<int>& p, const std::vector<int>& q) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[q[i]] != q[p[i]])
            return false;
    return true;
}

bool generators_abelian(const std::vector<std::vector<int>>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!permutations_commute(gens[i], gens[j]))
                return false;
    return true;
}

// Closed-twin classes (equal closed neighborhoods); each class of size >= 2
// is a clique and between-class adjacency is all-or-nothing.
std::vector<std::vector<int>> closed_twin_classes(const SimpleGraph& g) {
    std::map<std::vector<std::uint64_t>, std::vector<int>> by_key;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::uint64_t> key(g.row_bits(v), g.row_bits(v) + g.words());
        key[v >> 6] |= 1ULL << (v & 63);
        by_key[key].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [k, vs] : by_key)
        classes.push_back(vs);
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    return classes;
}

} // namespace

IsoCertificate are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, int cap,
                              long long budget) {
    GraphView va{a.vertex_count(), &a, nullptr};
    GraphView vb{b.vertex_count(), &b, nullptr};
    return iso_generic(va, vb, cap, budget);
}

IsoCertificate digraph_isomorphic(const DiGraph& a, const DiGraph& b, int cap,
                                  long long budget) {
    GraphView va{a.vertex_count(), nullptr, &a};
    GraphView vb{b.vertex_count(), nullptr, &b};
    return iso_generic(va, vb, cap, budget);
}

AutGroupSummary automorphism_summary(const SimpleGraph& g, int cap, long long budget) {
    const int n = g.vertex_count();
    if (n > cap)
        throw Error(Errc::TooLarge, "automorphism cap " + std::to_string(cap) + " exceeded");
    AutGroupSummary out;
    out.order = BigUint(1);
    if (n == 0) {
        out.abelian = true;
        return out;
    }

    // Quotient by closed twins: Aut factors as (product of class symmetric
    // groups) extended by the size-colored quotient's automorphisms.
    const auto classes = closed_twin_classes(g);
    std::vector<int> class_of(n);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c])
            class_of[v] = static_cast<int>(c);

    SimpleGraph quotient(static_cast<int>(classes.size()));
    for (size_t c = 0; c < classes.size(); ++c)
        for (size_t d = c + 1; d < classes.size(); ++d)
            if (g.adjacent(classes[c][0], classes[d][0]))
                quotient.add_edge(static_cast<int>(c), static_cast<int>(d));

    // within-class symmetric groups: adjacent transpositions, |class|! each
    for (const auto& cls : classes) {
        for (size_t i = 0; i + 1 < cls.size(); ++i) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[cls[i]], perm[cls[i + 1]]);
            out.generators.push_back(std::move(perm));
        }
        for (long long k = 2; k <= static_cast<long long>(cls.size()); ++k) {
            out.order *= static_cast<std::uint64_t>(k);
            for (long long p = 2, kk = k; p <= kk; ++p)
                while (kk % p == 0) {
                    ++out.order_factorization[p];
                    kk /= p;
                }
        }
    }

    // quotient automorphisms, colored by class size
    std::vector<int> colors(quotient.vertex_count());
    std::map<size_t, int> size_color;
    for (size_t c = 0; c < classes.size(); ++c) {
        auto it = size_color.try_emplace(classes[c].size(), static_cast<int>(size_color.size())).first;
        colors[c] = it->second;
    }
    GraphView qv{quotient.vertex_count(), &quotient, nullptr};
    AutChain chain{qv, budget, BigUint(1), {}, {}};
    chain.run(colors);

    for (const auto& qperm : chain.generators) {
        // lift: map class c onto class qperm[c] in sorted order
        std::vector<int> perm(n);
        for (size_t c = 0; c < classes.size(); ++c) {
            const auto& src = classes[c];
            const auto& dst = classes[qperm[c]];
            for (size_t i = 0; i < src.size(); ++i)
                perm[src[i]] = dst[i];
        }
        out.generators.push_back(std::move(perm));
    }
    // fold in the quotient order (= product of its factorization)
    for (auto [p, e] : chain.factorization) {
        for (int i = 0; i < e; ++i)
            out.order *= static_cast<std::uint64_t>(p);
        out.order_factorization[p] += e;
    }

    for (const auto& perm : out.generators) {
        GraphView gv{n, &g, nullptr};
        if (!mapping_valid(gv, gv, perm))
            throw Error(Errc::ConstructionFailed, "generator is not an automorphism");
    }
    out.abelian = generators_abelian(out.generators);
    return out;
}

AutGroupSummary digraph_automorphism_summary(const DiGraph& g, int cap, long long budget) {
    const int n = g.vertex_count();
    if (n > cap)
        throw Error(Errc::TooLarge, "automorphism cap " + std::to_string(cap) + " exceeded");
    AutGroupSummary out;
    out.order = BigUint(1);
    if (n == 0) {
        out.abelian = true;
        return out;
    }
    GraphView gv{n, nullptr, &g};
    AutChain chain{gv, budget, BigUint(1), {}, {}};
    chain.run(std::vector<int>(n, 0));
    out.generators = chain.generators;
    out.order = chain.order;
    out.order_factorization = chain.factorization;
    for (const auto& perm : out.generators)
        if (!mapping_valid(gv, gv, perm))
            throw Error(Errc::ConstructionFailed, "generator is not an automorphism");
    out.abelian = generators_abelian(out.generators);
    return out;
}

std::vector<int> approx_classes_of(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::vector<ElementId>> gen_set(n);
    for (int x = 0; x < n; ++x)
        gen_set[x] = cyclic_subgroup(g, x).members;
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0)
            continue;
        cls[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (cls[y] < 0 && g.element_order(y) == g.element_order(x) && gen_set[y] == gen_set[x])
                cls[y] = next;
        ++next;
    }
    return cls;
}

std::vector<std::vector<int>> group_automorphisms(const FiniteGroup& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw Error(Errc::TooLarge, "group automorphism cap " + std::to_string(cap) + " exceeded");

    // small generating set, greedily
    std::vector<int> gens;
    std::vector<char> in_closure(n, 0);
    in_closure[0] = 1;
    int closure_size = 1;
    auto close_over = [&](std::vector<char>& member, int& size) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a)
                if (member[a])
                    for (int b = 0; b < n; ++b)
                        if (member[b] && !member[g.mul(a, b)]) {
                            member[g.mul(a, b)] = 1;
                            ++size;
                            grew = true;
                        }
        }
    };
    while (closure_size < n) {
        int pick = -1;
        for (int x = 0; x < n; ++x)
            if (!in_closure[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        in_closure[pick] = 1;
        ++closure_size;
        close_over(in_closure, closure_size);
    }

    // express every element as a fixed word in the generators (BFS)
    std::vector<std::pair<int, int>> word(n, {-1, -1}); // (previous element, generator index)
    std::vector<int> bfs{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t head = 0; head < bfs.size(); ++head) {
        int x = bfs[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.mul(x, gens[gi]);
            if (!seen[y]) {
                seen[y] = 1;
                word[y] = {x, static_cast<int>(gi)};
                bfs.push_back(y);
            }
        }
    }

    std::vector<std::vector<int>> images_for(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int y = 0; y < n; ++y)
            if (g.element_order(y) == g.element_order(gens[gi]))
                images_for[gi].push_back(y);

    std::vector<std::vector<int>> autos;
    std::vector<int> chosen(gens.size(), -1);
    std::vector<int> phi(n, -1);

    auto build_and_check = [&]() {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = 0;
        for (int x : bfs) {
            if (x == 0)
                continue;
            auto [prev, gi] = word[x];
            phi[x] = g.mul(phi[prev], chosen[gi]);
        }
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            if (phi[x] < 0 || hit[phi[x]])
                return;
            hit[phi[x]] = 1;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b]))
                    return;
        autos.push_back(phi);
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            build_and_check();
            return;
        }
        for (int img : images_for[gi]) {
            chosen[gi] = img;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
    return autos;
}

std::vector<int> epg_iso_to_directed_iso(const FiniteGroup& g, const FiniteGroup& h,
                                         const std::vector<int>& psi) {
    const int n = g.order();
    if (h.order() != n || static_cast<int>(psi.size()) != n)
        throw Error(Errc::ConstructionFailed, "psi is not a bijection between equal orders");

    GroupGraphBundle bg = build_bundle(g);
    GroupGraphBundle bh = build_bundle(h);
    {
        GraphView va{n, &bg.enhanced, nullptr}, vb{n, &bh.enhanced, nullptr};
        if (!mapping_valid(va, vb, psi))
            throw Error(Errc::ConstructionFailed, "psi does not preserve enhanced adjacency");
    }

    // generator classes on both sides
    std::vector<int> acg = approx_classes_of(g), ach = approx_classes_of(h);
    std::map<int, std::vector<int>> classes_g, classes_h;
    for (int x = 0; x < n; ++x) {
        classes_g[acg[x]].push_back(x);
        classes_h[ach[x]].push_back(x);
    }

    std::vector<int> theta(n, -1);
    for (auto& [cid, members] : classes_g) {
        const int m = g.element_order(members[0]);
        // image of this class's closed-neighborhood class under psi
        std::set<int> image;
        {
            auto cn = bg.enhanced.closed_neighborhood(members[0]);
            // the eeq class of x: vertices with the same closed neighborhood
            for (int y = 0; y < n; ++y)
                if (bg.enhanced.closed_neighborhood(y) == cn)
                    image.insert(psi[y]);
        }
        // elements of order m inside the corresponding eeq class of h
        std::vector<int> targets;
        for (int y : image)
            if (h.element_order(y) == m)
                targets.push_back(y);
        if (targets.size() != members.size())
            throw Error(Errc::ConstructionFailed,
                        "no matching generator class of order " + std::to_string(m));
        for (size_t i = 1; i < targets.size(); ++i)
            if (ach[targets[i]] != ach[targets[0]])
                throw Error(Errc::ConstructionFailed, "order-" + std::to_string(m) +
                                                          " elements split across generator classes");
        std::sort(targets.begin(), targets.end());
        for (size_t i = 0; i < members.size(); ++i)
            theta[members[i]] = targets[i];
    }

    GraphView va{n, nullptr, &bg.directed_power}, vb{n, nullptr, &bh.directed_power};
    if (!mapping_valid(va, vb, theta))
        throw Error(Errc::ConstructionFailed, "constructed map is not a digraph isomorphism");
    return theta;
}

bool power_iso_preserves_enhanced(const FiniteGroup& g, const FiniteGroup& h,
                                  const std::vector<int>& psi) {
    GroupGraphBundle bg = build_bundle(g);
    GroupGraphBundle bh = build_bundle(h);
    const int n = g.order();
    GraphView pa{n, &bg.power, nullptr}, pb{n, &bh.power, nullptr};
    if (!mapping_valid(pa, pb, psi))
        throw Error(Errc::BadParameter, "psi is not a power-graph isomorphism");
    GraphView ea{n, &bg.enhanced, nullptr}, eb{n, &bh.enhanced, nullptr};
    return mapping_valid(ea, eb, psi);
}

DiGraph recover_directed_power(const SimpleGraph& power, const std::vector<int>& approx_class_of,
                               int identity_vertex) {
    const int n = power.vertex_count();
    std::vector<long long> class_size(n, 0);
    for (int v = 0; v < n; ++v)
        ++class_size[approx_class_of[v]];

    // condition (2) helper: some singleton-class vertex that is not universal
    // and adjacent to x
    auto has_witness = [&](int x) {
        for (int z : power.neighbors(x)) {
            if (z == identity_vertex)
                continue;
            if (class_size[approx_class_of[z]] == 1 && power.degree(z) != n - 1)
                return true;
        }
        return false;
    };

    DiGraph out(n);
    for (int x = 0; x < n; ++x) {
        if (x == identity_vertex)
            continue;
        out.add_arc(x, identity_vertex);
        for (int y = 0; y < n; ++y) {
            if (y == x || y == identity_vertex)
                continue;
            const long long sx = class_size[approx_class_of[x]];
            const long long sy = class_size[approx_class_of[y]];
            bool arc = false;
            if (approx_class_of[x] == approx_class_of[y])
                arc = true;
            else if (power.adjacent(x, y) && sy < sx)
                arc = true;
            else if (power.adjacent(x, y) && sy == sx && has_witness(x))
                arc = true;
            if (arc)
                out.add_arc(x, y);
        }
    }
    return out;
}

AutInclusionReport aut_inclusion_check(const FiniteGroup& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw Error(Errc::TooLarge, "aut inclusion cap " + std::to_string(cap) + " exceeded");
    GroupGraphBundle b = build_bundle(g);

    AutInclusionReport rep;
    auto group_autos = group_automorphisms(g, cap);
    rep.group_aut_order = BigUint(group_autos.size());

    AutGroupSummary dpg = digraph_automorphism_summary(b.directed_power, std::max(cap, n));
    AutGroupSummary pg = automorphism_summary(b.power, std::max(cap, n));
    AutGroupSummary epg = automorphism_summary(b.enhanced, std::max(cap, n));
    rep.dpg_aut_order = dpg.order;
    rep.pg_aut_order = pg.order;
    rep.epg_aut_order = epg.order;

    GraphView dv{n, nullptr, &b.directed_power};
    GraphView pv{n, &b.power, nullptr};
    GraphView ev{n, &b.enhanced, nullptr};

    rep.chain_holds = true;
    for (const auto& phi : group_autos)
        if (!mapping_valid(dv, dv, phi))
            rep.chain_holds = false;
    for (const auto& phi : dpg.generators)
        if (!mapping_valid(pv, pv, phi))
            rep.chain_holds = false;
    for (const auto& phi : pg.generators)
        if (!mapping_valid(ev, ev, phi))
            rep.chain_holds = false;
    return rep;
}

} // namespace epglab
