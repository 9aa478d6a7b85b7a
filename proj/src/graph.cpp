#include "epglab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace epglab {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64), adj_(n) {
    if (n < 0)
        throw Error(Errc::BadParameter, "negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw Error(Errc::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw Error(Errc::InvalidInput, "self-loop at " + std::to_string(u));
    if (adjacent(u, v))
        return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++edges_;
}

std::vector<int> SimpleGraph::closed_neighborhood(int v) const {
    if (v < 0 || v >= n_)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    std::vector<int> out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edges_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

DiGraph::DiGraph(int n) : n_(n), words_((n + 63) / 64), succ_(n), pred_(n) {
    if (n < 0)
        throw Error(Errc::BadParameter, "negative vertex count");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void DiGraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw Error(Errc::VertexOutOfRange,
                    "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw Error(Errc::InvalidInput, "self-loop at " + std::to_string(u));
    if (has_arc(u, v))
        return;
    succ_[u].insert(std::lower_bound(succ_[u].begin(), succ_[u].end(), v), v);
    pred_[v].insert(std::lower_bound(pred_[v].begin(), pred_[v].end(), u), u);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    ++arcs_;
}

std::vector<std::pair<int, int>> DiGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(arcs_));
    for (int u = 0; u < n_; ++u)
        for (int v : succ_[u])
            out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    InducedSubgraph out{SimpleGraph(static_cast<int>(vertices.size())), vertices};
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

SimpleGraph strong_product(const SimpleGraph& gamma, const SimpleGraph& delta, int vertex_cap) {
    const long long n = static_cast<long long>(gamma.vertex_count()) * delta.vertex_count();
    if (n > vertex_cap)
        throw Error(Errc::ProductTooLarge,
                    "product has " + std::to_string(n) + " vertices, cap " + std::to_string(vertex_cap));
    const int nd = delta.vertex_count();
    SimpleGraph out(static_cast<int>(n));
    for (int x1 = 0; x1 < gamma.vertex_count(); ++x1)
        for (int y1 = 0; y1 < nd; ++y1)
            for (int x2 = x1; x2 < gamma.vertex_count(); ++x2)
                for (int y2 = 0; y2 < nd; ++y2) {
                    if (x1 == x2 && y2 <= y1)
                        continue;
                    bool adj = (x1 == x2 && delta.adjacent(y1, y2)) ||
                               (gamma.adjacent(x1, x2) && y1 == y2) ||
                               (gamma.adjacent(x1, x2) && delta.adjacent(y1, y2));
                    if (adj)
                        out.add_edge(x1 * nd + y1, x2 * nd + y2);
                }
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool mask_empty(const Mask& m) {
    for (auto w : m)
        if (w)
            return false;
    return true;
}

struct BronKerbosch {
    const SimpleGraph& g;
    int words;
    std::vector<Mask> nbr;
    std::vector<std::vector<int>> out;
    std::vector<int> current;

    explicit BronKerbosch(const SimpleGraph& graph)
        : g(graph), words(graph.words()) {
        nbr.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            nbr[v].assign(g.row_bits(v), g.row_bits(v) + words);
    }

    void run() {
        Mask p(words, 0), x(words, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            p[v >> 6] |= 1ULL << (v & 63);
        expand(p, x);
    }

    void expand(Mask& p, Mask& x) {
        if (mask_empty(p) && mask_empty(x)) {
            std::vector<int> clique = current;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        // pivot: vertex of P u X with most neighbors in P
        int pivot = -1, best = -1;
        for (int pass = 0; pass < 2; ++pass) {
            const Mask& src = pass == 0 ? p : x;
            for (int w = 0; w < words; ++w) {
                std::uint64_t bitsw = src[w];
                while (bitsw) {
                    int v = (w << 6) + __builtin_ctzll(bitsw);
                    bitsw &= bitsw - 1;
                    int cnt = 0;
                    for (int ww = 0; ww < words; ++ww)
                        cnt += __builtin_popcountll(p[ww] & nbr[v][ww]);
                    if (cnt > best) {
                        best = cnt;
                        pivot = v;
                    }
                }
            }
        }
        Mask candidates(words);
        for (int w = 0; w < words; ++w)
            candidates[w] = p[w] & ~nbr[pivot][w];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bitsw = candidates[w];
            while (bitsw) {
                int v = (w << 6) + __builtin_ctzll(bitsw);
                bitsw &= bitsw - 1;
                Mask np(words), nx(words);
                for (int ww = 0; ww < words; ++ww) {
                    np[ww] = p[ww] & nbr[v][ww];
                    nx[ww] = x[ww] & nbr[v][ww];
                }
                current.push_back(v);
                expand(np, nx);
                current.pop_back();
                p[w] &= ~(1ULL << (v & 63));
                x[w] |= 1ULL << (v & 63);
            }
        }
    }
};

} // namespace

std::vector<std::vector<int>> maximal_cliques_generic(const SimpleGraph& g) {
    if (g.vertex_count() == 0)
        return {};
    BronKerbosch bk(g);
    bk.run();
    std::sort(bk.out.begin(), bk.out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return bk.out;
}

int clique_number_generic(const SimpleGraph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques_generic(g))
        best = std::max(best, static_cast<int>(c.size()));
    return best;
}

namespace {

struct ColoringSearch {
    const SimpleGraph& g;
    int n;
    int best;
    std::vector<int> colors;

    bool feasible(int v, int c) const {
        for (int u : g.neighbors(v))
            if (colors[u] == c)
                return false;
        return true;
    }

    // DSATUR order: next uncolored vertex with most distinct neighbor colors.
    int select() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        std::vector<char> used;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0)
                continue;
            used.assign(best + 1, 0);
            int sat = 0;
            for (int u : g.neighbors(v))
                if (colors[u] >= 0 && !used[colors[u]]) {
                    used[colors[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void search(int colored, int used_colors, int lower) {
        if (used_colors >= best)
            return;
        if (colored == n) {
            best = used_colors;
            return;
        }
        int v = select();
        for (int c = 0; c < used_colors && best > lower; ++c) {
            if (!feasible(v, c))
                continue;
            colors[v] = c;
            search(colored + 1, used_colors, lower);
            colors[v] = -1;
        }
        if (used_colors + 1 < best) {
            colors[v] = used_colors;
            search(colored + 1, used_colors + 1, lower);
            colors[v] = -1;
        }
    }
};

} // namespace

int chromatic_number_exact(const SimpleGraph& g, int cap, bool force) {
    const int n = g.vertex_count();
    if (n > cap && !force)
        throw Error(Errc::TooLargeForExactSearch,
                    std::to_string(n) + " vertices exceed coloring cap " + std::to_string(cap));
    if (n == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    const int omega = clique_number_generic(g);
    ColoringSearch cs{g, n, n + 1, std::vector<int>(n, -1)};
    cs.search(0, 0, omega);
    return std::max(cs.best, omega);
}

namespace {

// Keeps one representative per class of equal neighborhoods. Two vertices of
// an induced cycle of length >= 5 never share an open or a closed
// neighborhood, and replacing a dropped vertex by its class representative
// maps any such cycle to another one, so collapsing preserves odd holes
// exactly. Open and closed twins are collapsed in separate passes (mixing
// them in one substitution step could send two cycle vertices to the same
// representative); passes repeat until no vertex drops.
std::vector<int> hole_quotient_vertices(const SimpleGraph& g) {
    std::vector<int> keep(g.vertex_count());
    std::iota(keep.begin(), keep.end(), 0);
    SimpleGraph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int closed_pass = 0; closed_pass < 2; ++closed_pass) {
            std::map<std::vector<std::uint64_t>, int> seen;
            std::vector<int> reps;
            for (int v = 0; v < cur.vertex_count(); ++v) {
                std::vector<std::uint64_t> key(cur.row_bits(v), cur.row_bits(v) + cur.words());
                if (closed_pass)
                    key[v >> 6] |= 1ULL << (v & 63);
                if (seen.try_emplace(key, v).second)
                    reps.push_back(v);
                else
                    changed = true;
            }
            if (static_cast<int>(reps.size()) < cur.vertex_count()) {
                InducedSubgraph sub = induced_subgraph(cur, reps);
                std::vector<int> next;
                next.reserve(sub.vertices.size());
                for (int local : sub.vertices)
                    next.push_back(keep[local]);
                keep = std::move(next);
                cur = std::move(sub.graph);
            }
        }
    }
    return keep;
}

struct HoleSearch {
    const SimpleGraph& g;
    int max_len;
    long long budget;
    std::vector<int> path;
    std::vector<std::uint64_t> forbidden; // neighbors of interior path vertices

    std::optional<std::vector<int>> run() {
        const int n = g.vertex_count();
        for (int s = 0; s < n; ++s) {
            path.assign(1, s);
            forbidden.assign(g.words(), 0);
            if (auto r = extend(s))
                return r;
        }
        return std::nullopt;
    }

    // path[0]=s is the least vertex of the cycle; consecutive path vertices
    // are adjacent; vertices other than s and the tip have fed their
    // neighborhoods into `forbidden`, so the path stays induced. A vertex
    // adjacent to s may only enter at position 1 or as the closing vertex.
    std::optional<std::vector<int>> extend(int s) {
        if (--budget < 0)
            throw Error(Errc::SearchBudgetExceeded, "odd hole search budget exhausted");
        const int last = path.back();
        const int len = static_cast<int>(path.size());
        if (len >= 5 && (len & 1) && g.adjacent(last, s))
            return path;
        if (len == max_len)
            return std::nullopt;
        for (int v : g.neighbors(last)) {
            if (v <= s)
                continue; // canonical: s is the smallest cycle vertex
            if ((forbidden[v >> 6] >> (v & 63)) & 1u)
                continue;
            if (len >= 2 && g.adjacent(v, s) && !(len + 1 >= 5 && ((len + 1) & 1)))
                continue; // would be a chord to s at this position
            bool on_path = false;
            for (int u : path)
                if (u == v) {
                    on_path = true;
                    break;
                }
            if (on_path)
                continue;
            std::vector<std::uint64_t> saved = forbidden;
            if (len >= 2) { // the tip becomes interior; s never does
                for (int w = 0; w < g.words(); ++w)
                    forbidden[w] |= g.row_bits(last)[w];
                forbidden[(last >> 6)] |= 1ULL << (last & 63);
            }
            path.push_back(v);
            if (auto r = extend(s))
                return r;
            path.pop_back();
            forbidden = std::move(saved);
        }
        return std::nullopt;
    }
};

std::optional<std::vector<int>> odd_hole(const SimpleGraph& g, int max_len, long long* budget) {
    std::vector<int> keep = hole_quotient_vertices(g);
    InducedSubgraph q = induced_subgraph(g, keep);
    HoleSearch hs{q.graph, max_len, *budget, {}, {}};
    auto found = hs.run();
    *budget = hs.budget;
    if (!found)
        return std::nullopt;
    std::vector<int> mapped;
    mapped.reserve(found->size());
    for (int v : *found)
        mapped.push_back(q.vertices[v]);
    return mapped;
}

} // namespace

std::optional<HoleWitness> find_induced_odd_hole_or_antihole(const SimpleGraph& g, int max_len,
                                                             int vertex_cap,
                                                             long long node_budget) {
    if (max_len < 5 || max_len % 2 == 0)
        throw Error(Errc::BadParameter, "max_len must be odd and >= 5");
    if (g.vertex_count() > vertex_cap)
        throw Error(Errc::TooLargeForExactSearch,
                    std::to_string(g.vertex_count()) + " vertices exceed hole-search cap " +
                        std::to_string(vertex_cap));
    long long budget = node_budget;
    if (auto hole = odd_hole(g, max_len, &budget))
        return HoleWitness{*hole, false};
    if (auto anti = odd_hole(complement(g), max_len, &budget))
        return HoleWitness{*anti, true};
    return std::nullopt;
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3)
        return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

} // namespace epglab
