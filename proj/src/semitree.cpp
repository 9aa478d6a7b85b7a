#include "epglab/semitree.hpp"

#include <algorithm>
#include <map>

#include "epglab/cliques.hpp"
#include "epglab/group.hpp"
#include "epglab/iso.hpp"

namespace epglab {

namespace {

void check_tuple(const std::vector<int>& b, const std::vector<int>& a) {
    if (b.size() != a.size())
        throw Error(Errc::TupleOutOfRange, "tuple dimensions differ");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1)
            throw Error(Errc::TupleOutOfRange, "base tuple entries must be positive");
        if (b[i] < 0 || b[i] > a[i])
            throw Error(Errc::TupleOutOfRange, "tuple entry outside [0, a_i]");
    }
}

long long ipow(long long p, int e) {
    long long r = 1;
    while (e-- > 0)
        r *= p;
    return r;
}

} // namespace

int tuple_width(const std::vector<int>& b, const std::vector<int>& a) {
    check_tuple(b, a);
    int w = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != a[i])
            ++w;
    return w;
}

int tuple_height(const std::vector<int>& b, const std::vector<int>& a) {
    check_tuple(b, a);
    int h = 0;
    for (size_t i = 0; i < a.size(); ++i)
        h = std::max(h, a[i] - b[i]);
    return h;
}

std::vector<std::vector<int>> tuple_successors(const std::vector<int>& b,
                                               const std::vector<int>& a) {
    check_tuple(b, a);
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        if (b[i] == 0 && b[i] != a[i])
            return {}; // leaf label: the decrement rule would go below zero
    bool any_zero = false;
    for (size_t i = 0; i < n; ++i)
        if (b[i] == 0)
            any_zero = true;
    if (any_zero)
        return {}; // leaves have no successors

    std::vector<size_t> free_coords;
    std::vector<int> base(n);
    for (size_t i = 0; i < n; ++i) {
        if (b[i] != a[i])
            base[i] = b[i] - 1;
        else {
            base[i] = a[i];
            free_coords.push_back(i);
        }
    }
    std::vector<std::vector<int>> out;
    const size_t choices = static_cast<size_t>(1) << free_coords.size();
    for (size_t mask = 0; mask < choices; ++mask) {
        std::vector<int> c = base;
        for (size_t t = 0; t < free_coords.size(); ++t)
            if ((mask >> t) & 1)
                c[free_coords[t]] = a[free_coords[t]] - 1;
        if (c != a)
            out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RootedPTree build_rooted_p_tree(long long p, const std::vector<int>& a, long long vertex_cap) {
    if (p < 2)
        throw Error(Errc::BadParameter, "p must be at least 2");
    if (a.empty())
        throw Error(Errc::BadParameter, "tuple must be nonempty");
    check_tuple(a, a);
    int total = 0;
    for (int ai : a)
        total += ai;
    long long predicted = 1;
    for (int i = 0; i < total; ++i) {
        predicted *= p;
        if (predicted > vertex_cap)
            throw Error(Errc::TooLarge, "semitree would exceed the vertex cap");
    }

    const int n = static_cast<int>(a.size());
    RootedPTree tree;
    tree.p = p;
    tree.a = a;
    tree.nodes.push_back({a, -1, 0});

    for (size_t head = 0; head < tree.nodes.size(); ++head) {
        const std::vector<int> label = tree.nodes[head].label; // copy: nodes may reallocate
        const int height = tree.nodes[head].height;
        bool has_zero = false;
        for (int c : label)
            if (c == 0)
                has_zero = true;
        if (has_zero)
            continue; // leaves
        const bool is_root = (head == 0);
        const int w_label = tuple_width(label, a);
        for (const auto& succ : tuple_successors(label, a)) {
            const int w_succ = tuple_width(succ, a);
            long long multiplicity;
            if (is_root)
                multiplicity = ipow(p - 1, w_succ - 1);
            else
                multiplicity = ipow(p, w_label - 1) * ipow(p - 1, w_succ - w_label);
            for (long long t = 0; t < multiplicity; ++t)
                tree.nodes.push_back({succ, static_cast<int>(head), height + 1});
        }
    }

    // re-verify the child-count rules on the finished tree
    std::vector<long long> child_count(tree.nodes.size(), 0);
    std::vector<std::map<std::vector<int>, long long>> children_by_label(tree.nodes.size());
    for (size_t i = 1; i < tree.nodes.size(); ++i) {
        ++child_count[tree.nodes[i].parent];
        ++children_by_label[tree.nodes[i].parent][tree.nodes[i].label];
    }
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& node = tree.nodes[i];
        bool has_zero = false;
        for (int c : node.label)
            if (c == 0)
                has_zero = true;
        if (i == 0) {
            if (child_count[i] != (ipow(p, n) - 1) / (p - 1))
                throw Error(Errc::ConstructionFailed, "root child count mismatch");
            for (const auto& succ : tuple_successors(a, a))
                if (children_by_label[i][succ] != ipow(p - 1, tuple_width(succ, a) - 1))
                    throw Error(Errc::ConstructionFailed, "root per-label child count mismatch");
        } else if (has_zero) {
            if (child_count[i] != 0)
                throw Error(Errc::ConstructionFailed, "leaf has children");
        } else {
            if (child_count[i] != ipow(p, n - 1))
                throw Error(Errc::ConstructionFailed, "inner child count mismatch");
            const int w = tuple_width(node.label, a);
            for (const auto& succ : tuple_successors(node.label, a))
                if (children_by_label[i][succ] != ipow(p, w - 1) * ipow(p - 1, tuple_width(succ, a) - w))
                    throw Error(Errc::ConstructionFailed, "inner per-label child count mismatch");
        }
    }
    return tree;
}

PSemitree build_p_semitree(long long p, const std::vector<int>& a, long long vertex_cap) {
    PSemitree st;
    st.tree = build_rooted_p_tree(p, a, vertex_cap);
    const auto& nodes = st.tree.nodes;

    long long total = 0;
    st.blocks.resize(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        const long long size = nodes[i].height == 0 ? 1 : euler_phi(ipow(p, nodes[i].height));
        for (long long t = 0; t < size; ++t)
            st.blocks[i].push_back(static_cast<int>(total + t));
        total += size;
    }
    int expected_exp = 0;
    for (int ai : a)
        expected_exp += ai;
    if (total != ipow(p, expected_exp))
        throw Error(Errc::ConstructionFailed, "semitree vertex count is not p^(sum a_i)");

    st.graph = SimpleGraph(static_cast<int>(total));
    // ancestor chain per node
    std::vector<std::vector<int>> ancestors(nodes.size());
    for (size_t i = 1; i < nodes.size(); ++i) {
        ancestors[i] = ancestors[nodes[i].parent];
        ancestors[i].push_back(nodes[i].parent);
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        const auto& block = st.blocks[i];
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                st.graph.add_edge(block[x], block[y]);
        for (int anc : ancestors[i])
            for (int u : st.blocks[anc])
                for (int v : block)
                    st.graph.add_edge(u, v);
    }
    return st;
}

std::optional<PTuple> is_p_semitree(const SimpleGraph& g, long long p, long long vertex_cap) {
    const long long n = g.vertex_count();
    if (n < 1 || n > vertex_cap)
        throw Error(Errc::TooLarge, "graph outside semitree recognition range");
    long long v = n;
    int log = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++log;
    }
    if (v != 1)
        return std::nullopt; // vertex count is not a power of p

    std::vector<int> tuple;
    try {
        auto invariants = abelian_invariants_from_graph(g);
        auto it = invariants.find(p);
        if (log > 0 && it == invariants.end())
            return std::nullopt;
        if (it != invariants.end())
            for (auto [exp, mult] : it->second)
                for (int t = 0; t < mult; ++t)
                    tuple.push_back(exp);
    } catch (const Error& e) {
        if (e.code() == Errc::NotAbelianEpg || e.code() == Errc::NotTransitive)
            return std::nullopt;
        throw;
    }
    if (tuple.empty())
        return std::nullopt;
    std::sort(tuple.rbegin(), tuple.rend());

    PSemitree st = build_p_semitree(p, tuple, vertex_cap);
    if (are_isomorphic(g, st.graph).isomorphic())
        return PTuple{p, tuple};
    return std::nullopt;
}

} // namespace epglab
