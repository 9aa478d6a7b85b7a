#ifndef EPGLAB_SEMITREE_HPP
#define EPGLAB_SEMITREE_HPP

#include <optional>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

inline constexpr long long kDefaultSemitreeVertexCap = 4096;

struct PTuple {
    long long p = 2;
    std::vector<int> a; // positive entries, kept sorted descending

    bool operator==(const PTuple& o) const { return p == o.p && a == o.a; }
};

/// Number of coordinates where b differs from a.
int tuple_width(const std::vector<int>& b, const std::vector<int>& a);

/// max(a_i - b_i).
int tuple_height(const std::vector<int>& b, const std::vector<int>& a);

/// Successor labels of b below a: decrement every coordinate already below
/// a_i, keep or decrement the others, excluding a itself. Tuples with a zero
/// coordinate are leaves and have no successors.
std::vector<std::vector<int>> tuple_successors(const std::vector<int>& b,
                                               const std::vector<int>& a);

struct RootedPTree {
    struct Node {
        std::vector<int> label;
        int parent = -1;
        int height = 0;
    };
    long long p = 2;
    std::vector<int> a;
    std::vector<Node> nodes; // nodes[0] is the root, breadth-first order
};

/// Builds the labeled rooted tree for (p, a); the child-count rules are
/// re-verified on the finished tree.
RootedPTree build_rooted_p_tree(long long p, const std::vector<int>& a,
                                long long vertex_cap = kDefaultSemitreeVertexCap);

struct PSemitree {
    RootedPTree tree;
    SimpleGraph graph;
    std::vector<std::vector<int>> blocks; // tree node -> vertex ids of its clique
};

/// Expands each height-k tree node into K_{phi(p^k)} and joins blocks whose
/// nodes are comparable in the tree order. Vertex count is p^{sum a_i}.
PSemitree build_p_semitree(long long p, const std::vector<int>& a,
                           long long vertex_cap = kDefaultSemitreeVertexCap);

/// Recovers the candidate tuple from the counting formulas and confirms by
/// isomorphism; returns the tuple exactly when g is the p-semitree for it.
std::optional<PTuple> is_p_semitree(const SimpleGraph& g, long long p,
                                    long long vertex_cap = kDefaultSemitreeVertexCap);

} // namespace epglab

#endif
