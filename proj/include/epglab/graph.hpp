#ifndef EPGLAB_GRAPH_HPP
#define EPGLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epglab/errors.hpp"

namespace epglab {

inline constexpr int kDefaultProductVertexCap = 10000;
inline constexpr int kDefaultColoringCap = 64;
inline constexpr int kDefaultHoleSearchCap = 200;

/// Simple undirected graph over vertices 0..n-1. Sorted adjacency lists plus
/// an adjacency bitmask per vertex for O(1) edge queries.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<int> closed_neighborhood(int v) const;

    const std::uint64_t* row_bits(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words() const { return words_; }

    std::vector<std::pair<int, int>> edges() const; // u < v, sorted

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_ = 0;
    int words_ = 0;
    long long edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

/// Simple digraph: irreflexive successor relation.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n);

    void add_arc(int u, int v);

    int vertex_count() const { return n_; }
    long long arc_count() const { return arcs_; }
    bool has_arc(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    const std::vector<int>& successors(int v) const { return succ_[v]; }
    const std::vector<int>& predecessors(int v) const { return pred_[v]; }

    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const DiGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_ = 0;
    int words_ = 0;
    long long arcs_ = 0;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
    std::vector<std::uint64_t> bits_;
};

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> vertices; // local index -> original vertex id
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::vector<int> vertices);

/// Vertex (x, y) of the product gets id x*|V(delta)| + y.
SimpleGraph strong_product(const SimpleGraph& gamma, const SimpleGraph& delta,
                           int vertex_cap = kDefaultProductVertexCap);

SimpleGraph complement(const SimpleGraph& g);

/// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), each sorted,
/// the list ordered by (size, lexicographic) for determinism.
std::vector<std::vector<int>> maximal_cliques_generic(const SimpleGraph& g);

int clique_number_generic(const SimpleGraph& g);

/// Exact chromatic number: clique lower bound plus DSATUR-ordered
/// branch and bound. Refuses n > cap unless force is set.
int chromatic_number_exact(const SimpleGraph& g, int cap = kDefaultColoringCap,
                           bool force = false);

struct HoleWitness {
    std::vector<int> vertices;  // induced odd cycle, in cycle order
    bool in_complement = false; // witness lives in complement(g) (an antihole)
};

/// Bounded Berge search: looks for an induced odd cycle of length 5..max_len
/// in g or in its complement. "None" only means none up to max_len.
std::optional<HoleWitness> find_induced_odd_hole_or_antihole(
    const SimpleGraph& g, int max_len,
    int vertex_cap = kDefaultHoleSearchCap,
    long long node_budget = 400000000LL);

/// Verifies that `cycle` induces a chordless cycle in g (in the given order).
bool is_induced_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

} // namespace epglab

#endif
