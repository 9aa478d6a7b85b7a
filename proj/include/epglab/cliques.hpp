#ifndef EPGLAB_CLIQUES_HPP
#define EPGLAB_CLIQUES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "epglab/graph.hpp"

namespace epglab {

inline constexpr int kDefaultIntersectionCap = 4096;

/// Maximal cliques of a graph together with every distinct intersection of a
/// nonempty subfamily. Intersections are keyed by resulting vertex set; the
/// family is closed under pairwise intersection by construction. Everything
/// downstream of this type consumes the graph alone, never a group.
struct CliqueFamily {
    int n = 0;                                   // vertex count of the source graph
    std::vector<std::vector<int>> cliques;       // sorted vertex sets
    std::vector<std::vector<int>> intersections; // distinct, sorted by (size asc, lex)

    // intersections[i] restated as a vertex bitmask, words = (n+63)/64.
    std::vector<std::vector<std::uint64_t>> intersection_bits;
    // containing_cliques[i]: bitmask over clique indices j with B_i subseteq C_j.
    std::vector<std::vector<std::uint64_t>> containing_cliques;

    int total_intersection_index = -1; // index of the intersection of all cliques

    bool subset(int i, int j) const; // intersections[i] subseteq intersections[j]
    bool share_clique(int i, int j) const;
};

CliqueFamily clique_family(const SimpleGraph& g,
                           int max_intersections = kDefaultIntersectionCap);

struct EeqPartition {
    std::vector<int> class_of;             // vertex -> class index
    std::vector<std::vector<int>> classes; // sorted members
    // leq[a][b]: class a <= class b, i.e. every clique containing a member of
    // b contains every member of a.
    std::vector<std::vector<char>> leq;
};

/// Partition of vertices by clique-membership pattern; verified equal to the
/// partition by closed-neighborhood equality (mismatch means the graph is not
/// an enhanced power graph and raises ConstructionFailed).
EeqPartition eeq_partition(const SimpleGraph& g, const CliqueFamily& f);

/// Intersection of all cliques containing the class (the class's "generated set").
std::vector<int> class_generated_set(const CliqueFamily& f, const std::vector<int>& cls);

/// Partition of D = {cliques whose size m divides} under the transitive
/// closure of: A related to B iff m divides |A n B|. The relation must
/// already be transitive; otherwise NotTransitive is raised with a witness
/// triple (evidence that the graph is not an enhanced power graph).
std::vector<std::vector<int>> approx_m_classes(const CliqueFamily& f, long long m);

/// phi(m) * |D / ~_m|.
long long count_order_elements_by_classes(const CliqueFamily& f, long long m);

/// The alternating-sum formula over clique intersections, evaluated by
/// Moebius bookkeeping over distinct intersection sets (no 2^t subset
/// enumeration), so any family within the intersection cap is accepted.
long long count_order_elements_by_inclusion_exclusion(const CliqueFamily& f, long long m);

/// Invariant-factor data recovered from the graph alone, assuming it is the
/// enhanced power graph of an abelian group: prime -> (exponent j -> number
/// of C_{p^j} factors). Non-integral logarithms or negative multiplicities
/// raise NotAbelianEpg.
std::map<long long, std::map<int, int>> abelian_invariants_from_graph(const SimpleGraph& g);

std::map<long long, std::map<int, int>> abelian_invariants_from_family(
    const CliqueFamily& f, long long n_override = -1);

} // namespace epglab

#endif
