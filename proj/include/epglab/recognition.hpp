#ifndef EPGLAB_RECOGNITION_HPP
#define EPGLAB_RECOGNITION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epglab/cliques.hpp"
#include "epglab/graph.hpp"
#include "epglab/semitree.hpp"

namespace epglab {

/// Necessary conditions for a graph to be an enhanced power graph:
///   e1: all maximal cliques share a vertex;
///   e2: every clique size divides the vertex count;
///   e3: intersections inside a common clique meet in gcd-many vertices;
///   e4, e5: divisibility/containment consequences of e3.
struct ConditionReport {
    bool e1 = false, e2 = false, e3 = false, e4 = false, e5 = false;
    std::string witness; // description of the first violation found, if any

    bool necessary_all() const { return e1 && e2 && e3; }
};

ConditionReport check_conditions(const SimpleGraph& g,
                                 int max_intersections = kDefaultIntersectionCap);

struct PComponent {
    std::vector<int> vertices; // marked vertices, sorted
    SimpleGraph graph;         // induced subgraph on them
};

/// The marking algorithm: walk distinct clique intersections smallest first
/// and top up each B to exactly |B|_[p] marked vertices, choosing lowest ids
/// from B minus its proper sub-intersections. Requires e1 and e3
/// (ConditionsViolated otherwise); MarkingStuck signals a graph that passed
/// them yet cannot be an enhanced power graph.
PComponent p_component(const SimpleGraph& g, long long p);

struct NilpotencyReport {
    bool nilpotent = false;
    // prime -> sum over j of phi(p^j) * number of ~_{p^j} classes; the group
    // is nilpotent iff the sum equals the p-part of n for every prime.
    std::map<long long, long long> per_prime;
};

NilpotencyReport nilpotency_from_graph(const SimpleGraph& g);

/// Full graph-side recognition: nilpotency, per-prime components, semitree
/// recognition of each, and a final isomorphism against the strong product
/// of the recovered semitrees. Returns prime -> tuple, or nullopt.
std::optional<std::map<long long, PTuple>> recognize_abelian_epg(const SimpleGraph& g);

long long largest_p_power_divisor(long long n, long long p); // n_[p], by repeated division

} // namespace epglab

#endif
