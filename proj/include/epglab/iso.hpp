#ifndef EPGLAB_ISO_HPP
#define EPGLAB_ISO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epglab/bigint.hpp"
#include "epglab/epg.hpp"
#include "epglab/graph.hpp"
#include "epglab/group.hpp"

namespace epglab {

inline constexpr int kDefaultIsoCap = 1024;
inline constexpr int kDefaultAutCap = 64;
inline constexpr int kDefaultGroupAutCap = 24;
inline constexpr long long kDefaultIsoBudget = 5000000LL;

/// Either a validated vertex bijection or a refutation reason. A search that
/// runs out of budget throws SearchBudgetExceeded instead; a refutation is
/// only ever produced by exhausted search or an invariant mismatch.
struct IsoCertificate {
    std::optional<std::vector<int>> mapping; // domain vertex -> codomain vertex
    std::string refutation;

    bool isomorphic() const { return mapping.has_value(); }
};

IsoCertificate are_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                              int cap = kDefaultIsoCap,
                              long long budget = kDefaultIsoBudget);

IsoCertificate digraph_isomorphic(const DiGraph& a, const DiGraph& b,
                                  int cap = kDefaultIsoCap,
                                  long long budget = kDefaultIsoBudget);

struct AutGroupSummary {
    std::vector<std::vector<int>> generators; // vertex permutations
    BigUint order;
    std::map<long long, int> order_factorization; // prime -> exponent
    bool abelian = false;
};

/// Exact automorphism group of an undirected graph: the closed-twin quotient
/// shrinks the search, the quotient is handled by an individualization-
/// refinement orbit-stabilizer chain.
AutGroupSummary automorphism_summary(const SimpleGraph& g, int cap = kDefaultAutCap,
                                     long long budget = kDefaultIsoBudget);

AutGroupSummary digraph_automorphism_summary(const DiGraph& g, int cap = kDefaultAutCap,
                                             long long budget = kDefaultIsoBudget);

/// All automorphisms of the group itself (brute force over generator images).
std::vector<std::vector<int>> group_automorphisms(const FiniteGroup& g,
                                                  int cap = kDefaultGroupAutCap);

/// Builds a directed-power-graph isomorphism from an enhanced-power-graph
/// isomorphism psi, by matching generator classes of equal element order
/// inside corresponding closed-neighborhood classes. The result is validated
/// arc-preserving both ways; a failure raises ConstructionFailed.
std::vector<int> epg_iso_to_directed_iso(const FiniteGroup& g, const FiniteGroup& h,
                                         const std::vector<int>& psi);

/// Whether a power-graph isomorphism psi also preserves enhanced adjacency.
bool power_iso_preserves_enhanced(const FiniteGroup& g, const FiniteGroup& h,
                                  const std::vector<int>& psi);

/// Rebuilds directed power arrows from the undirected power graph plus the
/// generator-equivalence partition: x -> y iff x ~ y and |[y]| < |[x]|, or
/// x ~ y, |[y]| = |[x]| and x is adjacent to a non-universal singleton-class
/// vertex, or [x] = [y]. Arrows into the identity are forced. Sound for
/// groups that are neither cyclic nor generalized quaternion.
DiGraph recover_directed_power(const SimpleGraph& power,
                               const std::vector<int>& approx_class_of,
                               int identity_vertex);

struct AutInclusionReport {
    bool chain_holds = false;
    BigUint group_aut_order;
    BigUint dpg_aut_order;
    BigUint pg_aut_order;
    BigUint epg_aut_order;
};

/// Verifies Aut(G) <= Aut(dpg) <= Aut(pg) <= Aut(epg) on concrete
/// permutation sets (generator membership checks).
AutInclusionReport aut_inclusion_check(const FiniteGroup& g,
                                       int cap = kDefaultGroupAutCap);

// Group-side generator-equivalence partition (<x> = <y>); class ids are
// dense, sorted by least member.
std::vector<int> approx_classes_of(const FiniteGroup& g);

} // namespace epglab

#endif
