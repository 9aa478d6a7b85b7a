#ifndef EPGLAB_PERFECTNESS_HPP
#define EPGLAB_PERFECTNESS_HPP

#include <array>
#include <optional>
#include <vector>

#include "epglab/epg.hpp"
#include "epglab/group.hpp"

namespace epglab {

struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

bool is_proper_coloring(const SimpleGraph& g, const Coloring& c);

/// Clique number of the enhanced power graph: the largest order of a maximal
/// cyclic subgroup, i.e. the largest element order.
int omega_epg(const FiniteGroup& g);

/// Whether a nilpotent group's enhanced power graph is perfect: true iff at
/// most two Sylow subgroups are non-cyclic. Throws NotNilpotent otherwise.
bool perfect_verdict_nilpotent(const FiniteGroup& g);

/// Looks for an induced 5-cycle in the enhanced power graph. For nilpotent
/// groups with three or more non-cyclic Sylow subgroups the witness is built
/// directly (maximal-order element + outside element per Sylow part);
/// otherwise a bounded generic search runs, and nullopt only means "not
/// found within bounds".
std::optional<std::array<int, 5>> pentagon_witness(const FiniteGroup& g);

/// Proper coloring of the enhanced power graph with exactly omega colors,
/// built from an element of maximal (= exponent) order: color its powers
/// 0..n-1, then give every generator class the colors of the same-order class
/// inside it. Requires an element attaining the exponent (NoExponentElement
/// otherwise). The result is re-validated by an edge scan.
Coloring weakly_perfect_coloring(const FiniteGroup& g);

} // namespace epglab

#endif
