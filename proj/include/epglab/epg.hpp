#ifndef EPGLAB_EPG_HPP
#define EPGLAB_EPG_HPP

#include <optional>
#include <utility>

#include "epglab/graph.hpp"
#include "epglab/group.hpp"

namespace epglab {

/// The three power-type graphs of a group; vertex i is element i.
struct GroupGraphBundle {
    FiniteGroup group;
    SimpleGraph power;
    DiGraph directed_power;
    SimpleGraph enhanced;
};

/// directed_power: x -> y iff y in <x>, y != x.
/// power: symmetrization of directed_power.
/// enhanced: x ~ y iff some maximal cyclic subgroup contains both.
GroupGraphBundle build_bundle(const FiniteGroup& g);

/// x ~ y iff xy = yx (vertex set is the whole group).
SimpleGraph commuting_graph(const FiniteGroup& g);

struct ProductLawResult {
    bool equal = false;
    // An edge of EPG(G) x EPG(H) (strong product) absent from EPG(GxH);
    // present exactly when equal is false.
    std::optional<std::pair<int, int>> witness;
};

/// Compares EPG(GxH) with the strong product EPG(G) x EPG(H) edge by edge.
/// The inclusion EPG(GxH) <= product always holds and is asserted.
ProductLawResult check_product_law(const FiniteGroup& g, const FiniteGroup& h,
                                   int size_cap = kDefaultGroupSizeCap);

} // namespace epglab

#endif
