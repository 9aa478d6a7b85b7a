#ifndef EPGLAB_CATALOG_HPP
#define EPGLAB_CATALOG_HPP

#include <string>
#include <vector>

#include "epglab/group.hpp"

namespace epglab {

struct CatalogEntry {
    std::string name;
    FiniteGroup group;
    // prime-power invariant factors when the entry is abelian by
    // construction (cyclic and abelian-type entries); empty otherwise
    std::vector<int> abelian_factors;
};

/// Generated catalog of small groups: every cyclic group, every abelian
/// isomorphism type (as a product of prime-power cyclics), dihedral and
/// generalized quaternion families, M16, the order-27 Heisenberg group, and
/// a few coprime products. No isomorphic duplicates by construction.
std::vector<CatalogEntry> build_catalog(int max_order);

/// All abelian isomorphism types of the given order, as prime-power factor
/// lists sorted descending (the cyclic type is included).
std::vector<std::vector<int>> abelian_types(int order);

std::string abelian_type_name(const std::vector<int>& factors);

} // namespace epglab

#endif
