#ifndef EPGLAB_GROUP_HPP
#define EPGLAB_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "epglab/errors.hpp"

namespace epglab {

using ElementId = int;

inline constexpr int kDefaultGroupSizeCap = 2000;

/// A finite group given by its Cayley table, identity fixed at element 0.
/// Instances are immutable once validated; every operation is a pure read.
class FiniteGroup {
public:
    /// Checks that `table` is a group table and returns the group.
    /// Laws are checked in this order: entry range and Latin-square property
    /// (NotLatinSquare), associativity (NotAssociative), identity at id 0
    /// (NoIdentityAtZero). Inverses then exist and are precomputed.
    static FiniteGroup validate(const std::vector<std::vector<int>>& table,
                                std::string name = "",
                                int size_cap = kDefaultGroupSizeCap);

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    ElementId mul(ElementId a, ElementId b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    ElementId inverse(ElementId x) const { return inv_[x]; }
    ElementId power(ElementId x, long long k) const;

    /// Least k >= 1 with x^k = identity; always divides order().
    int element_order(ElementId x) const { return elem_order_[x]; }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    FiniteGroup() = default;

    int n_ = 0;
    std::vector<int> table_; // row-major n*n
    std::vector<int> inv_;
    std::vector<int> elem_order_;
    std::string name_;
};

struct CyclicSubgroup {
    ElementId generator = 0;
    std::vector<ElementId> members; // sorted
    int order() const { return static_cast<int>(members.size()); }
};

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, ElementId x);

/// All distinct cyclic subgroups, ordered by (size, members) for determinism.
std::vector<CyclicSubgroup> all_cyclic_subgroups(const FiniteGroup& g);

/// The inclusion-maximal cyclic subgroups; their union is the whole group.
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g);

/// Componentwise product; element (g,h) gets id g*|H|+h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           int size_cap = kDefaultGroupSizeCap);

// Constructors for the standard catalog.
FiniteGroup cyclic(int n);
FiniteGroup abelian(const std::vector<int>& factors); // C_{f1} x C_{f2} x ...
FiniteGroup dihedral(int order);                      // order 2n, n >= 1
FiniteGroup generalized_quaternion(int order);        // order 4n, n >= 2
FiniteGroup klein();
FiniteGroup m16();          // <a,x | a^8 = x^2 = 1, x a x^-1 = a^5>
FiniteGroup heisenberg27(); // upper unitriangular 3x3 over GF(3)

int exponent(const FiniteGroup& g); // lcm of element orders

struct SylowRecord {
    long long prime = 0;
    int multiplicity = 0;              // k with p^k || n
    long long sylow_order = 0;         // p^k
    long long p_power_element_count = 0; // elements whose order is a power of p
    bool unique_sylow = false;         // iff p_power_element_count == p^k
    bool cyclic_sylow = false;         // iff some element has order p^k
};

std::vector<SylowRecord> sylow_info(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);

/// Number of primes whose (unique) Sylow subgroup is non-cyclic.
/// Throws NotNilpotent when the group is not nilpotent.
int non_cyclic_sylow_count(const FiniteGroup& g);

long long euler_phi(long long m);

/// Reindexes a subset closed under multiplication into its own group.
/// Element ids map in sorted order of `elements`; identity must be included.
FiniteGroup subgroup_from_elements(const FiniteGroup& g,
                                   std::vector<ElementId> elements,
                                   std::string name = "");

std::map<long long, int> factorize(long long n); // prime -> exponent

} // namespace epglab

#endif
