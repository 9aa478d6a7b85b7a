#include "epglab/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace epglab {

namespace {

std::vector<std::vector<int>> partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

} // namespace

std::vector<std::vector<int>> abelian_types(int order) {
    if (order < 1)
        return {};
    std::vector<std::vector<std::vector<int>>> per_prime; // per prime: list of factor lists
    for (auto [p, k] : factorize(order)) {
        std::vector<std::vector<int>> lists;
        for (const auto& part : partitions(k)) {
            std::vector<int> factors;
            for (int e : part) {
                long long pe = 1;
                for (int i = 0; i < e; ++i)
                    pe *= p;
                factors.push_back(static_cast<int>(pe));
            }
            lists.push_back(std::move(factors));
        }
        per_prime.push_back(std::move(lists));
    }
    std::vector<std::vector<int>> out{{}};
    for (const auto& lists : per_prime) {
        std::vector<std::vector<int>> next;
        for (const auto& acc : out)
            for (const auto& lst : lists) {
                std::vector<int> merged = acc;
                merged.insert(merged.end(), lst.begin(), lst.end());
                next.push_back(std::move(merged));
            }
        out = std::move(next);
    }
    for (auto& type : out)
        std::sort(type.rbegin(), type.rend());
    std::sort(out.begin(), out.end());
    return out;
}

std::string abelian_type_name(const std::vector<int>& factors) {
    std::string name;
    for (size_t i = 0; i < factors.size(); ++i)
        name += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
    return name;
}

std::vector<CatalogEntry> build_catalog(int max_order) {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, FiniteGroup g, std::vector<int> abelian_factors = {}) {
        g.set_name(name);
        out.push_back({std::move(name), std::move(g), std::move(abelian_factors)});
    };

    for (int n = 1; n <= max_order; ++n) {
        std::vector<int> factors; // C_n = product of its prime-power parts
        for (auto [p, k] : factorize(n)) {
            long long pe = 1;
            for (int i = 0; i < k; ++i)
                pe *= p;
            factors.push_back(static_cast<int>(pe));
        }
        std::sort(factors.rbegin(), factors.rend());
        add("C" + std::to_string(n), cyclic(n), std::move(factors));
    }

    for (int n = 4; n <= max_order; ++n)
        for (const auto& type : abelian_types(n)) {
            if (type.size() < 2)
                continue; // the cyclic type is already present
            // pairwise coprime prime-power factors multiply to a cyclic group
            bool coprime_split = true;
            for (size_t i = 0; i + 1 < type.size() && coprime_split; ++i)
                for (size_t j = i + 1; j < type.size(); ++j)
                    if (std::gcd(type[i], type[j]) != 1) {
                        coprime_split = false;
                        break;
                    }
            if (coprime_split)
                continue; // isomorphic to the cyclic group of the same order
            add(abelian_type_name(type), abelian(type), type);
        }

    for (int n = 6; n <= max_order; n += 2)
        add("D" + std::to_string(n), dihedral(n)); // D4 = Klein is already listed

    for (int n = 8; n <= max_order; n += 4)
        add("Q" + std::to_string(n), generalized_quaternion(n));

    if (max_order >= 16)
        add("M16", m16());
    if (max_order >= 27)
        add("Heis27", heisenberg27());

    // a few coprime products beyond the abelian ones
    if (max_order >= 24) {
        add("Q8xC3", direct_product(generalized_quaternion(8), cyclic(3)));
        add("D8xC3", direct_product(dihedral(8), cyclic(3)));
    }
    if (max_order >= 30)
        add("D6xC5", direct_product(dihedral(6), cyclic(5)));
    if (max_order >= 40)
        add("Q8xC5", direct_product(generalized_quaternion(8), cyclic(5)));
    if (max_order >= 72)
        add("D8xC9", direct_product(dihedral(8), cyclic(9)));

    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.group.order() != b.group.order())
            return a.group.order() < b.group.order();
        return a.name < b.name;
    });
    return out;
}

} // namespace epglab
