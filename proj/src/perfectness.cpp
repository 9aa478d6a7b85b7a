#include "epglab/perfectness.hpp"

#include <algorithm>
#include <map>

#include "epglab/iso.hpp"
#include "epglab/recognition.hpp"

namespace epglab {

bool is_proper_coloring(const SimpleGraph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count())
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.num_colors)
            return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

int omega_epg(const FiniteGroup& g) {
    int best = 1;
    for (int x = 0; x < g.order(); ++x)
        best = std::max(best, g.element_order(x));
    return best;
}

bool perfect_verdict_nilpotent(const FiniteGroup& g) {
    return non_cyclic_sylow_count(g) <= 2; // throws NotNilpotent when not applicable
}

namespace {

// The construction from the three-non-cyclic-Sylow case: a1 of maximal order
// among p1-elements, a2 a p1-element outside <a1>, likewise for p2, p3; the
// five products a1*b1, b1*c2, a2, b2, a1*c1 induce a pentagon.
std::optional<std::array<int, 5>> seeded_pentagon(const FiniteGroup& g,
                                                  const SimpleGraph& epg) {
    std::vector<long long> primes;
    for (const auto& r : sylow_info(g))
        if (r.unique_sylow && !r.cyclic_sylow)
            primes.push_back(r.prime);
    if (primes.size() < 3)
        return std::nullopt;

    auto pick_pair = [&](long long p) -> std::optional<std::pair<int, int>> {
        int a1 = -1, best = 0;
        for (int x = 1; x < g.order(); ++x) {
            const int o = g.element_order(x);
            if (largest_p_power_divisor(o, p) == o && o > best) {
                best = o;
                a1 = x;
            }
        }
        if (a1 < 0)
            return std::nullopt;
        const auto inside = cyclic_subgroup(g, a1).members;
        for (int x = 1; x < g.order(); ++x) {
            const int o = g.element_order(x);
            if (largest_p_power_divisor(o, p) != o || o == 1)
                continue;
            if (!std::binary_search(inside.begin(), inside.end(), x))
                return std::make_pair(a1, x);
        }
        return std::nullopt;
    };

    auto pa = pick_pair(primes[0]);
    auto pb = pick_pair(primes[1]);
    auto pc = pick_pair(primes[2]);
    if (!pa || !pb || !pc)
        return std::nullopt;
    auto [a1, a2] = *pa;
    auto [b1, b2] = *pb;
    auto [c1, c2] = *pc;

    std::array<int, 5> cycle = {g.mul(a1, b1), g.mul(b1, c2), a2, b2, g.mul(a1, c1)};
    std::vector<int> as_vec(cycle.begin(), cycle.end());
    if (is_induced_cycle(epg, as_vec))
        return cycle;
    return std::nullopt;
}

} // namespace

std::optional<std::array<int, 5>> pentagon_witness(const FiniteGroup& g) {
    SimpleGraph epg = build_bundle(g).enhanced;
    if (auto seeded = seeded_pentagon(g, epg))
        return seeded;
    if (epg.vertex_count() > kDefaultHoleSearchCap)
        return std::nullopt; // out of bounds for the generic search
    auto hit = find_induced_odd_hole_or_antihole(epg, 5);
    if (hit && !hit->in_complement && hit->vertices.size() == 5) {
        std::array<int, 5> out;
        std::copy(hit->vertices.begin(), hit->vertices.end(), out.begin());
        return out;
    }
    return std::nullopt;
}

Coloring weakly_perfect_coloring(const FiniteGroup& g) {
    const int n = exponent(g);
    int witness = -1;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == n) {
            witness = x;
            break;
        }
    if (witness < 0)
        throw Error(Errc::NoExponentElement,
                    "no element attains the exponent " + std::to_string(n));

    // colors along the powers of the witness: color(x^i) = i
    std::vector<int> power_of(n);
    std::map<int, std::vector<int>> colors_for_order; // order m -> colors of its generators in <x>
    {
        int acc = 0;
        for (int i = 0; i < n; ++i) {
            power_of[i] = acc;
            colors_for_order[g.element_order(acc)].push_back(i);
            acc = g.mul(acc, witness);
        }
    }

    // group elements by generator class; each class of order m reuses the
    // colors of the order-m class inside <x>
    std::vector<int> cls = approx_classes_of(g);
    std::map<int, std::vector<int>> members;
    for (int x = 0; x < g.order(); ++x)
        members[cls[x]].push_back(x);

    Coloring out;
    out.color.assign(g.order(), -1);
    out.num_colors = n;
    for (auto& [cid, elems] : members) {
        const int m = g.element_order(elems[0]);
        auto it = colors_for_order.find(m);
        if (it == colors_for_order.end() || it->second.size() != elems.size())
            throw Error(Errc::ConstructionFailed,
                        "no matching color class for order " + std::to_string(m));
        for (size_t i = 0; i < elems.size(); ++i)
            out.color[elems[i]] = it->second[i];
    }

    SimpleGraph epg = build_bundle(g).enhanced;
    if (!is_proper_coloring(epg, out))
        throw Error(Errc::ConstructionFailed, "constructed coloring is not proper");
    return out;
}

} // namespace epglab
