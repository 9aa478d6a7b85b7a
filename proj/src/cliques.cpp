#include "epglab/cliques.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "epglab/group.hpp"

namespace epglab {

namespace {

std::vector<std::uint64_t> to_mask(const std::vector<int>& vs, int words) {
    std::vector<std::uint64_t> m(words, 0);
    for (int v : vs)
        m[v >> 6] |= 1ULL << (v & 63);
    return m;
}

std::vector<int> from_mask(const std::vector<std::uint64_t>& m) {
    std::vector<int> out;
    for (size_t w = 0; w < m.size(); ++w) {
        std::uint64_t bits = m[w];
        while (bits) {
            out.push_back(static_cast<int>((w << 6) + __builtin_ctzll(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}

} // namespace

bool CliqueFamily::subset(int i, int j) const {
    return mask_subset(intersection_bits[i], intersection_bits[j]);
}

bool CliqueFamily::share_clique(int i, int j) const {
    for (size_t w = 0; w < containing_cliques[i].size(); ++w)
        if (containing_cliques[i][w] & containing_cliques[j][w])
            return true;
    return false;
}

CliqueFamily clique_family(const SimpleGraph& g, int max_intersections) {
    CliqueFamily f;
    f.n = g.vertex_count();
    f.cliques = maximal_cliques_generic(g);
    const int words = (f.n + 63) / 64;

    // Close the clique sets under pairwise intersection; the closure is
    // exactly the family of all nonempty-subfamily intersections.
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> work;
    for (const auto& c : f.cliques) {
        auto m = to_mask(c, words);
        if (seen.insert(m).second)
            work.push_back(std::move(m));
    }
    for (size_t i = 0; i < work.size(); ++i) {
        if (static_cast<int>(work.size()) > max_intersections)
            throw Error(Errc::TooManyCliques,
                        "more than " + std::to_string(max_intersections) +
                            " distinct clique intersections");
        for (size_t j = 0; j < i; ++j) {
            std::vector<std::uint64_t> inter(words);
            for (int w = 0; w < words; ++w)
                inter[w] = work[i][w] & work[j][w];
            if (seen.insert(inter).second)
                work.push_back(std::move(inter));
        }
    }

    std::vector<std::vector<int>> sets;
    sets.reserve(work.size());
    for (const auto& m : seen)
        sets.push_back(from_mask(m));
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });

    const int clique_words = (static_cast<int>(f.cliques.size()) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> clique_masks;
    for (const auto& c : f.cliques)
        clique_masks.push_back(to_mask(c, words));

    for (auto& s : sets) {
        auto m = to_mask(s, words);
        std::vector<std::uint64_t> containing(clique_words, 0);
        for (size_t ci = 0; ci < f.cliques.size(); ++ci)
            if (mask_subset(m, clique_masks[ci]))
                containing[ci >> 6] |= 1ULL << (ci & 63);
        f.intersections.push_back(std::move(s));
        f.intersection_bits.push_back(std::move(m));
        f.containing_cliques.push_back(std::move(containing));
    }

    // total intersection = unique set contained in every clique
    for (size_t i = 0; i < f.intersections.size(); ++i) {
        bool all = true;
        for (size_t ci = 0; ci < f.cliques.size() && all; ++ci)
            if (!((f.containing_cliques[i][ci >> 6] >> (ci & 63)) & 1u))
                all = false;
        if (all) {
            f.total_intersection_index = static_cast<int>(i);
            break; // sets are size-sorted, the first hit is the intersection itself
        }
    }
    return f;
}

EeqPartition eeq_partition(const SimpleGraph& g, const CliqueFamily& f) {
    const int n = g.vertex_count();
    const int cw = (static_cast<int>(f.cliques.size()) + 63) / 64;

    std::vector<std::vector<std::uint64_t>> pattern(n, std::vector<std::uint64_t>(cw, 0));
    for (size_t ci = 0; ci < f.cliques.size(); ++ci)
        for (int v : f.cliques[ci])
            pattern[v][ci >> 6] |= 1ULL << (ci & 63);

    std::map<std::vector<std::uint64_t>, int> ids;
    EeqPartition part;
    part.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        auto it = ids.try_emplace(pattern[v], static_cast<int>(ids.size())).first;
        part.class_of[v] = it->second;
        if (part.class_of[v] == static_cast<int>(part.classes.size()))
            part.classes.emplace_back();
        part.classes[part.class_of[v]].push_back(v);
    }

    // the lemma's equivalence: clique-membership pattern = closed neighborhood
    std::map<std::vector<int>, int> by_nbhd;
    for (int v = 0; v < n; ++v) {
        auto cn = g.closed_neighborhood(v);
        auto it = by_nbhd.try_emplace(cn, part.class_of[v]).first;
        if (it->second != part.class_of[v])
            throw Error(Errc::ConstructionFailed,
                        "clique-pattern classes disagree with closed-neighborhood classes "
                        "(graph is not an enhanced power graph)");
    }
    std::map<int, int> reverse_count;
    for (auto& [nb, c] : by_nbhd)
        ++reverse_count[c];
    for (auto& [c, cnt] : reverse_count)
        if (cnt != 1)
            throw Error(Errc::ConstructionFailed,
                        "closed-neighborhood classes split a clique-pattern class");

    const int k = static_cast<int>(part.classes.size());
    part.leq.assign(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            // a <= b iff pattern(b) subseteq pattern(a)
            const auto& pa = pattern[part.classes[a][0]];
            const auto& pb = pattern[part.classes[b][0]];
            part.leq[a][b] = mask_subset(pb, pa) ? 1 : 0;
        }
    return part;
}

std::vector<int> class_generated_set(const CliqueFamily& f, const std::vector<int>& cls) {
    const int words = (f.n + 63) / 64;
    std::vector<std::uint64_t> acc(words, ~0ULL);
    auto cls_mask = to_mask(cls, words);
    bool any = false;
    for (size_t ci = 0; ci < f.cliques.size(); ++ci) {
        auto cm = to_mask(f.cliques[ci], words);
        if (mask_subset(cls_mask, cm)) {
            any = true;
            for (int w = 0; w < words; ++w)
                acc[w] &= cm[w];
        }
    }
    if (!any)
        return {};
    return from_mask(acc);
}

std::vector<std::vector<int>> approx_m_classes(const CliqueFamily& f, long long m) {
    if (m < 1)
        throw Error(Errc::BadParameter, "m must be positive");
    std::vector<int> domain; // clique indices with m | size
    for (size_t i = 0; i < f.cliques.size(); ++i)
        if (static_cast<long long>(f.cliques[i].size()) % m == 0)
            domain.push_back(static_cast<int>(i));

    const int d = static_cast<int>(domain.size());
    const int words = (f.n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> masks(d);
    for (int i = 0; i < d; ++i)
        masks[i] = to_mask(f.cliques[domain[i]], words);

    auto related = [&](int i, int j) {
        long long sz = 0;
        for (int w = 0; w < words; ++w)
            sz += __builtin_popcountll(masks[i][w] & masks[j][w]);
        return sz % m == 0;
    };

    // connected components of the relation graph
    std::vector<int> comp(d, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < d; ++i) {
        if (comp[i] >= 0)
            continue;
        std::vector<int> queue{i}, members;
        comp[i] = static_cast<int>(classes.size());
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            members.push_back(x);
            for (int j = 0; j < d; ++j)
                if (comp[j] < 0 && related(x, j)) {
                    comp[j] = comp[i];
                    queue.push_back(j);
                }
        }
        // transitivity: within a component every pair must be directly related
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (!related(members[a], members[b])) {
                    // find a relation path a -> b, then the first vertex on it
                    // no longer related to the start closes a witness triple
                    const int src = members[a], dst = members[b];
                    std::vector<int> prev(d, -2);
                    std::vector<int> bfs{src};
                    prev[src] = -1;
                    for (size_t head = 0; head < bfs.size(); ++head)
                        for (int j = 0; j < d; ++j)
                            if (prev[j] == -2 && related(bfs[head], j)) {
                                prev[j] = bfs[head];
                                bfs.push_back(j);
                            }
                    std::vector<int> path;
                    for (int x = dst; x >= 0; x = prev[x])
                        path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    size_t t = 1;
                    while (t < path.size() && related(src, path[t]))
                        ++t;
                    throw Error(Errc::NotTransitive,
                                "cliques " + std::to_string(domain[src]) + ", " +
                                    std::to_string(domain[path[t - 1]]) + ", " +
                                    std::to_string(domain[path[t]]) +
                                    " violate transitivity (not an enhanced power graph)");
                }
        std::vector<int> cls;
        cls.reserve(members.size());
        for (int x : members)
            cls.push_back(domain[x]);
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

long long count_order_elements_by_classes(const CliqueFamily& f, long long m) {
    return euler_phi(m) * static_cast<long long>(approx_m_classes(f, m).size());
}

long long count_order_elements_by_inclusion_exclusion(const CliqueFamily& f, long long m) {
    if (m < 1)
        throw Error(Errc::BadParameter, "m must be positive");
    // Every nonempty index subset I contributes (-1)^{|I|+1} Phi_m(B) where B
    // is its intersection; grouping by B, the coefficient g(B) of each
    // distinct intersection satisfies sum_{B' superseteq B} g(B') = 1, so g
    // is solved top-down over the containment order.
    const int k = static_cast<int>(f.intersections.size());
    std::vector<long long> coeff(k, 0);
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return f.intersections[a].size() > f.intersections[b].size();
    });
    for (int oi = 0; oi < k; ++oi) {
        const int b = order[oi];
        long long c = 1;
        for (int oj = 0; oj < oi; ++oj) {
            const int sup = order[oj];
            if (f.intersections[sup].size() > f.intersections[b].size() && f.subset(b, sup))
                c -= coeff[sup];
        }
        coeff[b] = c;
    }
    const long long phi = euler_phi(m);
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        const long long size = static_cast<long long>(f.intersections[i].size());
        if (size > 0 && size % m == 0)
            total += coeff[i] * phi;
    }
    return total;
}

std::map<long long, std::map<int, int>> abelian_invariants_from_family(const CliqueFamily& f,
                                                                       long long n_override) {
    const long long n = n_override >= 0 ? n_override : f.n;
    if (n <= 0)
        throw Error(Errc::BadParameter, "empty graph");

    std::map<long long, std::map<int, int>> out;
    for (auto [p, k] : factorize(n)) {
        // L(p, j) = log_p of the cumulative count of elements of order p^0..p^j
        std::vector<long long> L(k + 2, 0);
        long long cumulative = 0;
        long long pj = 1;
        for (int j = 0; j <= k + 1; ++j) {
            if (j > 0)
                pj *= p;
            cumulative += euler_phi(pj) * static_cast<long long>(approx_m_classes(f, pj).size());
            long long v = cumulative, log = 0;
            while (v > 1 && v % p == 0) {
                v /= p;
                ++log;
            }
            if (v != 1)
                throw Error(Errc::NotAbelianEpg,
                            "cumulative count " + std::to_string(cumulative) +
                                " is not a power of " + std::to_string(p));
            L[j] = log;
        }
        std::map<int, int> factors;
        long long exponent_sum = 0;
        for (int j = 1; j <= k; ++j) {
            long long mult = 2 * L[j] - L[j - 1] - L[j + 1];
            if (mult < 0)
                throw Error(Errc::NotAbelianEpg,
                            "negative multiplicity at " + std::to_string(p) + "^" + std::to_string(j));
            if (mult > 0)
                factors[j] = static_cast<int>(mult);
            exponent_sum += mult * j;
        }
        if (exponent_sum != k)
            throw Error(Errc::NotAbelianEpg, "recovered factors do not multiply to the p-part");
        out[p] = std::move(factors);
    }
    return out;
}

std::map<long long, std::map<int, int>> abelian_invariants_from_graph(const SimpleGraph& g) {
    return abelian_invariants_from_family(clique_family(g));
}

} // namespace epglab
