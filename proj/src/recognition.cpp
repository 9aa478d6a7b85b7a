#include "epglab/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "epglab/group.hpp"
#include "epglab/iso.hpp"
#include "epglab/semitree.hpp"

namespace epglab {

long long largest_p_power_divisor(long long n, long long p) {
    long long r = 1;
    while (n % p == 0) {
        r *= p;
        n /= p;
    }
    return r;
}

namespace {

long long intersection_size(const CliqueFamily& f, int i, int j) {
    long long s = 0;
    for (size_t w = 0; w < f.intersection_bits[i].size(); ++w)
        s += __builtin_popcountll(f.intersection_bits[i][w] & f.intersection_bits[j][w]);
    return s;
}

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size() && i < 8; ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    if (s.size() > 8)
        out += ",...";
    return out + "}";
}

} // namespace

ConditionReport check_conditions(const SimpleGraph& g, int max_intersections) {
    CliqueFamily f = clique_family(g, max_intersections);
    ConditionReport rep;
    rep.e1 = rep.e2 = rep.e3 = rep.e4 = rep.e5 = true;

    if (f.total_intersection_index < 0 ||
        f.intersections[f.total_intersection_index].empty()) {
        rep.e1 = false;
        rep.witness = "maximal cliques have empty total intersection";
    }
    const long long n = g.vertex_count();
    for (const auto& c : f.cliques)
        if (n % static_cast<long long>(c.size()) != 0) {
            rep.e2 = false;
            if (rep.witness.empty())
                rep.witness = "clique size " + std::to_string(c.size()) +
                              " does not divide " + std::to_string(n);
            break;
        }

    const int k = static_cast<int>(f.intersections.size());
    for (int i = 0; i < k && rep.e3; ++i)
        for (int j = i + 1; j < k && rep.e3; ++j) {
            if (!f.share_clique(i, j))
                continue;
            const long long a = static_cast<long long>(f.intersections[i].size());
            const long long b = static_cast<long long>(f.intersections[j].size());
            if (intersection_size(f, i, j) != std::gcd(a, b)) {
                rep.e3 = false;
                if (rep.witness.empty())
                    rep.witness = "sets " + set_str(f.intersections[i]) + " and " +
                                  set_str(f.intersections[j]) + " meet in " +
                                  std::to_string(intersection_size(f, i, j)) +
                                  " vertices, gcd is " + std::to_string(std::gcd(a, b));
            }
        }

    for (int i = 0; i < k && rep.e4; ++i)
        for (int j = 0; j < k && rep.e4; ++j) {
            if (i == j || !f.subset(i, j))
                continue;
            const long long a = static_cast<long long>(f.intersections[i].size());
            const long long b = static_cast<long long>(f.intersections[j].size());
            if (a == 0 || b % a != 0)
                rep.e4 = false;
        }
    for (int i = 0; i < k && rep.e5; ++i)
        for (int j = 0; j < k && rep.e5; ++j) {
            if (i == j || !f.share_clique(i, j))
                continue;
            const long long a = static_cast<long long>(f.intersections[i].size());
            const long long b = static_cast<long long>(f.intersections[j].size());
            if (a > 0 && b % a == 0 && !f.subset(i, j))
                rep.e5 = false;
        }
    return rep;
}

PComponent p_component(const SimpleGraph& g, long long p) {
    bool prime = p >= 2;
    for (long long d = 2; d * d <= p && prime; ++d)
        prime = p % d != 0;
    if (!prime)
        throw Error(Errc::BadParameter, std::to_string(p) + " is not prime");
    if (g.vertex_count() == 0 || g.vertex_count() % p != 0)
        throw Error(Errc::BadParameter,
                    "p = " + std::to_string(p) + " does not divide the vertex count");
    ConditionReport rep = check_conditions(g);
    if (!rep.e1 || !rep.e3)
        throw Error(Errc::ConditionsViolated,
                    std::string("graph fails ") + (!rep.e1 ? "E1" : "E3") +
                        (rep.witness.empty() ? "" : (": " + rep.witness)));

    CliqueFamily f = clique_family(g);
    const int k = static_cast<int>(f.intersections.size());

    // process distinct intersections smallest-first (any linear extension of
    // containment); the intersections list is already size-sorted
    std::vector<char> marked(g.vertex_count(), 0);
    std::vector<long long> marked_in(k, 0);

    for (int i = 0; i < k; ++i) {
        const auto& b = f.intersections[i];
        const long long target = largest_p_power_divisor(static_cast<long long>(b.size()), p);
        long long have = 0;
        for (int v : b)
            if (marked[v])
                ++have;
        if (have > target)
            throw Error(Errc::MarkingStuck,
                        "intersection " + set_str(b) + " already holds " + std::to_string(have) +
                            " marked vertices, needs " + std::to_string(target));
        if (have < target) {
            // eligible: vertices of b outside every proper sub-intersection
            std::vector<char> blocked(g.vertex_count(), 0);
            for (int j = 0; j < k; ++j)
                if (j != i && f.subset(j, i) && f.intersections[j].size() < b.size())
                    for (int v : f.intersections[j])
                        blocked[v] = 1;
            for (int v : b) {
                if (have == target)
                    break;
                if (!marked[v] && !blocked[v]) {
                    marked[v] = 1;
                    ++have;
                }
            }
            if (have < target)
                throw Error(Errc::MarkingStuck,
                            "cannot reach " + std::to_string(target) + " marked vertices in " +
                                set_str(b) + " (not an enhanced power graph)");
        }
    }
    // final audit of the defining property
    for (int i = 0; i < k; ++i) {
        const long long target =
            largest_p_power_divisor(static_cast<long long>(f.intersections[i].size()), p);
        long long have = 0;
        for (int v : f.intersections[i])
            if (marked[v])
                ++have;
        if (have != target)
            throw Error(Errc::MarkingStuck, "post-check failed on " + set_str(f.intersections[i]));
    }

    PComponent out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (marked[v])
            out.vertices.push_back(v);
    out.graph = induced_subgraph(g, out.vertices).graph;
    return out;
}

NilpotencyReport nilpotency_from_graph(const SimpleGraph& g) {
    const long long n = g.vertex_count();
    if (n < 1)
        throw Error(Errc::BadParameter, "empty graph");
    CliqueFamily f = clique_family(g);
    NilpotencyReport rep;
    rep.nilpotent = true;
    for (auto [p, k] : factorize(n)) {
        long long sum = 0, pj = 1;
        for (int j = 0; j <= k; ++j) {
            if (j > 0)
                pj *= p;
            sum += euler_phi(pj) * static_cast<long long>(approx_m_classes(f, pj).size());
        }
        rep.per_prime[p] = sum;
        if (sum != largest_p_power_divisor(n, p))
            rep.nilpotent = false;
    }
    return rep;
}

std::optional<std::map<long long, PTuple>> recognize_abelian_epg(const SimpleGraph& g) {
    const long long n = g.vertex_count();
    if (n < 1)
        throw Error(Errc::BadParameter, "empty graph");
    if (n == 1)
        return std::map<long long, PTuple>{}; // trivial group

    std::map<long long, PTuple> tuples;
    std::optional<SimpleGraph> assembled;
    try {
        if (!nilpotency_from_graph(g).nilpotent)
            return std::nullopt;
        for (auto [p, k] : factorize(n)) {
            (void)k;
            PComponent comp = p_component(g, p);
            auto tuple = is_p_semitree(comp.graph, p, n);
            if (!tuple)
                return std::nullopt;
            tuples[p] = *tuple;
            PSemitree st = build_p_semitree(p, tuple->a, n);
            if (!assembled)
                assembled = std::move(st.graph);
            else
                assembled = strong_product(*assembled, st.graph, static_cast<int>(n));
        }
    } catch (const Error& e) {
        switch (e.code()) {
            case Errc::ConditionsViolated:
            case Errc::MarkingStuck:
            case Errc::NotTransitive:
            case Errc::NotAbelianEpg:
                return std::nullopt;
            default:
                throw;
        }
    }
    if (!assembled || !are_isomorphic(g, *assembled).isomorphic())
        return std::nullopt;
    return tuples;
}

} // namespace epglab
