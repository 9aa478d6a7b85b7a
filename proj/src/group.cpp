#include "epglab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "epglab/errors.hpp"

namespace epglab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotLatinSquare: return "NotLatinSquare";
        case Errc::NotAssociative: return "NotAssociative";
        case Errc::NoIdentityAtZero: return "NoIdentityAtZero";
        case Errc::BadParameter: return "BadParameter";
        case Errc::ProductTooLarge: return "ProductTooLarge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::TooLargeForExactSearch: return "TooLargeForExactSearch";
        case Errc::TooManyCliques: return "TooManyCliques";
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::NotAbelianEpg: return "NotAbelianEpg";
        case Errc::TupleOutOfRange: return "TupleOutOfRange";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ConditionsViolated: return "ConditionsViolated";
        case Errc::MarkingStuck: return "MarkingStuck";
        case Errc::NotNilpotent: return "NotNilpotent";
        case Errc::NoExponentElement: return "NoExponentElement";
        case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case Errc::ConstructionFailed: return "ConstructionFailed";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "UnknownError";
}

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table,
                                  std::string name, int size_cap) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw Error(Errc::BadParameter, "empty table");
    if (n > size_cap)
        throw Error(Errc::TooLarge,
                    "order " + std::to_string(n) + " exceeds cap " + std::to_string(size_cap));

    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::NotLatinSquare, "table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw Error(Errc::NotLatinSquare, "entry " + std::to_string(v) + " out of range");
            flat.push_back(v);
        }
    }

    // Latin square: every row and column a permutation.
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = flat[static_cast<size_t>(r) * n + c];
            if (seen[v])
                throw Error(Errc::NotLatinSquare, "row " + std::to_string(r) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            int v = flat[static_cast<size_t>(r) * n + c];
            if (seen[v])
                throw Error(Errc::NotLatinSquare, "column " + std::to_string(c) + " repeats " + std::to_string(v));
            seen[v] = 1;
        }
    }

    // Associativity, O(n^3) over the flat table.
    const int* t = flat.data();
    for (int a = 0; a < n; ++a) {
        const int* ta = t + static_cast<size_t>(a) * n;
        for (int b = 0; b < n; ++b) {
            const int ab = ta[b];
            const int* tab = t + static_cast<size_t>(ab) * n;
            const int* tb = t + static_cast<size_t>(b) * n;
            for (int c = 0; c < n; ++c) {
                if (tab[c] != ta[tb[c]])
                    throw Error(Errc::NotAssociative,
                                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                    std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                    std::to_string(b) + "*" + std::to_string(c) + ")");
            }
        }
    }

    for (int x = 0; x < n; ++x) {
        if (flat[static_cast<size_t>(0) * n + x] != x || flat[static_cast<size_t>(x) * n + 0] != x)
            throw Error(Errc::NoIdentityAtZero, "element 0 is not a two-sided identity");
    }

    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(flat);
    g.name_ = std::move(name);

    g.inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (g.mul(x, y) == 0) {
                g.inv_[x] = y;
                break;
            }
        }
        if (g.inv_[x] < 0)
            throw Error(Errc::NotLatinSquare, "no inverse for " + std::to_string(x));
    }

    g.elem_order_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int acc = x, k = 1;
        while (acc != 0) {
            acc = g.mul(acc, x);
            ++k;
        }
        if (n % k != 0)
            throw Error(Errc::InvalidInput, "element order does not divide group order");
        g.elem_order_[x] = k;
    }
    return g;
}

ElementId FiniteGroup::power(ElementId x, long long k) const {
    if (k < 0) {
        x = inverse(x);
        k = -k;
    }
    ElementId acc = 0, base = x;
    while (k > 0) {
        if (k & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

CyclicSubgroup cyclic_subgroup(const FiniteGroup& g, ElementId x) {
    if (x < 0 || x >= g.order())
        throw Error(Errc::BadParameter, "element id out of range");
    CyclicSubgroup s;
    s.generator = x;
    int acc = 0;
    do {
        s.members.push_back(acc);
        acc = g.mul(acc, x);
    } while (acc != 0);
    std::sort(s.members.begin(), s.members.end());
    return s;
}

std::vector<CyclicSubgroup> all_cyclic_subgroups(const FiniteGroup& g) {
    std::set<std::vector<ElementId>> seen;
    std::vector<CyclicSubgroup> out;
    for (int x = 0; x < g.order(); ++x) {
        CyclicSubgroup s = cyclic_subgroup(g, x);
        if (seen.insert(s.members).second)
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
    std::vector<CyclicSubgroup> all = all_cyclic_subgroups(g);
    std::vector<CyclicSubgroup> out;
    for (size_t i = 0; i < all.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < all.size() && maximal; ++j) {
            if (i == j || all[j].members.size() <= all[i].members.size())
                continue;
            if (std::includes(all[j].members.begin(), all[j].members.end(),
                              all[i].members.begin(), all[i].members.end()))
                maximal = false;
        }
        if (maximal)
            out.push_back(all[i]);
    }
    return out;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, int size_cap) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > size_cap)
        throw Error(Errc::ProductTooLarge,
                    "product order " + std::to_string(n) + " exceeds cap " + std::to_string(size_cap));
    const int nh = h.order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        const int g1 = a / nh, h1 = a % nh;
        for (int b = 0; b < n; ++b) {
            const int g2 = b / nh, h2 = b % nh;
            table[a][b] = g.mul(g1, g2) * nh + h.mul(h1, h2);
        }
    }
    std::string name = (g.name().empty() ? "G" : g.name()) + "x" + (h.name().empty() ? "H" : h.name());
    return FiniteGroup::validate(table, name, size_cap);
}

FiniteGroup cyclic(int n) {
    if (n < 1)
        throw Error(Errc::BadParameter, "cyclic order must be positive");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return FiniteGroup::validate(table, "C" + std::to_string(n));
}

FiniteGroup abelian(const std::vector<int>& factors) {
    if (factors.empty())
        throw Error(Errc::BadParameter, "abelian needs at least one factor");
    FiniteGroup g = cyclic(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, cyclic(factors[i]));
    std::string name;
    for (size_t i = 0; i < factors.size(); ++i)
        name += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
    g.set_name(name);
    return g;
}

FiniteGroup dihedral(int order) {
    if (order < 2 || order % 2 != 0)
        throw Error(Errc::BadParameter, "dihedral order must be even and >= 2");
    const int n = order / 2;
    // element i + n*f is r^i s^f with s r s = r^-1
    auto id = [n](int i, int f) { return i + n * f; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < n; ++i) {
        for (int f = 0; f < 2; ++f) {
            for (int j = 0; j < n; ++j) {
                for (int gfl = 0; gfl < 2; ++gfl) {
                    int ri = (f == 0) ? (i + j) % n : ((i - j) % n + n) % n;
                    table[id(i, f)][id(j, gfl)] = id(ri, f ^ gfl);
                }
            }
        }
    }
    return FiniteGroup::validate(table, "D" + std::to_string(order));
}

FiniteGroup generalized_quaternion(int order) {
    if (order < 8 || order % 4 != 0)
        throw Error(Errc::BadParameter, "generalized quaternion order must be 4n, n >= 2");
    const int m = order / 2; // a has order 2n = m, b^2 = a^n = a^{m/2}
    const int half = m / 2;
    auto id = [m](int i, int f) { return i + m * f; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < m; ++i) {
        for (int f = 0; f < 2; ++f) {
            for (int j = 0; j < m; ++j) {
                for (int gfl = 0; gfl < 2; ++gfl) {
                    int ri = (f == 0) ? (i + j) % m : ((i - j) % m + m) % m;
                    int rf = f ^ gfl;
                    if (f == 1 && gfl == 1)
                        ri = (ri + half) % m; // b^2 = a^{m/2}
                    table[id(i, f)][id(j, gfl)] = id(ri, rf);
                }
            }
        }
    }
    return FiniteGroup::validate(table, "Q" + std::to_string(order));
}

FiniteGroup klein() {
    FiniteGroup g = abelian({2, 2});
    g.set_name("Klein");
    return g;
}

FiniteGroup m16() {
    // x a^j x^-1 = a^{5j}, so a^i x^f * a^j x^g = a^{i + 5^f j} x^{f+g}
    auto id = [](int i, int f) { return i + 8 * f; };
    std::vector<std::vector<int>> table(16, std::vector<int>(16));
    for (int i = 0; i < 8; ++i)
        for (int f = 0; f < 2; ++f)
            for (int j = 0; j < 8; ++j)
                for (int g = 0; g < 2; ++g) {
                    int jj = (f == 0) ? j : (5 * j) % 8;
                    table[id(i, f)][id(j, g)] = id((i + jj) % 8, f ^ g);
                }
    return FiniteGroup::validate(table, "M16");
}

FiniteGroup heisenberg27() {
    // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b') over GF(3)
    auto id = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
    std::vector<std::vector<int>> table(27, std::vector<int>(27));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2)
                            table[id(a, b, c)][id(a2, b2, c2)] =
                                id((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    return FiniteGroup::validate(table, "Heis27");
}

int exponent(const FiniteGroup& g) {
    long long e = 1;
    for (int x = 0; x < g.order(); ++x)
        e = std::lcm(e, static_cast<long long>(g.element_order(x)));
    return static_cast<int>(e); // divides |G|
}

std::map<long long, int> factorize(long long n) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1)
        ++out[n];
    return out;
}

std::vector<SylowRecord> sylow_info(const FiniteGroup& g) {
    std::vector<SylowRecord> out;
    for (auto [p, k] : factorize(g.order())) {
        SylowRecord r;
        r.prime = p;
        r.multiplicity = k;
        r.sylow_order = 1;
        for (int i = 0; i < k; ++i)
            r.sylow_order *= p;
        for (int x = 0; x < g.order(); ++x) {
            long long o = g.element_order(x);
            while (o % p == 0)
                o /= p;
            if (o == 1) { // order is a power of p (including p^0 for the identity)
                ++r.p_power_element_count;
                if (g.element_order(x) == r.sylow_order)
                    r.cyclic_sylow = true;
            }
        }
        r.unique_sylow = (r.p_power_element_count == r.sylow_order);
        out.push_back(r);
    }
    return out;
}

bool is_nilpotent(const FiniteGroup& g) {
    for (const auto& r : sylow_info(g))
        if (!r.unique_sylow)
            return false;
    return true;
}

int non_cyclic_sylow_count(const FiniteGroup& g) {
    const auto info = sylow_info(g);
    for (const auto& r : info)
        if (!r.unique_sylow)
            throw Error(Errc::NotNilpotent, g.name() + " is not nilpotent");
    int count = 0;
    for (const auto& r : info)
        if (!r.cyclic_sylow)
            ++count;
    return count;
}

long long euler_phi(long long m) {
    if (m <= 0)
        throw Error(Errc::BadParameter, "euler_phi needs m >= 1");
    long long result = m;
    for (auto [p, k] : factorize(m)) {
        (void)k;
        result -= result / p;
    }
    return result;
}

FiniteGroup subgroup_from_elements(const FiniteGroup& g, std::vector<ElementId> elements,
                                   std::string name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
        throw Error(Errc::BadParameter, "subgroup must contain the identity");
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < elements.size(); ++i)
        local[elements[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int prod = g.mul(elements[a], elements[b]);
            if (local[prod] < 0)
                throw Error(Errc::BadParameter, "element set is not closed under multiplication");
            table[a][b] = local[prod];
        }
    return FiniteGroup::validate(table, std::move(name));
}

} // namespace epglab
