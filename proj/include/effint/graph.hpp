#pragma once

#include <effint/errors.hpp>
#include <effint/rational.hpp>
#include <effint/signs.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace effint {

inline constexpr int kGraphBruteForceBound = 8;

/// Directed graph on vertices 0..n-1 with vertex colours; an edge i→j means i lies above j.
struct Digraph {
    int n = 0;
    std::vector<int> color;
    std::vector<std::uint32_t> out;

    static Digraph empty(int vertices, int c = 0)
    {
        Digraph g;
        g.n = vertices;
        g.color.assign(static_cast<std::size_t>(vertices), c);
        g.out.assign(static_cast<std::size_t>(vertices), 0u);
        return g;
    }

    bool has_edge(int i, int j) const { return (out[static_cast<std::size_t>(i)] >> j) & 1u; }
    void add_edge(int i, int j) { out[static_cast<std::size_t>(i)] |= (1u << j); }
    void remove_edge(int i, int j) { out[static_cast<std::size_t>(i)] &= ~(1u << j); }

    std::uint32_t in_mask(int j) const
    {
        std::uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (has_edge(i, j)) m |= (1u << i);
        return m;
    }
    int out_degree(int i) const { return __builtin_popcount(out[static_cast<std::size_t>(i)]); }
    int in_degree(int j) const { return __builtin_popcount(in_mask(j)); }
    int edge_count() const
    {
        int e = 0;
        for (int i = 0; i < n; ++i) e += out_degree(i);
        return e;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (has_edge(i, j)) es.emplace_back(i, j);
        return es;
    }

    /// "n; e(a,b), e(c,d)" with 1-based vertices.
    std::string encode() const
    {
        std::string s = std::to_string(n) + ";";
        bool first = true;
        for (auto [a, b] : edges()) {
            s += first ? " " : ", ";
            first = false;
            s += "e(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        }
        return s;
    }

    auto operator<=>(const Digraph&) const = default;
};

/// Parses "n; e(a,b), ..." (1-based); colours default to 0.
inline Digraph parse_digraph(const std::string& text)
{
    auto semi = text.find(';');
    if (semi == std::string::npos) throw PreconditionError("graph encoding lacks ';'");
    int n = 0;
    try {
        n = std::stoi(text.substr(0, semi));
    } catch (const std::exception&) {
        throw PreconditionError("graph encoding: bad vertex count");
    }
    if (n < 1 || n > 32) throw PreconditionError("graph encoding: vertex count out of range");
    Digraph g = Digraph::empty(n);
    std::size_t pos = semi + 1;
    while (true) {
        auto e = text.find("e(", pos);
        if (e == std::string::npos) break;
        auto close = text.find(')', e);
        if (close == std::string::npos) throw PreconditionError("graph encoding: unterminated edge");
        std::string body = text.substr(e + 2, close - e - 2);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw PreconditionError("graph encoding: malformed edge");
        int a = std::stoi(body.substr(0, comma)), b = std::stoi(body.substr(comma + 1));
        if (a < 1 || b < 1 || a > n || b > n || a == b) throw PreconditionError("graph encoding: bad edge endpoint");
        if (g.has_edge(a - 1, b - 1) || g.has_edge(b - 1, a - 1))
            throw PreconditionError("graph encoding: multiple edges between one pair");
        g.add_edge(a - 1, b - 1);
        pos = close + 1;
    }
    return g;
}

inline bool is_connected(const Digraph& g)
{
    if (g.n == 0) return false;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) next |= g.out[static_cast<std::size_t>(v)] | g.in_mask(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == ((g.n == 32) ? 0xffffffffu : ((1u << g.n) - 1u));
}

inline bool is_acyclic(const Digraph& g)
{
    std::uint32_t removed = 0;
    for (int round = 0; round < g.n; ++round) {
        int pick = -1;
        for (int v = 0; v < g.n && pick < 0; ++v)
            if (!((removed >> v) & 1u) && (g.in_mask(v) & ~removed) == 0) pick = v;
        if (pick < 0) return false;
        removed |= (1u << pick);
    }
    return true;
}

inline bool is_simple(const Digraph& g)
{
    for (int i = 0; i < g.n; ++i) {
        if (g.has_edge(i, i)) return false;
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j) && g.has_edge(j, i)) return false;
    }
    return true;
}

inline void validate_dsgra(const Digraph& g)
{
    if (g.n < 1) throw PreconditionError("graph has no vertices");
    if (!is_simple(g)) throw PreconditionError("graph has a loop or a double edge");
    if (!is_acyclic(g)) throw PreconditionError("graph has a directed cycle");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

struct CanonicalGraph {
    Digraph graph;
    std::vector<int> position;  // original vertex → canonical index
    Integer automorphisms = 1;  // colour-preserving
    int sign = 1;               // Koszul sign of the reordering; 0 if an odd automorphism exists
};

namespace detail {

// Iterated colour refinement; returns isomorphism-invariant class ids.
inline std::vector<int> refine_classes(const Digraph& g)
{
    std::vector<int> cls(g.color);
    std::size_t count = 0;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> outs, ins;
            for (int w = 0; w < g.n; ++w) {
                if (g.has_edge(v, w)) outs.push_back(cls[static_cast<std::size_t>(w)]);
                if (g.has_edge(w, v)) ins.push_back(cls[static_cast<std::size_t>(w)]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(cls[static_cast<std::size_t>(v)]);
            s.push_back(static_cast<int>(outs.size()));
            s.insert(s.end(), outs.begin(), outs.end());
            s.push_back(static_cast<int>(ins.size()));
            s.insert(s.end(), ins.begin(), ins.end());
        }
        std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < g.n; ++v)
            cls[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
        if (distinct.size() == count) break;
        count = distinct.size();
    }
    return cls;
}

// Visits every bijection vertex → position that keeps refined classes in sorted blocks.
inline void for_each_class_bijection(const std::vector<int>& cls, const std::function<void(const std::vector<int>&)>& f)
{
    const int n = static_cast<int>(cls.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cls[static_cast<std::size_t>(a)] < cls[static_cast<std::size_t>(b)]; });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && cls[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                            cls[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
            f(pos);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
}

inline std::uint64_t adjacency_code(const Digraph& g, const std::vector<int>& pos)
{
    std::uint64_t code = 0;
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) {
                int bit = pos[static_cast<std::size_t>(i)] * n + pos[static_cast<std::size_t>(j)];
                code |= (std::uint64_t{1} << (63 - bit));
            }
    return code;
}

inline Digraph relabel(const Digraph& g, const std::vector<int>& pos)
{
    Digraph h = Digraph::empty(g.n);
    for (int v = 0; v < g.n; ++v) h.color[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = g.color[static_cast<std::size_t>(v)];
    for (auto [a, b] : g.edges()) h.add_edge(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
    return h;
}

} // namespace detail

/// Colour-preserving relabelling with minimal adjacency code. When `parity` is given
/// (degree of each vertex's tensor factor) the sign of the reordering is reported.
inline CanonicalGraph canonical_form(const Digraph& g, const std::vector<int>* parity = nullptr,
                                     int bound = kGraphBruteForceBound)
{
    if (g.n > bound || g.n > 8)
        throw BoundError("graph with " + std::to_string(g.n) + " vertices exceeds the brute-force bound");
    CanonicalGraph out;
    if (g.n == 0) {
        out.graph = g;
        return out;
    }
    bool odd = false;
    if (parity)
        for (int d : *parity) odd = odd || (d & 1);
    std::vector<int> cls = detail::refine_classes(g);
    std::uint64_t best = ~std::uint64_t{0};
    bool have = false;
    std::vector<int> best_pos;
    long long count = 0;
    int sign = 0;
    bool zero = false;
    detail::for_each_class_bijection(cls, [&](const std::vector<int>& pos) {
        std::uint64_t code = detail::adjacency_code(g, pos);
        if (!have || code < best) {
            have = true;
            best = code;
            best_pos = pos;
            count = 1;
            zero = false;
            sign = odd ? koszul_sign(pos, *parity) : 1;
        } else if (code == best) {
            ++count;
            if (odd && koszul_sign(pos, *parity) != sign) zero = true;
        }
    });
    out.graph = detail::relabel(g, best_pos);
    out.position = best_pos;
    out.automorphisms = static_cast<long>(count);
    out.sign = zero ? 0 : sign;
    return out;
}

inline Digraph canonicalize_graph(const Digraph& g, int bound = kGraphBruteForceBound)
{
    validate_dsgra(g);
    return canonical_form(g, nullptr, bound).graph;
}

/// Number of colour-preserving permutations fixing the edge set, by exhaustive search.
inline Integer automorphism_order(const Digraph& g, int bound = kGraphBruteForceBound)
{
    if (g.n > bound) throw BoundError("automorphism_order: graph exceeds the brute-force bound");
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<std::size_t>(i)] = i;
    long long count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < g.n && ok; ++v)
            ok = g.color[static_cast<std::size_t>(v)] == g.color[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
        for (int i = 0; i < g.n && ok; ++i)
            for (int j = 0; j < g.n && ok; ++j)
                ok = g.has_edge(i, j) == g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Integer(static_cast<long>(count));
}

/// Total orders of the vertices with every edge pointing from an earlier to a later vertex.
inline Integer linear_extension_count(const Digraph& g)
{
    if (!is_acyclic(g)) throw PreconditionError("linear_extension_count: graph has a directed cycle");
    if (g.n > 24) throw BoundError("linear_extension_count: too many vertices");
    const std::uint32_t full = (1u << g.n) - 1u;
    std::vector<Integer> ways(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint32_t> above(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) above[static_cast<std::size_t>(v)] = g.in_mask(v);
    ways[0] = 1;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (ways[m] == 0) continue;
        for (int v = 0; v < g.n; ++v)
            if (!((m >> v) & 1u) && (above[static_cast<std::size_t>(v)] & ~m) == 0) ways[m | (1u << v)] += ways[m];
    }
    return ways[full];
}

/// Isomorphism classes of connected simple acyclic digraphs on n vertices, sorted.
inline std::vector<Digraph> enumerate_dsgra(int n, int bound = 6)
{
    if (n < 1) throw PreconditionError("enumerate_dsgra: n must be positive");
    if (n > bound || n > kGraphBruteForceBound)
        throw BoundError("enumerate_dsgra: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
    std::vector<Digraph> level{Digraph::empty(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<Digraph> next;
        for (const Digraph& base : level) {
            int combos = 1;
            for (int i = 0; i < m - 1; ++i) combos *= 3;
            for (int c = 1; c < combos; ++c) {
                Digraph g = Digraph::empty(m);
                for (auto [a, b] : base.edges()) g.add_edge(a, b);
                int code = c;
                for (int v = 0; v < m - 1; ++v, code /= 3) {
                    if (code % 3 == 1) g.add_edge(m - 1, v);
                    if (code % 3 == 2) g.add_edge(v, m - 1);
                }
                if (!is_acyclic(g)) continue;
                next.insert(canonical_form(g).graph);
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

} // namespace effint
