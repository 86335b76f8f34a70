#pragma once

#include <effint/liegraph.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace effint::oracle {


// All labelled connected simple acyclic digraphs on n vertices, one choice per vertex pair.
inline std::vector<Digraph> labelled_graphs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Digraph> out;
    std::vector<int> pick(pairs.size(), 0);
    while (true) {
        Digraph g = Digraph::empty(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (pick[k] == 1) g.add_edge(pairs[k].first, pairs[k].second);
            if (pick[k] == 2) g.add_edge(pairs[k].second, pairs[k].first);
        }
        if (is_connected(g) && is_acyclic(g)) out.push_back(g);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == 3) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

// Minimum edge list over all relabellings, with the colours carried along.
inline std::pair<std::vector<int>, std::vector<std::pair<int, int>>> min_relabel(const Digraph& g)
{
    std::vector<int> p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    std::pair<std::vector<int>, std::vector<std::pair<int, int>>> best;
    bool first = true;
    do {
        std::vector<int> cols(static_cast<std::size_t>(g.n));
        for (int v = 0; v < g.n; ++v) cols[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = g.color[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g.edges()) es.emplace_back(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        std::sort(es.begin(), es.end());
        auto cand = std::make_pair(cols, es);
        if (first || cand < best) best = cand;
        first = false;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline long brute_linear_extensions(const Digraph& g)
{
    std::vector<int> p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        std::vector<int> pos(static_cast<std::size_t>(g.n));
        for (int k = 0; k < g.n; ++k) pos[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])] = k;
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)];
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Partial composition by filtering every way of joining the two vertex sets.
inline OperadElement oracle_compose(const Digraph& f, int i, const Digraph& g)
{
    const int m = f.n, n = g.n, slot = i - 1, total = m + n - 1;
    auto outer = [&](int v) { return v < slot ? v : v + n - 1; };
    std::vector<int> others;
    for (int v = 0; v < m; ++v)
        if (v != slot) others.push_back(v);
    std::vector<std::pair<int, int>> cross;  // (f vertex, g vertex)
    for (int u : others)
        for (int k = 0; k < n; ++k) cross.emplace_back(u, k);
    OperadElement out(operad_alphabet(), kOperadArityBound);
    std::vector<int> pick(cross.size(), 0);
    while (true) {
        Digraph h = Digraph::empty(total);
        for (auto [u, v] : f.edges())
            if (u != slot && v != slot) h.add_edge(outer(u), outer(v));
        for (auto [u, v] : g.edges()) h.add_edge(u + slot, v + slot);
        for (std::size_t c = 0; c < cross.size(); ++c) {
            int u = outer(cross[c].first), k = cross[c].second + slot;
            if (pick[c] == 1) h.add_edge(u, k);
            if (pick[c] == 2) h.add_edge(k, u);
        }
        bool ok = true;
        for (int u : others) {
            bool down = false, up = false;
            for (int k = 0; k < n; ++k) {
                down = down || h.has_edge(outer(u), k + slot);
                up = up || h.has_edge(k + slot, outer(u));
            }
            ok = ok && down == f.has_edge(u, slot) && up == f.has_edge(slot, u);
        }
        if (ok) out.add_term(LabelledGraph{h}, 1);
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == 3) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    return out;
}

// Labelled graphs on 1..n vertices.
inline const std::vector<Digraph>& graphs_up_to(int n)
{
    static std::map<int, std::vector<Digraph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Digraph> all;
    for (int k = 1; k <= n; ++k) {
        auto v = labelled_graphs(k);
        all.insert(all.end(), v.begin(), v.end());
    }
    return cache[n] = all;
}

inline OperadElement single(const Digraph& g) { return operad_element(g); }

// First failure of (f ∘ᵢ g) ∘_{i−1+j} h = f ∘ᵢ (g ∘ⱼ h) over labelled graphs with at most
// `inputs` vertices each and composites of arity at most `bound`; empty when all hold.
inline std::string sequential_failure(int inputs, int bound)
{
    const auto& gs = graphs_up_to(inputs);
    for (const auto& f : gs)
        for (const auto& g : gs)
            for (const auto& h : gs) {
                if (f.n + g.n + h.n - 2 > bound) continue;
                for (int i = 1; i <= f.n; ++i)
                    for (int j = 1; j <= g.n; ++j)
                        if (!(compose(single(f), i, partial_composition(g, j, h)) ==
                              compose(partial_composition(f, i, g), i - 1 + j, single(h))))
                            return f.encode() + " o" + std::to_string(i) + " (" + g.encode() + " o" + std::to_string(j) + " " +
                                   h.encode() + ")";
            }
    return "";
}

// First failure of (f ∘ᵢ g) ∘_{k−1+|g|} h = (f ∘ₖ h) ∘ᵢ g for i < k.
inline std::string parallel_failure(int inputs, int bound)
{
    const auto& gs = graphs_up_to(inputs);
    for (const auto& f : gs)
        for (const auto& g : gs)
            for (const auto& h : gs) {
                if (f.n + g.n + h.n - 2 > bound) continue;
                for (int i = 1; i <= f.n; ++i)
                    for (int k = i + 1; k <= f.n; ++k)
                        if (!(compose(partial_composition(f, i, g), k - 1 + g.n, single(h)) ==
                              compose(partial_composition(f, k, h), i, single(g))))
                            return f.encode() + " slots " + std::to_string(i) + "," + std::to_string(k) + " with " + g.encode() +
                                   " and " + h.encode();
            }
    return "";
}

// First failure of the unit laws 1 ∘ g = g = g ∘ᵢ 1.
inline std::string unit_failure(int inputs)
{
    Digraph one = Digraph::empty(1);
    for (const auto& g : graphs_up_to(inputs)) {
        if (!(partial_composition(one, 1, g) == single(g))) return "1 o1 " + g.encode();
        for (int i = 1; i <= g.n; ++i)
            if (!(partial_composition(g, i, one) == single(g))) return g.encode() + " o" + std::to_string(i) + " 1";
    }
    return "";
}

// First failure of (f·σ) ∘_{σ(i)} (g·τ) = (f ∘ᵢ g)·σ∘ᵢτ over composites of arity at most `bound`.
inline std::string equivariance_failure(int inputs, int bound)
{
    const auto& gs = graphs_up_to(inputs);
    for (const auto& f : gs)
        for (const auto& g : gs) {
            const int m = f.n, n = g.n;
            if (m + n - 1 > bound) continue;
            std::vector<int> sigma(static_cast<std::size_t>(m)), tau(static_cast<std::size_t>(n));
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                std::iota(tau.begin(), tau.end(), 0);
                do {
                    for (int i = 1; i <= m; ++i) {
                        const int slot = i - 1, target = sigma[static_cast<std::size_t>(slot)];
                        // block of i moves to the block at σ(i), τ acts inside it
                        std::vector<int> big(static_cast<std::size_t>(m + n - 1));
                        for (int u = 0; u < m + n - 1; ++u) {
                            if (u >= slot && u < slot + n) {
                                big[static_cast<std::size_t>(u)] = target + tau[static_cast<std::size_t>(u - slot)];
                            } else {
                                int v = u < slot ? u : u - n + 1;
                                int p = sigma[static_cast<std::size_t>(v)];
                                big[static_cast<std::size_t>(u)] = p < target ? p : p + n - 1;
                            }
                        }
                        if (!(compose(act(single(f), sigma), target + 1, act(single(g), tau)) == act(partial_composition(f, i, g), big)))
                            return f.encode() + " o" + std::to_string(i) + " " + g.encode();
                    }
                } while (std::next_permutation(tau.begin(), tau.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    return "";
}

// First pair whose partial composition differs from the filtering oracle.
inline std::string composition_oracle_failure(int inputs, int bound)
{
    for (const auto& f : graphs_up_to(inputs))
        for (const auto& g : graphs_up_to(inputs)) {
            if (f.n + g.n - 1 > bound) continue;
            for (int i = 1; i <= f.n; ++i)
                if (!(partial_composition(f, i, g) == oracle_compose(f, i, g))) return f.encode() + " o" + std::to_string(i) + " " + g.encode();
        }
    return "";
}

} // namespace effint::oracle
