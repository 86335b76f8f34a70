#pragma once

#include <effint/graph.hpp>

#include <set>
#include <vector>

namespace effint {

/// A group of `count` interchangeable vertices placed on `level` (1 = bottom).
struct LevelRole {
    int level = 1;
    int count = 0;
};

/// Canonical graph whose vertex colours are role indices.
struct LeveledGraph {
    Digraph graph;
    std::vector<int> level;
    Integer automorphisms = 1;

    int role_count(int role) const
    {
        int c = 0;
        for (int x : graph.color) c += (x == role);
        return c;
    }
};

/// Level-preserving isomorphism classes of connected graphs whose edges strictly descend.
inline std::vector<LeveledGraph> enumerate_leveled(const std::vector<LevelRole>& roles,
                                                   int bound = kGraphBruteForceBound)
{
    int total = 0, max_level = 0;
    std::vector<int> per_level(4, 0);
    for (const auto& r : roles) {
        if (r.level < 1 || r.level > 3) throw PreconditionError("enumerate_leveled: levels must lie in 1..3");
        if (r.count < 0) throw PreconditionError("enumerate_leveled: negative vertex count");
        total += r.count;
        per_level[static_cast<std::size_t>(r.level)] += r.count;
        if (r.count > 0) max_level = std::max(max_level, r.level);
    }
    bool three = false;
    for (const auto& r : roles) three = three || r.level == 3;
    if (three && per_level[2] != 1)
        throw PreconditionError("enumerate_leveled: three-level shapes need exactly one middle vertex");
    if (total > bound || total > kGraphBruteForceBound)
        throw BoundError("enumerate_leveled: too many vertices for brute force");
    if (total == 0) return {};
    Digraph base = Digraph::empty(total);
    std::vector<int> level;
    for (std::size_t r = 0; r < roles.size(); ++r)
        for (int k = 0; k < roles[r].count; ++k) {
            base.color[level.size()] = static_cast<int>(r);
            level.push_back(roles[r].level);
        }
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < total; ++u)
        for (int v = 0; v < total; ++v)
            if (level[static_cast<std::size_t>(u)] > level[static_cast<std::size_t>(v)]) slots.emplace_back(u, v);
    if (slots.size() > 24) throw BoundError("enumerate_leveled: too many candidate edges");
    std::set<Digraph> seen;
    std::vector<LeveledGraph> out;
    const std::uint32_t subsets = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        Digraph g = base;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1u) g.add_edge(slots[k].first, slots[k].second);
        if (!is_connected(g)) continue;
        CanonicalGraph c = canonical_form(g);
        if (!seen.insert(c.graph).second) continue;
        LeveledGraph lg{c.graph, {}, c.automorphisms};
        for (int v = 0; v < total; ++v)
            lg.level.push_back(roles[static_cast<std::size_t>(c.graph.color[static_cast<std::size_t>(v)])].level);
        out.push_back(std::move(lg));
    }
    std::sort(out.begin(), out.end(), [](const LeveledGraph& a, const LeveledGraph& b) { return a.graph < b.graph; });
    return out;
}

/// Roles: 0 = bottom (level 1), 1 = top (level 2).
inline std::vector<LeveledGraph> enumerate_two_leveled(int bottom, int top)
{
    return enumerate_leveled({{1, bottom}, {2, top}});
}

/// Roles: 0 = bottom, 1 = the single middle vertex, 2 = top.
inline std::vector<LeveledGraph> enumerate_bowtie_shapes(int bottom, int top)
{
    return enumerate_leveled({{1, bottom}, {2, 1}, {3, top}});
}

/// Roles: 0 = the marked bottom vertex, 1 = other bottom vertices, 2 = top.
inline std::vector<LeveledGraph> enumerate_marked_two_leveled(int other_bottom, int top)
{
    return enumerate_leveled({{1, 1}, {1, other_bottom}, {2, top}});
}

} // namespace effint
