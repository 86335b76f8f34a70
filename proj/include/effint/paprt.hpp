#pragma once

#include <effint/errors.hpp>
#include <effint/tree.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace effint {

/// Planar tree plus a block index for each vertex, vertices numbered in preorder.
struct PartitionedTree {
    PlanarTree tree;
    std::vector<int> block;  // block[v] for the v-th vertex in preorder
    int block_count = 0;
};

struct PaprtViolation {
    std::string condition;  // "not-a-partition", "empty-block", "block-shape", "contraction"
    std::string detail;
};

namespace detail {

struct PaVertexInfo {
    int parent = -1;  // parent vertex, -1 at the root
    int arity = 0;
    std::vector<int> children;  // child vertices in planar order
    std::vector<int> slots;     // planar child slots: vertex id, or -1 for a leaf
};

inline std::vector<PaVertexInfo> pa_vertices(const PlanarTree& t)
{
    std::vector<PaVertexInfo> out;
    std::function<int(const PlanarTree&, int)> walk = [&](const PlanarTree& s, int parent) {
        int id = static_cast<int>(out.size());
        out.push_back({parent, s.arity(), {}, {}});
        for (const auto& c : s.children) {
            if (c.leaf) {
                out[static_cast<std::size_t>(id)].slots.push_back(-1);
            } else {
                int cid = walk(c, id);
                out[static_cast<std::size_t>(id)].children.push_back(cid);
                out[static_cast<std::size_t>(id)].slots.push_back(cid);
            }
        }
        return id;
    };
    if (!t.leaf) walk(t, -1);
    return out;
}

} // namespace detail

/// Checks the three defining conditions; an empty result means valid.
inline std::vector<PaprtViolation> validate_paprt(const PartitionedTree& p)
{
    std::vector<PaprtViolation> out;
    auto vs = detail::pa_vertices(p.tree);
    if (vs.empty()) {
        out.push_back({"not-a-partition", "tree has no vertex"});
        return out;
    }
    if (p.block.size() != vs.size() || p.block_count < 1) {
        out.push_back({"not-a-partition", "block list does not cover the vertices"});
        return out;
    }
    for (int b : p.block)
        if (b < 0 || b >= p.block_count) {
            out.push_back({"not-a-partition", "block index out of range"});
            return out;
        }
    std::vector<std::vector<int>> members(static_cast<std::size_t>(p.block_count));
    for (std::size_t v = 0; v < vs.size(); ++v) members[static_cast<std::size_t>(p.block[v])].push_back(static_cast<int>(v));
    for (int b = 0; b < p.block_count; ++b)
        if (members[static_cast<std::size_t>(b)].empty())
            out.push_back({"empty-block", "block " + std::to_string(b + 1) + " contains no vertex"});
    for (int b = 0; b < p.block_count; ++b) {
        const auto& mem = members[static_cast<std::size_t>(b)];
        if (mem.empty()) continue;
        bool single_zero = mem.size() == 1 && vs[static_cast<std::size_t>(mem[0])].arity == 0;
        if (!single_zero)
            for (int v : mem)
                if (vs[static_cast<std::size_t>(v)].arity < 2) {
                    out.push_back({"block-shape", "block " + std::to_string(b + 1) + " has a vertex of arity " +
                                                      std::to_string(vs[static_cast<std::size_t>(v)].arity)});
                    break;
                }
        int tops = 0;
        for (int v : mem) {
            int par = vs[static_cast<std::size_t>(v)].parent;
            if (par < 0 || p.block[static_cast<std::size_t>(par)] != b) ++tops;
        }
        if (tops != 1)
            out.push_back({"contraction", "block " + std::to_string(b + 1) + " is not a connected sub-tree"});
    }
    return out;
}

/// Abstract PaPRT: a block is an unordered tree of vertices, each with a leaf count,
/// and an ordered list of child blocks hanging from its vertices. The 0-corolla is `zero`.
struct PaBlock {
    bool zero = false;
    std::vector<int> parent;  // in-block parent, -1 for the block root (vertex 0)
    std::vector<int> leaves;
    std::vector<std::pair<int, PaBlock>> children;  // (attachment vertex, child block), planar order

    int size() const
    {
        if (zero) return 1;
        int s = 0;
        for (std::size_t v = 0; v < parent.size(); ++v) s += 1 + leaves[v];
        for (const auto& c : children) s += c.second.size();
        return s;
    }

    /// Canonical text, equal exactly for equivalent partitioned trees.
    std::string encode() const
    {
        if (zero) return "o";
        std::vector<std::vector<int>> kids(parent.size());
        for (std::size_t v = 1; v < parent.size(); ++v) kids[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
        std::function<std::string(int)> sig = [&](int v) {
            std::string s = "v{L" + std::to_string(leaves[static_cast<std::size_t>(v)]);
            std::string att;
            for (std::size_t k = 0; k < children.size(); ++k)
                if (children[k].first == v) att += (att.empty() ? "" : ",") + std::to_string(k + 1);
            if (!att.empty()) s += "@" + att;
            s += "}";
            std::vector<std::string> cs;
            for (int c : kids[static_cast<std::size_t>(v)]) cs.push_back(sig(c));
            std::sort(cs.begin(), cs.end());
            if (!cs.empty()) {
                s += "(";
                for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + cs[i];
                s += ")";
            }
            return s;
        };
        std::string s = sig(0);
        if (!children.empty()) {
            s += "[";
            for (std::size_t k = 0; k < children.size(); ++k) s += (k ? ";" : "") + children[k].second.encode();
            s += "]";
        }
        return s;
    }
};

/// Reads the abstract structure of a valid partitioned tree.
inline PaBlock abstract_paprt(const PartitionedTree& p)
{
    auto bad = validate_paprt(p);
    if (!bad.empty()) throw PreconditionError("abstract_paprt: " + bad.front().condition);
    auto vs = detail::pa_vertices(p.tree);
    std::function<PaBlock(int)> build = [&](int top) {
        PaBlock b;
        const int id = p.block[static_cast<std::size_t>(top)];
        if (vs[static_cast<std::size_t>(top)].arity == 0) {
            b.zero = true;
            return b;
        }
        std::map<int, int> local;
        std::function<void(int, int)> visit = [&](int v, int lp) {
            int me = static_cast<int>(b.parent.size());
            local[v] = me;
            b.parent.push_back(lp);
            b.leaves.push_back(0);
            for (int s : vs[static_cast<std::size_t>(v)].slots) {
                if (s < 0) ++b.leaves[static_cast<std::size_t>(me)];
                else if (p.block[static_cast<std::size_t>(s)] == id) visit(s, me);
                else b.children.emplace_back(me, build(s));
            }
        };
        visit(top, -1);
        return b;
    };
    return build(0);
}

/// A planar representative: in-block children first, then leaves, then child blocks.
/// When b interleaves child blocks of different in-block vertices, the depth-first
/// block order of the representative differs from the order stored in b.
inline PartitionedTree concrete_paprt(const PaBlock& root)
{
    PartitionedTree out;
    std::vector<int> blocks;
    int next_block = 0;
    std::function<PlanarTree(const PaBlock&, int, int)> vertex_tree;
    std::function<PlanarTree(const PaBlock&)> block_tree = [&](const PaBlock& b) {
        int id = next_block++;
        if (b.zero) {
            blocks.push_back(id);
            return PlanarTree::corolla(0);
        }
        return vertex_tree(b, 0, id);
    };
    vertex_tree = [&](const PaBlock& b, int v, int id) {
        blocks.push_back(id);
        std::vector<PlanarTree> cs;
        for (std::size_t u = 1; u < b.parent.size(); ++u)
            if (b.parent[u] == v) cs.push_back(vertex_tree(b, static_cast<int>(u), id));
        for (int k = 0; k < b.leaves[static_cast<std::size_t>(v)]; ++k) cs.push_back(PlanarTree::edge());
        for (const auto& [att, child] : b.children)
            if (att == v) cs.push_back(block_tree(child));
        return PlanarTree::corolla(std::move(cs));
    };
    out.tree = block_tree(root);
    out.block = blocks;
    out.block_count = next_block;
    return out;
}

/// All PaPRTs of size (vertices + leaves) exactly n, by canonical encoding.
inline std::vector<PaBlock> enumerate_paprt(int n)
{
    static std::map<int, std::vector<PaBlock>> cache;
    if (n < 1) return {};
    if (n > 9) throw BoundError("enumerate_paprt: size above 9");
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::map<std::string, PaBlock> found;
    if (n == 1) {
        PaBlock z;
        z.zero = true;
        found.emplace(z.encode(), z);
    }
    for (int k = 1; k < n; ++k) {
        for (const TreeNode& shape : enumerate_rooted_trees(k)) {
            std::vector<int> parent;
            std::function<void(const TreeNode&, int)> flat = [&](const TreeNode& t, int p) {
                int me = static_cast<int>(parent.size());
                parent.push_back(p);
                for (const auto& c : t.children) flat(c, me);
            };
            flat(shape, -1);
            std::vector<int> inner(static_cast<std::size_t>(k), 0);
            for (int v = 1; v < k; ++v) ++inner[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            const int budget = n - k;
            PaBlock b;
            b.parent = parent;
            b.leaves.assign(static_cast<std::size_t>(k), 0);
            auto finish = [&]() {
                std::vector<int> arity = inner;
                for (int v = 0; v < k; ++v) arity[static_cast<std::size_t>(v)] += b.leaves[static_cast<std::size_t>(v)];
                for (const auto& c : b.children) ++arity[static_cast<std::size_t>(c.first)];
                for (int a : arity)
                    if (a < 2) return;
                found.emplace(b.encode(), b);
            };
            std::function<void(int)> add_children = [&](int rest) {
                if (rest == 0) {
                    finish();
                    return;
                }
                for (int s = 1; s <= rest; ++s)
                    for (const PaBlock& child : enumerate_paprt(s))
                        for (int v = 0; v < k; ++v) {
                            b.children.emplace_back(v, child);
                            add_children(rest - s);
                            b.children.pop_back();
                        }
            };
            std::function<void(int, int)> add_leaves = [&](int v, int rest) {
                if (v == k) {
                    add_children(rest);
                    return;
                }
                for (int l = 0; l <= rest; ++l) {
                    b.leaves[static_cast<std::size_t>(v)] = l;
                    add_leaves(v + 1, rest - l);
                }
                b.leaves[static_cast<std::size_t>(v)] = 0;
            };
            add_leaves(0, budget);
        }
    }
    std::vector<PaBlock> out;
    for (auto& kv : found) out.push_back(std::move(kv.second));
    cache[n] = out;
    return out;
}

/// Reference example: ℓ₃(ℓ₃(x, z, x), x, ℓ₂(x, ℓ₂(x, x))) with blocks
/// {root}, {left vertex}, {0-corolla}, {right vertex, its child}.
inline PartitionedTree example_paprt()
{
    using P = PlanarTree;
    PartitionedTree p;
    P left = P::corolla({P::edge(), P::corolla(0), P::edge()});
    P right = P::corolla({P::edge(), P::corolla({P::edge(), P::edge()})});
    p.tree = P::corolla({left, P::edge(), right});
    // preorder: root, left, 0-corolla, right, right child
    p.block = {0, 1, 2, 3, 3};
    p.block_count = 4;
    return p;
}

} // namespace effint
