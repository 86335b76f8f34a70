#pragma once

#include <effint/errors.hpp>
#include <effint/rational.hpp>
#include <effint/signs.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace effint {

/// Recursive tree node; children are unordered once canonicalized.
struct TreeNode {
    int label = 0;
    std::vector<TreeNode> children;
};

inline int compare_trees(const TreeNode& a, const TreeNode& b)
{
    if (a.label != b.label) return a.label < b.label ? -1 : 1;
    if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (int c = compare_trees(a.children[i], b.children[i])) return c;
    return 0;
}

inline bool operator<(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) < 0; }
inline bool operator==(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) == 0; }
inline bool operator!=(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) != 0; }
inline bool operator>(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) > 0; }
inline bool operator<=(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) <= 0; }
inline bool operator>=(const TreeNode& a, const TreeNode& b) { return compare_trees(a, b) >= 0; }

inline int node_count(const TreeNode& t)
{
    int n = 1;
    for (const auto& c : t.children) n += node_count(c);
    return n;
}

inline std::string encode_tree(const TreeNode& t, const std::function<std::string(int, std::size_t)>& name)
{
    std::string s = name(t.label, t.children.size());
    if (t.children.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) s += ',';
        s += encode_tree(t.children[i], name);
    }
    return s + ')';
}

/// Tree given by parent pointers; vertex order is the order of the tensor factors.
struct FlatTree {
    std::vector<int> parent;  // -1 for the root
    std::vector<int> label;
    std::vector<int> degree;

    int size() const { return static_cast<int>(parent.size()); }
    int add(int p, int l, int d)
    {
        parent.push_back(p);
        label.push_back(l);
        degree.push_back(d);
        return size() - 1;
    }
};

struct CanonicalTree {
    TreeNode tree;
    int sign = 1;  // 0 when the element vanishes by graded symmetry
};

/// Sorts children recursively; the sign is the Koszul sign of reordering the
/// tensor factors from the flat order into the canonical preorder.
inline CanonicalTree canonicalize_tree(const FlatTree& f)
{
    const int n = f.size();
    if (n == 0) throw PreconditionError("canonicalize_tree: empty tree");
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
    int root = -1;
    for (int v = 0; v < n; ++v) {
        int p = f.parent[static_cast<std::size_t>(v)];
        if (p < 0) {
            if (root >= 0) throw PreconditionError("canonicalize_tree: several roots");
            root = v;
        } else {
            kids[static_cast<std::size_t>(p)].push_back(v);
        }
    }
    if (root < 0) throw PreconditionError("canonicalize_tree: no root");
    bool any_odd = false;
    for (int d : f.degree) any_odd = any_odd || (d & 1);

    struct Built {
        TreeNode node;
        std::vector<int> order;
        int degree = 0;
    };
    bool zero = false;
    std::function<Built(int)> build = [&](int v) {
        Built b;
        b.node.label = f.label[static_cast<std::size_t>(v)];
        b.degree = f.degree[static_cast<std::size_t>(v)];
        std::vector<Built> cs;
        for (int c : kids[static_cast<std::size_t>(v)]) cs.push_back(build(c));
        std::stable_sort(cs.begin(), cs.end(), [](const Built& x, const Built& y) { return x.node < y.node; });
        for (std::size_t i = 1; i < cs.size(); ++i)
            if ((cs[i].degree & 1) && cs[i].node == cs[i - 1].node) zero = true;
        b.order.push_back(v);
        for (auto& c : cs) {
            b.degree += c.degree;
            b.order.insert(b.order.end(), c.order.begin(), c.order.end());
            b.node.children.push_back(std::move(c.node));
        }
        return b;
    };
    Built top = build(root);
    if (static_cast<int>(top.order.size()) != n) throw PreconditionError("canonicalize_tree: not connected");
    CanonicalTree out{std::move(top.node), 1};
    if (zero) {
        out.sign = 0;
        return out;
    }
    if (any_odd) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(top.order[static_cast<std::size_t>(i)])] = i;
        out.sign = koszul_sign(pos, f.degree);
    }
    return out;
}

/// Preorder flattening of a tree; degree_of maps labels to degrees.
inline FlatTree flatten_tree(const TreeNode& t, const std::function<int(int)>& degree_of)
{
    FlatTree f;
    std::function<void(const TreeNode&, int)> walk = [&](const TreeNode& node, int parent) {
        int id = f.add(parent, node.label, degree_of(node.label));
        for (const auto& c : node.children) walk(c, id);
    };
    walk(t, -1);
    return f;
}

/// Automorphism group order of an unordered tree with labels.
inline Integer tree_automorphisms(const TreeNode& t)
{
    Integer a = 1;
    std::size_t run = 1;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        a *= tree_automorphisms(t.children[i]);
        if (i > 0 && t.children[i] == t.children[i - 1]) {
            ++run;
            a *= static_cast<unsigned long>(run);
        } else {
            run = 1;
        }
    }
    return a;
}

/// Canonical unlabelled rooted trees with exactly n vertices.
inline std::vector<TreeNode> enumerate_rooted_trees(int n)
{
    if (n < 1) return {};
    std::vector<std::vector<TreeNode>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1].push_back(TreeNode{});
    for (int m = 2; m <= n; ++m) {
        // Forests of total size m-1 as nondecreasing child sequences.
        std::vector<TreeNode> pool;
        for (int s = 1; s < m; ++s)
            for (const auto& t : by_size[static_cast<std::size_t>(s)]) pool.push_back(t);
        std::sort(pool.begin(), pool.end());
        std::vector<TreeNode> current;
        std::function<void(std::size_t, int)> pick = [&](std::size_t from, int remaining) {
            if (remaining == 0) {
                by_size[static_cast<std::size_t>(m)].push_back(TreeNode{0, current});
                return;
            }
            for (std::size_t i = from; i < pool.size(); ++i) {
                int sz = node_count(pool[i]);
                if (sz > remaining) continue;
                current.push_back(pool[i]);
                pick(i, remaining - sz);
                current.pop_back();
            }
        };
        pick(0, m - 1);
        std::sort(by_size[static_cast<std::size_t>(m)].begin(), by_size[static_cast<std::size_t>(m)].end());
    }
    return by_size[static_cast<std::size_t>(n)];
}

/// Planar rooted tree: a bare edge "|" or a vertex c_m with ordered children (m ≥ 0).
struct PlanarTree {
    bool leaf = true;
    std::vector<PlanarTree> children;

    static PlanarTree edge() { return PlanarTree{}; }
    static PlanarTree corolla(std::vector<PlanarTree> cs) { return PlanarTree{false, std::move(cs)}; }
    static PlanarTree corolla(int m) { return corolla(std::vector<PlanarTree>(static_cast<std::size_t>(m))); }

    int arity() const { return static_cast<int>(children.size()); }

    int vertex_count() const
    {
        if (leaf) return 0;
        int n = 1;
        for (const auto& c : children) n += c.vertex_count();
        return n;
    }
    int leaf_count() const
    {
        if (leaf) return 1;
        int n = 0;
        for (const auto& c : children) n += c.leaf_count();
        return n;
    }
    std::string encode() const
    {
        if (leaf) return "|";
        std::string s = "c" + std::to_string(children.size());
        if (children.empty()) return s;
        s += '(';
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i) s += ',';
            s += children[i].encode();
        }
        return s + ')';
    }
    bool operator==(const PlanarTree&) const = default;
};

/// C(|) = 1, C(c_m) = m!, C(τ) = m!·|τ|·∏ C(τᵢ) with |τ| the vertex count.
inline Integer coefficient_C(const PlanarTree& t)
{
    if (t.leaf) return 1;
    Integer c = factorial(static_cast<unsigned>(t.arity())) * t.vertex_count();
    for (const auto& s : t.children) c *= coefficient_C(s);
    return c;
}

/// Planar trees with leaves + vertices ≤ max_size (vertices of every arity ≥ 0).
inline std::vector<PlanarTree> enumerate_planar_trees(int max_size)
{
    // trees[s]: trees of size exactly s.
    std::vector<std::vector<PlanarTree>> trees(static_cast<std::size_t>(std::max(max_size, 0)) + 1);
    for (int s = 1; s <= max_size; ++s) {
        if (s == 1) trees[1].push_back(PlanarTree::edge());
        // Root vertex uses one unit; children form an ordered sequence of total size s-1.
        std::vector<PlanarTree> seq;
        std::function<void(int)> fill = [&](int remaining) {
            if (remaining == 0) {
                trees[static_cast<std::size_t>(s)].push_back(PlanarTree::corolla(seq));
                return;
            }
            for (int k = 1; k <= remaining; ++k)
                for (const auto& t : trees[static_cast<std::size_t>(k)]) {
                    seq.push_back(t);
                    fill(remaining - k);
                    seq.pop_back();
                }
        };
        fill(s - 1);
    }
    std::vector<PlanarTree> out;
    for (int s = 1; s <= max_size; ++s)
        for (auto& t : trees[static_cast<std::size_t>(s)]) out.push_back(std::move(t));
    return out;
}

} // namespace effint
