#pragma once

#include <effint/errors.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <vector>

namespace effint {

/// Planar tree with leaves 01 or 0; vertices of arity m ≠ 1 carry strings of permutations of 1..m
/// in one-line notation. Arity-0 vertices carry no string.
struct LaTree {
    enum class Kind { Leaf01, Leaf0, Vertex };
    Kind kind = Kind::Vertex;
    std::vector<std::vector<int>> strings;
    std::vector<LaTree> children;

    static LaTree leaf01() { return {Kind::Leaf01, {}, {}}; }
    static LaTree leaf0() { return {Kind::Leaf0, {}, {}}; }
    static LaTree zero() { return {Kind::Vertex, {}, {}}; }
    static LaTree vertex(std::vector<std::vector<int>> s, std::vector<LaTree> c)
    {
        return {Kind::Vertex, std::move(s), std::move(c)};
    }

    int arity() const { return static_cast<int>(children.size()); }

    /// Leaves plus arity-0 vertices: the number of inputs.
    int weight() const
    {
        if (kind != Kind::Vertex) return 1;
        if (children.empty()) return 1;
        int w = 0;
        for (const auto& c : children) w += c.weight();
        return w;
    }

    std::string encode() const
    {
        if (kind == Kind::Leaf01) return "01";
        if (kind == Kind::Leaf0) return "0";
        if (children.empty()) return "c0";
        std::string s = "v<";
        for (std::size_t i = 0; i < strings.size(); ++i) {
            if (i) s += ',';
            for (int x : strings[i]) s += std::to_string(x);
        }
        s += ">(";
        for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].encode();
        return s + ")";
    }

    bool operator==(const LaTree&) const = default;
};

struct LaprtViolation {
    std::string condition;  // ArityOne, BareLeaf, LeafOrder, StringLength, NotPermutation,
                            // RepeatedPermutation, Monotone, OrderedPartition
    std::string vertex;     // path of child indices from the root, e.g. "/3/1"
};

namespace detail {

inline bool is_perm(const std::vector<int>& s, int m)
{
    if (static_cast<int>(s.size()) != m) return false;
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int x : s) {
        if (x < 1 || x > m || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

inline int inverse_at(const std::vector<int>& s, int value)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == value) return static_cast<int>(i) + 1;
    return 0;
}

// I_i = σ_i({1, …, σ_i⁻¹(i+1) − 1}) with i 0-based.
inline std::vector<int> block_I(const std::vector<int>& s, int i)
{
    std::vector<int> out;
    int stop = inverse_at(s, i + 1);
    for (int k = 1; k < stop; ++k) out.push_back(s[static_cast<std::size_t>(k) - 1]);
    return out;
}

// Conditions on a vertex label given a, b; returns the first failing condition or "".
inline std::string check_strings(const std::vector<std::vector<int>>& strings, int m, int a, int b)
{
    if (static_cast<int>(strings.size()) != a) return "StringLength";
    for (const auto& s : strings)
        if (!is_perm(s, m)) return "NotPermutation";
    for (std::size_t i = 1; i < strings.size(); ++i)
        if (strings[i] == strings[i - 1]) return "RepeatedPermutation";
    const int c = m - a - b;
    if (c >= 1) {
        const auto& last = strings.back();
        for (int e = a + b + 1; e < m; ++e)
            if (!(inverse_at(last, e) < inverse_at(last, e + 1))) return "Monotone";
    }
    std::set<int> covered;
    int last_max = 0;
    for (int i = 0; i < a; ++i) {
        for (int x : block_I(strings[static_cast<std::size_t>(i)], i))
            if (x <= a || x > a + b) return "OrderedPartition";
        std::vector<int> J;
        for (int x : block_I(strings[static_cast<std::size_t>(i)], i))
            if (!covered.count(x)) J.push_back(x);
        if (!J.empty()) {
            int lo = *std::min_element(J.begin(), J.end());
            if (lo <= last_max) return "OrderedPartition";
            last_max = *std::max_element(J.begin(), J.end());
            covered.insert(J.begin(), J.end());
        }
    }
    if (static_cast<int>(covered.size()) != b) return "OrderedPartition";
    return "";
}

} // namespace detail

/// All violations, in preorder; empty means the tree is a valid LaPRT.
inline std::vector<LaprtViolation> validate_laprt(const LaTree& t)
{
    std::vector<LaprtViolation> out;
    if (t.kind != LaTree::Kind::Vertex) {
        out.push_back({"BareLeaf", "/"});
        return out;
    }
    std::function<void(const LaTree&, const std::string&)> walk = [&](const LaTree& v, const std::string& path) {
        if (v.kind != LaTree::Kind::Vertex) return;
        const int m = v.arity();
        const std::string where = path.empty() ? "/" : path;
        if (m == 1) {
            out.push_back({"ArityOne", where});
        } else if (m == 0) {
            if (!v.strings.empty()) out.push_back({"StringLength", where});
        } else {
            int a = 0, b = 0, k = 0;
            while (k < m && v.children[static_cast<std::size_t>(k)].kind == LaTree::Kind::Leaf01) ++a, ++k;
            while (k < m && v.children[static_cast<std::size_t>(k)].kind == LaTree::Kind::Leaf0) ++b, ++k;
            while (k < m && v.children[static_cast<std::size_t>(k)].kind == LaTree::Kind::Vertex) ++k;
            if (k != m || a < 1) out.push_back({"LeafOrder", where});
            else if (auto bad = detail::check_strings(v.strings, m, a, b); !bad.empty()) out.push_back({bad, where});
        }
        for (int i = 0; i < m; ++i) walk(v.children[static_cast<std::size_t>(i)], path + "/" + std::to_string(i + 1));
    };
    walk(t, "");
    return out;
}

namespace detail {

// All valid strings for a vertex with the given (m, a, b), by backtracking over σ₀, σ₁, ….
inline std::vector<std::vector<std::vector<int>>> laprt_strings(int m, int a, int b)
{
    static std::map<std::tuple<int, int, int>, std::vector<std::vector<std::vector<int>>>> cache;
    auto key = std::make_tuple(m, a, b);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    // Prefix feasibility: each I_i inside {a+1..a+b} and new elements above all earlier ones.
    std::function<void(std::set<int>&, int)> rec = [&](std::set<int>& covered, int last_max) {
        int i = static_cast<int>(cur.size());
        if (i == a) {
            if (check_strings(cur, m, a, b).empty()) out.push_back(cur);
            return;
        }
        for (const auto& s : perms) {
            if (!cur.empty() && cur.back() == s) continue;
            auto I = block_I(s, i);
            bool ok = true;
            for (int x : I) ok = ok && x > a && x <= a + b;
            if (!ok) continue;
            std::vector<int> J;
            for (int x : I)
                if (!covered.count(x)) J.push_back(x);
            int nmax = last_max;
            if (!J.empty()) {
                if (*std::min_element(J.begin(), J.end()) <= last_max) continue;
                nmax = *std::max_element(J.begin(), J.end());
            }
            for (int x : J) covered.insert(x);
            cur.push_back(s);
            rec(covered, nmax);
            cur.pop_back();
            for (int x : J) covered.erase(x);
        }
    };
    std::set<int> covered;
    rec(covered, a);
    cache[key] = out;
    return out;
}

} // namespace detail

/// Valid LaPRTs of weight exactly w (w ≤ 4), sorted by encoding.
inline std::vector<LaTree> enumerate_laprt(int w)
{
    if (w < 1) return {};
    if (w > 4) throw BoundError("enumerate_laprt: weight above 4");
    static std::map<int, std::vector<LaTree>> cache;
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    std::vector<LaTree> out;
    if (w == 1) out.push_back(LaTree::zero());
    for (int a = 1; a <= w; ++a)
        for (int b = 0; a + b <= w; ++b) {
            const int rest = w - a - b;
            // ordered sequences of subtrees with total weight `rest`
            std::vector<std::vector<LaTree>> seqs;
            std::vector<LaTree> seq;
            std::function<void(int)> fill = [&](int r) {
                if (r == 0) {
                    seqs.push_back(seq);
                    return;
                }
                for (int s = 1; s <= r; ++s)
                    for (const LaTree& t : enumerate_laprt(s)) {
                        seq.push_back(t);
                        fill(r - s);
                        seq.pop_back();
                    }
            };
            fill(rest);
            for (const auto& subs : seqs) {
                const int m = a + b + static_cast<int>(subs.size());
                if (m < 2) continue;
                std::vector<LaTree> cs;
                for (int k = 0; k < a; ++k) cs.push_back(LaTree::leaf01());
                for (int k = 0; k < b; ++k) cs.push_back(LaTree::leaf0());
                cs.insert(cs.end(), subs.begin(), subs.end());
                for (auto& strings : detail::laprt_strings(m, a, b)) out.push_back(LaTree::vertex(strings, cs));
            }
        }
    std::sort(out.begin(), out.end(), [](const LaTree& x, const LaTree& y) { return x.encode() < y.encode(); });
    cache[w] = out;
    return out;
}

/// Reference example: root ([1234],[2341]) over 01, 01, ([21]) over (01, 0), ([213]) over (01, 0, c0).
inline LaTree example_laprt()
{
    using L = LaTree;
    L v4 = L::vertex({{2, 1}}, {L::leaf01(), L::leaf0()});
    L v5 = L::vertex({{2, 1, 3}}, {L::leaf01(), L::leaf0(), L::zero()});
    return L::vertex({{1, 2, 3, 4}, {2, 3, 4, 1}}, {L::leaf01(), L::leaf01(), v4, v5});
}

} // namespace effint
