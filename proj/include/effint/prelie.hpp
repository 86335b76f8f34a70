#pragma once

#include <effint/assoc.hpp>
#include <effint/series.hpp>
#include <effint/tree.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace effint {

/// Rooted tree with every vertex decorated by a generator; label −1 is the unit.
struct PreLieTree {
    TreeNode root{-1, {}};

    static constexpr std::string_view family = "rooted-tree";

    bool is_unit() const { return root.label < 0; }
    int weight(const Alphabet& a) const { return is_unit() ? 0 : fold(root, a, true); }
    int degree(const Alphabet& a) const { return is_unit() ? 0 : fold(root, a, false); }
    std::string encode(const Alphabet& a) const
    {
        if (is_unit()) return "1";
        return encode_tree(root, [&](int l, std::size_t) { return a[l].name; });
    }
    friend bool operator<(const PreLieTree& x, const PreLieTree& y) { return x.root < y.root; }
    friend bool operator==(const PreLieTree& x, const PreLieTree& y) { return x.root == y.root; }
    friend bool operator!=(const PreLieTree& x, const PreLieTree& y) { return !(x == y); }
    friend bool operator>(const PreLieTree& x, const PreLieTree& y) { return y < x; }
    friend bool operator<=(const PreLieTree& x, const PreLieTree& y) { return !(y < x); }
    friend bool operator>=(const PreLieTree& x, const PreLieTree& y) { return !(x < y); }

private:
    static int fold(const TreeNode& t, const Alphabet& a, bool w)
    {
        int s = w ? a[t.label].weight : a[t.label].degree;
        for (const auto& c : t.children) s += fold(c, a, w);
        return s;
    }
};

using TreeSeries = Series<PreLieTree>;

inline TreeSeries tree_unit(const AlphabetPtr& a, int N) { return TreeSeries::single(a, N, PreLieTree{}); }

inline TreeSeries tree_generator(const AlphabetPtr& a, int N, const std::string& name)
{
    return TreeSeries::single(a, N, PreLieTree{TreeNode{a->index(name), {}}});
}

/// Parses "x(y,z(w))" or "1".
inline PreLieTree parse_prelie_tree(const Alphabet& a, const std::string& text)
{
    if (text == "1") return PreLieTree{};
    std::size_t pos = 0;
    std::function<TreeNode()> node = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '(' && text[pos] != ',' && text[pos] != ')') ++pos;
        TreeNode t{a.index(text.substr(start, pos - start)), {}};
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            while (true) {
                t.children.push_back(node());
                if (pos >= text.size()) throw PreconditionError("unterminated tree encoding");
                if (text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
            }
        }
        return t;
    };
    TreeNode t = node();
    if (pos != text.size()) throw PreconditionError("trailing characters in tree encoding");
    std::sort(t.children.begin(), t.children.end());
    std::function<void(TreeNode&)> sort_all = [&](TreeNode& n) {
        for (auto& c : n.children) sort_all(c);
        std::sort(n.children.begin(), n.children.end());
    };
    sort_all(t);
    return PreLieTree{t};
}

namespace detail {

inline FlatTree flat_of(const PreLieTree& t, const Alphabet& a)
{
    return flatten_tree(t.root, [&](int l) { return a[l].degree; });
}

inline void add_flat(TreeSeries& out, const FlatTree& f, const Rational& c)
{
    CanonicalTree ct = canonicalize_tree(f);
    if (ct.sign == 0) return;
    out.add_term(PreLieTree{std::move(ct.tree)}, ct.sign > 0 ? c : -c);
}

// Appends tree t (flat, preorder) below vertex `attach`; returns the id of its root.
inline int append_flat(FlatTree& f, const FlatTree& t, int attach)
{
    int offset = f.size();
    for (int v = 0; v < t.size(); ++v) {
        int p = t.parent[static_cast<std::size_t>(v)];
        f.add(p < 0 ? attach : p + offset, t.label[static_cast<std::size_t>(v)], t.degree[static_cast<std::size_t>(v)]);
    }
    return offset;
}

inline void require_tree_degree(const TreeSeries& s, int degree, const char* what)
{
    for (const auto& kv : s)
        if (s.degree_of(kv.first) != degree)
            throw PreconditionError(std::string(what) + ": expected degree " + std::to_string(degree) + ", found " +
                                    kv.first.encode(s.letters()));
}

inline void require_no_tree_constant(const TreeSeries& s, const char* what)
{
    if (s.coeff(PreLieTree{}) != 0) throw PreconditionError(std::string(what) + ": constant term present");
}

inline TreeSeries grouplike_part(const TreeSeries& g, const char* what)
{
    if (g.coeff(PreLieTree{}) != 1) throw PreconditionError(std::string(what) + ": constant term must be 1");
    return g - tree_unit(g.alphabet(), g.truncation());
}

} // namespace detail

/// s⋆t = Σ_v s with t grafted at v; the unit is a left unit only.
inline TreeSeries prelie_mul(const TreeSeries& a, const TreeSeries& b)
{
    a.check_compatible(b);
    detail::require_no_tree_constant(b, "prelie_mul: right factor");
    TreeSeries r = a.zero_like();
    const Alphabet& al = a.letters();
    const int N = a.truncation();
    for (const auto& [s, cs] : a) {
        if (s.is_unit()) {
            for (const auto& [t, ct] : b) r.add_term(t, cs * ct);
            continue;
        }
        FlatTree fs = detail::flat_of(s, al);
        int ws = s.weight(al);
        for (const auto& [t, ct] : b) {
            if (ws + t.weight(al) > N) continue;
            FlatTree ft = detail::flat_of(t, al);
            for (int v = 0; v < fs.size(); ++v) {
                FlatTree f = fs;
                detail::append_flat(f, ft, v);
                detail::add_flat(r, f, cs * ct);
            }
        }
    }
    return r;
}

/// Graded commutator of the pre-Lie product.
inline TreeSeries prelie_bracket(const TreeSeries& a, const TreeSeries& b)
{
    TreeSeries r = prelie_mul(a, b);
    TreeSeries swapped = a.zero_like();
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            long long e = static_cast<long long>(a.degree_of(u)) * b.degree_of(v);
            TreeSeries vu = prelie_mul(TreeSeries::single(a.alphabet(), a.truncation(), v, cv),
                                       TreeSeries::single(a.alphabet(), a.truncation(), u, cu));
            swapped += vu * Rational(parity_sign(e));
        }
    return r - swapped;
}

/// Symmetric braces by the defining recursion, for any pre-Lie product.
template <class S, class Mul>
S symmetric_brace_generic(const S& x, const std::vector<S>& ys, Mul&& mul)
{
    if (ys.empty()) return x;
    std::vector<S> head(ys.begin(), ys.end() - 1);
    const S& last = ys.back();
    S result = mul(symmetric_brace_generic(x, head, mul), last);
    for (std::size_t i = 0; i < head.size(); ++i) {
        std::vector<S> mod = head;
        mod[i] = mul(head[i], last);
        result -= symmetric_brace_generic(x, mod, mul);
    }
    return result;
}

inline TreeSeries symmetric_brace(const TreeSeries& x, const std::vector<TreeSeries>& ys)
{
    return symmetric_brace_generic(x, ys, [](const TreeSeries& a, const TreeSeries& b) { return prelie_mul(a, b); });
}

namespace detail {

// Σ over maps {y_i} → vertices(x) of the grafted trees, tensor order x, y₁, …, y_n.
inline void graft_all(const FlatTree& fx, const std::vector<FlatTree>& ys, const Rational& c, TreeSeries& out)
{
    const int V = fx.size();
    const std::size_t n = ys.size();
    std::vector<int> target(n, 0);
    while (true) {
        FlatTree f = fx;
        for (std::size_t i = 0; i < n; ++i) append_flat(f, ys[i], target[i]);
        add_flat(out, f, c);
        std::size_t k = 0;
        while (k < n && ++target[k] == V) target[k++] = 0;
        if (k == n) break;
    }
}

} // namespace detail

/// {x; y₁,…,y_n} in the free pre-Lie algebra: all graftings of the yᵢ onto vertices of x.
inline TreeSeries brace_graft(const TreeSeries& x, const std::vector<TreeSeries>& ys)
{
    for (const auto& y : ys) {
        x.check_compatible(y);
        detail::require_no_tree_constant(y, "brace_graft: argument");
    }
    TreeSeries out = x.zero_like();
    const Alphabet& a = x.letters();
    const int N = x.truncation();
    for (const auto& [s, cs] : x) {
        if (s.is_unit()) {
            if (ys.empty()) out.add_term(s, cs);
            if (ys.size() == 1) out += ys[0] * cs;
            continue;
        }
        FlatTree fs = detail::flat_of(s, a);
        std::vector<FlatTree> chosen;
        std::function<void(std::size_t, int, const Rational&)> choose = [&](std::size_t i, int w, const Rational& c) {
            if (i == ys.size()) {
                detail::graft_all(fs, chosen, c, out);
                return;
            }
            for (const auto& [t, ct] : ys[i]) {
                int wt = t.weight(a);
                if (w + wt > N) continue;
                chosen.push_back(detail::flat_of(t, a));
                choose(i + 1, w + wt, c * ct);
                chosen.pop_back();
            }
        };
        choose(0, s.weight(a), cs);
    }
    return out;
}

/// X ⊚ (1+y) = c·(1+y) + Σ_n (1/n!){X'; yⁿ} for X = c·1 + X'.
inline TreeSeries circle_apply(const TreeSeries& X, const TreeSeries& G)
{
    X.check_compatible(G);
    TreeSeries y = detail::grouplike_part(G, "circle product: right factor");
    Rational c = X.coeff(PreLieTree{});
    TreeSeries xs = X - tree_unit(X.alphabet(), X.truncation()) * c;
    TreeSeries out = G * c;
    if (xs.empty()) return out;
    int wx = xs.min_weight(), wy = y.empty() ? X.truncation() + 1 : y.min_weight();
    std::vector<TreeSeries> ys;
    for (int n = 0; wx + n * wy <= X.truncation(); ++n) {
        out += brace_graft(xs, ys) * ratio(1, factorial(static_cast<unsigned>(n)));
        ys.push_back(y);
        if (y.empty()) break;
    }
    return out;
}

/// (1+x)⊚(1+y) on group-like elements.
inline TreeSeries circle_product(const TreeSeries& g1, const TreeSeries& g2)
{
    detail::grouplike_part(g1, "circle_product: left factor");
    return circle_apply(g1, g2);
}

/// 1 + Σ λ^{⋆n}/n! with λ^{⋆n} = (λ^{⋆(n−1)})⋆λ.
inline TreeSeries prelie_exp(const TreeSeries& lambda)
{
    detail::require_no_tree_constant(lambda, "prelie_exp");
    TreeSeries out = tree_unit(lambda.alphabet(), lambda.truncation());
    if (lambda.empty()) return out;
    TreeSeries power = lambda;
    for (int n = 1; !power.empty(); ++n) {
        out += power * ratio(1, factorial(static_cast<unsigned>(n)));
        power = prelie_mul(power, lambda);
    }
    return out;
}

/// Ω with prelie_exp(Ω) = 1+λ, solved weight by weight.
inline TreeSeries magnus(const TreeSeries& g)
{
    TreeSeries lambda = detail::grouplike_part(g, "magnus");
    TreeSeries omega = lambda;
    TreeSeries one = tree_unit(g.alphabet(), g.truncation());
    for (int k = 1; k <= g.truncation(); ++k) omega = lambda - (prelie_exp(omega) - one - omega);
    return omega;
}

/// t(λ) for an unlabelled tree t: {λ; t₁(λ),…,t_k(λ)}.
inline TreeSeries evaluate_tree(const TreeNode& t, const TreeSeries& lambda)
{
    std::vector<TreeSeries> kids;
    for (const auto& c : t.children) kids.push_back(evaluate_tree(c, lambda));
    return brace_graft(lambda, kids);
}

/// (1+λ)⁻¹ = Σ_t t(−λ)/|Aut t| for g = 1+λ.
inline TreeSeries grouplike_inverse(const TreeSeries& g)
{
    TreeSeries lambda = detail::grouplike_part(g, "grouplike_inverse");
    TreeSeries out = tree_unit(g.alphabet(), g.truncation());
    if (lambda.empty()) return out;
    TreeSeries neg = -lambda;
    int w = lambda.min_weight();
    for (int n = 1; n * w <= g.truncation(); ++n)
        for (const auto& t : enumerate_rooted_trees(n))
            out += evaluate_tree(t, neg) * ratio(1, tree_automorphisms(t));
    return out;
}

/// Inverse solved from (1+z)⊚(1+λ) = 1 order by order.
inline TreeSeries grouplike_inverse_by_circle(const TreeSeries& g)
{
    TreeSeries lambda = detail::grouplike_part(g, "grouplike_inverse_by_circle");
    TreeSeries one = tree_unit(g.alphabet(), g.truncation());
    TreeSeries z = -lambda;
    for (int k = 1; k <= g.truncation(); ++k) z = -lambda - (circle_apply(z, g) - z);
    return one + z;
}

/// Inverse as exp(−Ω).
inline TreeSeries grouplike_inverse_by_magnus(const TreeSeries& g) { return prelie_exp(-magnus(g)); }

/// Derivation extending generator images through tree insertion.
inline TreeSeries prelie_differential(const TreeSeries& s, const GeneratorImages<TreeSeries>& d)
{
    TreeSeries out = s.zero_like();
    const Alphabet& a = s.letters();
    const int N = s.truncation();
    for (const auto& [t, c] : s) {
        if (t.is_unit()) continue;
        FlatTree f = detail::flat_of(t, a);
        const int n = f.size();
        int wt = t.weight(a);
        int prefix = 0;
        for (int v = 0; v < n; ++v) {
            auto it = d.find(f.label[static_cast<std::size_t>(v)]);
            if (it != d.end()) {
                s.check_compatible(it->second);
                std::vector<int> kids;
                for (int u = 0; u < n; ++u)
                    if (f.parent[static_cast<std::size_t>(u)] == v) kids.push_back(u);
                int wrest = wt - a[f.label[static_cast<std::size_t>(v)]].weight;
                for (const auto& [img, ci] : it->second) {
                    if (img.is_unit()) throw PreconditionError("differential image has a constant term");
                    if (wrest + img.weight(a) > N) continue;
                    FlatTree fi = detail::flat_of(img, a);
                    const int m = fi.size();
                    // New ids: [0,v) unchanged, image block at [v, v+m), then the rest shifted.
                    auto remap = [&](int u) { return u < v ? u : u + m - 1; };
                    std::vector<int> target(kids.size(), 0);
                    Rational coeff = c * ci * parity_sign(prefix);
                    while (true) {
                        FlatTree g;
                        for (int u = 0; u < v; ++u) {
                            int p = f.parent[static_cast<std::size_t>(u)];
                            g.add(p < 0 ? -1 : remap(p), f.label[static_cast<std::size_t>(u)],
                                  f.degree[static_cast<std::size_t>(u)]);
                        }
                        int pv = f.parent[static_cast<std::size_t>(v)];
                        for (int u = 0; u < m; ++u) {
                            int p = fi.parent[static_cast<std::size_t>(u)];
                            g.add(p < 0 ? (pv < 0 ? -1 : remap(pv)) : p + v, fi.label[static_cast<std::size_t>(u)],
                                  fi.degree[static_cast<std::size_t>(u)]);
                        }
                        for (int u = v + 1; u < n; ++u) {
                            int p = f.parent[static_cast<std::size_t>(u)];
                            g.add(p == v ? -2 : remap(p), f.label[static_cast<std::size_t>(u)],
                                  f.degree[static_cast<std::size_t>(u)]);
                        }
                        for (std::size_t k = 0; k < kids.size(); ++k)
                            g.parent[static_cast<std::size_t>(remap(kids[k]))] = v + target[k];
                        detail::add_flat(out, g, coeff);
                        std::size_t k = 0;
                        while (k < kids.size() && ++target[k] == m) target[k++] = 0;
                        if (k == kids.size()) break;
                    }
                }
            }
            prefix += f.degree[static_cast<std::size_t>(v)];
        }
    }
    return out;
}

/// ((1+λ)⋆α)⊚(1+λ)⁻¹ − dλ⊚(1+λ)⁻¹.
inline TreeSeries prelie_gauge_action(const TreeSeries& lambda, const TreeSeries& alpha, const TreeSeries& dlambda)
{
    lambda.check_compatible(alpha);
    lambda.check_compatible(dlambda);
    detail::require_no_tree_constant(lambda, "prelie_gauge_action");
    detail::require_tree_degree(lambda, 0, "prelie_gauge_action: lambda");
    detail::require_tree_degree(alpha, -1, "prelie_gauge_action: alpha");
    detail::require_tree_degree(dlambda, -1, "prelie_gauge_action: dlambda");
    TreeSeries g = tree_unit(lambda.alphabet(), lambda.truncation()) + lambda;
    TreeSeries ginv = grouplike_inverse(g);
    TreeSeries left = alpha + prelie_mul(lambda, alpha);
    return circle_apply(left, ginv) - circle_apply(dlambda, ginv);
}

/// Keeps ladder trees and reads them as words from the root upwards.
inline WordSeries project_tree_to_assoc(const TreeSeries& s)
{
    WordSeries out(s.alphabet(), s.truncation());
    for (const auto& [t, c] : s) {
        Word w;
        if (!t.is_unit()) {
            const TreeNode* n = &t.root;
            bool ladder = true;
            while (true) {
                w.letters.push_back(n->label);
                if (n->children.empty()) break;
                if (n->children.size() > 1) {
                    ladder = false;
                    break;
                }
                n = &n->children[0];
            }
            if (!ladder) continue;
        }
        out.add_term(w, c);
    }
    return out;
}

/// Ladder tree for a word, root = first letter.
inline TreeSeries words_to_trees(const WordSeries& s)
{
    TreeSeries out(s.alphabet(), s.truncation());
    for (const auto& [w, c] : s) {
        PreLieTree t;
        if (!w.is_unit()) {
            TreeNode node{w.letters.back(), {}};
            for (std::size_t i = w.letters.size() - 1; i-- > 0;) node = TreeNode{w.letters[i], {node}};
            t.root = node;
        }
        out.add_term(t, c);
    }
    return out;
}

} // namespace effint
