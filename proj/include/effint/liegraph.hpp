#pragma once

#include <effint/assoc.hpp>
#include <effint/graph.hpp>
#include <effint/leveled.hpp>
#include <effint/prelie.hpp>
#include <effint/series.hpp>

#include <functional>
#include <string>
#include <vector>

namespace effint {

/// Isomorphism class of a generator-decorated directed simple graph; n = 0 is the unit 𝟙.
struct GraphKey {
    Digraph g;

    static constexpr std::string_view family = "dsgra";

    bool is_unit() const { return g.n == 0; }
    int weight(const Alphabet& a) const
    {
        int w = 0;
        for (int c : g.color) w += a[c].weight;
        return w;
    }
    int degree(const Alphabet& a) const
    {
        int d = 0;
        for (int c : g.color) d += a[c].degree;
        return d;
    }
    std::string encode(const Alphabet& a) const
    {
        if (is_unit()) return "1";
        std::string s = g.encode() + " |";
        for (int v = 0; v < g.n; ++v) s += (v ? "," : " ") + a[g.color[static_cast<std::size_t>(v)]].name;
        return s;
    }
    auto operator<=>(const GraphKey&) const = default;
};

using GraphSeries = Series<GraphKey>;

inline GraphSeries graph_unit(const AlphabetPtr& a, int N) { return GraphSeries::single(a, N, GraphKey{}); }

inline GraphSeries graph_generator(const AlphabetPtr& a, int N, const std::string& name)
{
    return GraphSeries::single(a, N, GraphKey{Digraph::empty(1, a->index(name))});
}

/// Canonical key of a decorated graph, with the sign of reordering its tensor factors.
inline std::pair<GraphKey, int> canonical_key(const Digraph& g, const Alphabet& a)
{
    std::vector<int> parity;
    for (int c : g.color) parity.push_back(a[c].degree);
    CanonicalGraph cf = canonical_form(g, &parity);
    return {GraphKey{cf.graph}, cf.sign};
}

/// Parses "n; e(a,b), ... | x,y,..." or "1".
inline GraphKey parse_graph_key(const Alphabet& a, const std::string& text, int* sign = nullptr)
{
    if (text == "1") return GraphKey{};
    auto bar = text.find('|');
    if (bar == std::string::npos) throw PreconditionError("decorated graph encoding lacks '|'");
    Digraph g = parse_digraph(text.substr(0, bar));
    std::string rest = text.substr(bar + 1);
    std::vector<int> cols;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string name = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        cols.push_back(a.index(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(cols.size()) != g.n) throw PreconditionError("decoration count differs from vertex count");
    g.color = cols;
    validate_dsgra(g);
    auto [key, s] = canonical_key(g, a);
    if (sign) *sign = s;
    return key;
}

namespace detail {

// Inserts parts[i] at vertex i of `shape`; every shape edge i→j becomes a nonempty
// set of edges from parts[i] to parts[j]. Tensor order follows the shape's vertex order.
inline void compose_graphs(const Digraph& shape, const std::vector<const Digraph*>& parts, const Rational& c,
                           const Alphabet& a, GraphSeries& out)
{
    std::vector<int> offset(static_cast<std::size_t>(shape.n) + 1, 0);
    for (int i = 0; i < shape.n; ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + parts[static_cast<std::size_t>(i)]->n;
    const int total = offset.back();
    if (total > kGraphBruteForceBound) throw BoundError("graph insertion exceeds the brute-force bound");
    Digraph base = Digraph::empty(total);
    for (int i = 0; i < shape.n; ++i) {
        const Digraph& p = *parts[static_cast<std::size_t>(i)];
        int o = offset[static_cast<std::size_t>(i)];
        for (int v = 0; v < p.n; ++v) base.color[static_cast<std::size_t>(o + v)] = p.color[static_cast<std::size_t>(v)];
        for (auto [u, v] : p.edges()) base.add_edge(o + u, o + v);
    }
    std::vector<std::vector<std::pair<int, int>>> options;
    for (auto [i, j] : shape.edges()) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < parts[static_cast<std::size_t>(i)]->n; ++u)
            for (int v = 0; v < parts[static_cast<std::size_t>(j)]->n; ++v)
                pairs.emplace_back(offset[static_cast<std::size_t>(i)] + u, offset[static_cast<std::size_t>(j)] + v);
        if (pairs.size() > 20) throw BoundError("graph insertion: too many reconnection choices");
        options.push_back(std::move(pairs));
    }
    std::vector<std::uint32_t> choice(options.size(), 1u);
    std::vector<int> parity;
    for (int col : base.color) parity.push_back(a[col].degree);
    while (true) {
        Digraph g = base;
        for (std::size_t e = 0; e < options.size(); ++e)
            for (std::size_t k = 0; k < options[e].size(); ++k)
                if ((choice[e] >> k) & 1u) g.add_edge(options[e][k].first, options[e][k].second);
        if (!is_acyclic(g) || !is_connected(g) || !is_simple(g))
            throw InternalError("graph insertion produced an invalid summand: " + g.encode());
        CanonicalGraph cf = canonical_form(g, &parity);
        if (cf.sign != 0) out.add_term(GraphKey{cf.graph}, cf.sign > 0 ? c : -c);
        std::size_t e = 0;
        while (e < options.size()) {
            std::uint32_t limit = (1u << options[e].size());
            if (++choice[e] < limit) break;
            choice[e] = 1u;
            ++e;
        }
        if (e == options.size()) break;
    }
}

inline void require_no_graph_constant(const GraphSeries& s, const char* what)
{
    if (s.coeff(GraphKey{}) != 0) throw PreconditionError(std::string(what) + ": constant term present");
}

inline GraphSeries graph_grouplike_part(const GraphSeries& g, const char* what)
{
    if (g.coeff(GraphKey{}) != 1) throw PreconditionError(std::string(what) + ": constant term must be 1");
    return g - graph_unit(g.alphabet(), g.truncation());
}

inline void require_graph_degree(const GraphSeries& s, int degree, const char* what)
{
    for (const auto& kv : s)
        if (s.degree_of(kv.first) != degree)
            throw PreconditionError(std::string(what) + ": expected degree " + std::to_string(degree) + ", found " +
                                    kv.first.encode(s.letters()));
}

} // namespace detail

/// Multilinear evaluation shape(args[0], …, args[n−1]) in the free Lie-graph algebra.
inline void substitute(const Digraph& shape, const std::vector<const GraphSeries*>& args, const Rational& coeff,
                       GraphSeries& out)
{
    if (static_cast<int>(args.size()) != shape.n) throw PreconditionError("substitute: argument count mismatch");
    const Alphabet& a = out.letters();
    const int N = out.truncation();
    for (const auto* s : args) {
        out.check_compatible(*s);
        detail::require_no_graph_constant(*s, "substitute: argument");
        if (s->empty()) return;
    }
    int floor_weight = 0;
    std::vector<int> min_w;
    for (const auto* s : args) min_w.push_back(s->min_weight());
    std::vector<int> rest(args.size() + 1, 0);
    for (std::size_t i = args.size(); i-- > 0;) rest[i] = rest[i + 1] + min_w[i];
    floor_weight = rest[0];
    if (floor_weight > N) return;
    std::vector<const Digraph*> parts(args.size());
    std::function<void(std::size_t, int, const Rational&)> pick = [&](std::size_t i, int w, const Rational& c) {
        if (i == args.size()) {
            detail::compose_graphs(shape, parts, c, a, out);
            return;
        }
        for (const auto& [key, ck] : *args[i]) {
            int wk = key.weight(a);
            if (w + wk + rest[i + 1] > N) continue;
            parts[i] = &key.g;
            pick(i + 1, w + wk, c * ck);
        }
    };
    pick(0, 0, coeff);
}

/// The 2-vertex product: a at the bottom, b on top.
inline GraphSeries graph_product(const GraphSeries& a, const GraphSeries& b)
{
    a.check_compatible(b);
    Digraph ladder = Digraph::empty(2);
    ladder.add_edge(1, 0);
    GraphSeries out = a.zero_like();
    substitute(ladder, {&a, &b}, Rational(1), out);
    return out;
}

inline GraphSeries graph_bracket(const GraphSeries& a, const GraphSeries& b)
{
    GraphSeries out = graph_product(a, b);
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            long long e = static_cast<long long>(a.degree_of(u)) * b.degree_of(v);
            out -= graph_product(GraphSeries::single(a.alphabet(), a.truncation(), v, cv),
                                 GraphSeries::single(a.alphabet(), a.truncation(), u, cu)) *
                   Rational(parity_sign(e));
        }
    return out;
}

namespace detail {

// Σ over role-shaped leveled classes of (1/|Aut|)·g(args by role), for role counts in the box.
inline void leveled_sum(const std::vector<int>& levels, const std::vector<const GraphSeries*>& role_args,
                        const std::vector<int>& fixed_counts, GraphSeries& out)
{
    const int N = out.truncation();
    const std::size_t R = levels.size();
    std::vector<int> wmin(R);
    for (std::size_t r = 0; r < R; ++r) wmin[r] = role_args[r]->empty() ? N + 1 : role_args[r]->min_weight();
    std::vector<int> counts(R, 0);
    std::function<void(std::size_t, int)> box = [&](std::size_t r, int w) {
        if (r == R) {
            int total = 0;
            for (int c : counts) total += c;
            if (total == 0) return;
            std::vector<LevelRole> roles;
            for (std::size_t k = 0; k < R; ++k) roles.push_back({levels[k], counts[k]});
            for (const auto& lg : enumerate_leveled(roles)) {
                std::vector<const GraphSeries*> args;
                for (int col : lg.graph.color) args.push_back(role_args[static_cast<std::size_t>(col)]);
                Digraph shape = lg.graph;
                std::fill(shape.color.begin(), shape.color.end(), 0);
                substitute(shape, args, ratio(1, lg.automorphisms), out);
            }
            return;
        }
        if (fixed_counts[r] >= 0) {
            counts[r] = fixed_counts[r];
            int next = w + counts[r] * wmin[r];
            if (next <= N) box(r + 1, next);
            return;
        }
        for (int c = 0; w + c * wmin[r] <= N; ++c) {
            counts[r] = c;
            box(r + 1, w + c * wmin[r]);
            if (wmin[r] > N) break;
        }
    };
    box(0, 0);
}

} // namespace detail

/// (𝟙+x)⊚(𝟙+y) = 𝟙 + Σ over 2-leveled classes (1/|Aut g|)·g(x,…,x; y,…,y).
inline GraphSeries graph_circle_product(const GraphSeries& g1, const GraphSeries& g2)
{
    g1.check_compatible(g2);
    GraphSeries x = detail::graph_grouplike_part(g1, "graph_circle_product: left factor");
    GraphSeries y = detail::graph_grouplike_part(g2, "graph_circle_product: right factor");
    GraphSeries out = graph_unit(g1.alphabet(), g1.truncation());
    detail::leveled_sum({1, 2}, {&x, &y}, {-1, -1}, out);
    return out;
}

/// 𝟙 + Σ_g ℓ_g/(|g|!·|Aut g|)·g(λ).
inline GraphSeries graph_exp(const GraphSeries& lambda)
{
    detail::require_no_graph_constant(lambda, "graph_exp");
    GraphSeries out = graph_unit(lambda.alphabet(), lambda.truncation());
    if (lambda.empty()) return out;
    const int w = lambda.min_weight();
    for (int n = 1; n * w <= lambda.truncation(); ++n)
        for (const Digraph& g : enumerate_dsgra(n, kGraphBruteForceBound)) {
            std::vector<const GraphSeries*> args(static_cast<std::size_t>(n), &lambda);
            Rational c = ratio(linear_extension_count(g), factorial(static_cast<unsigned>(n)) * automorphism_order(g));
            substitute(g, args, c, out);
        }
    return out;
}

/// Compositional inverse of graph_exp, solved weight by weight.
inline GraphSeries graph_log(const GraphSeries& g)
{
    GraphSeries lambda = detail::graph_grouplike_part(g, "graph_log");
    GraphSeries one = graph_unit(g.alphabet(), g.truncation());
    GraphSeries L = lambda;
    for (int k = 1; k <= g.truncation(); ++k) L = lambda - (graph_exp(L) - one - L);
    return L;
}

/// (𝟙+λ)⁻¹ = 𝟙 + Σ_g (−1)^{|g|}/|Aut g|·g(λ).
inline GraphSeries graph_grouplike_inverse(const GraphSeries& g)
{
    GraphSeries lambda = detail::graph_grouplike_part(g, "graph_grouplike_inverse");
    GraphSeries out = graph_unit(g.alphabet(), g.truncation());
    if (lambda.empty()) return out;
    const int w = lambda.min_weight();
    for (int n = 1; n * w <= g.truncation(); ++n)
        for (const Digraph& shape : enumerate_dsgra(n, kGraphBruteForceBound)) {
            std::vector<const GraphSeries*> args(static_cast<std::size_t>(n), &lambda);
            substitute(shape, args, ratio(n % 2 ? -1 : 1, automorphism_order(shape)), out);
        }
    return out;
}

/// Σ over 3-leveled classes with one middle vertex α, bottoms x, tops y, weight 1/|Aut|.
inline GraphSeries bowtie(const GraphSeries& gx, const GraphSeries& alpha, const GraphSeries& gy)
{
    gx.check_compatible(alpha);
    gx.check_compatible(gy);
    GraphSeries x = detail::graph_grouplike_part(gx, "bowtie: bottom factor");
    GraphSeries y = detail::graph_grouplike_part(gy, "bowtie: top factor");
    detail::require_no_graph_constant(alpha, "bowtie: middle argument");
    GraphSeries out = alpha.zero_like();
    if (alpha.empty()) return out;
    detail::leveled_sum({1, 2, 3}, {&x, &alpha, &y}, {-1, 1, -1}, out);
    return out;
}

/// (𝟙+λ; δ)⊚(𝟙+y): 2-leveled classes with one marked bottom vertex carrying δ.
inline GraphSeries marked_circle_product(const GraphSeries& gx, const GraphSeries& delta, const GraphSeries& gy)
{
    gx.check_compatible(delta);
    gx.check_compatible(gy);
    GraphSeries x = detail::graph_grouplike_part(gx, "marked circle product: left factor");
    GraphSeries y = detail::graph_grouplike_part(gy, "marked circle product: right factor");
    detail::require_no_graph_constant(delta, "marked circle product: marked argument");
    GraphSeries out = delta.zero_like();
    if (delta.empty()) return out;
    detail::leveled_sum({1, 1, 2}, {&delta, &x, &y}, {1, -1, -1}, out);
    return out;
}

/// bowtie(𝟙+λ, α, (𝟙+λ)⁻¹) − (𝟙+λ; dλ)⊚(𝟙+λ)⁻¹.
inline GraphSeries liegraph_gauge_action(const GraphSeries& lambda, const GraphSeries& alpha,
                                         const GraphSeries& dlambda)
{
    lambda.check_compatible(alpha);
    lambda.check_compatible(dlambda);
    detail::require_no_graph_constant(lambda, "liegraph_gauge_action");
    detail::require_graph_degree(lambda, 0, "liegraph_gauge_action: lambda");
    detail::require_graph_degree(alpha, -1, "liegraph_gauge_action: alpha");
    detail::require_graph_degree(dlambda, -1, "liegraph_gauge_action: dlambda");
    GraphSeries g = graph_unit(lambda.alphabet(), lambda.truncation()) + lambda;
    GraphSeries ginv = graph_grouplike_inverse(g);
    return bowtie(g, alpha, ginv) - marked_circle_product(g, dlambda, ginv);
}

/// Derivation extending generator images through graph insertion.
inline GraphSeries graph_differential(const GraphSeries& s, const GeneratorImages<GraphSeries>& d)
{
    GraphSeries out = s.zero_like();
    const Alphabet& a = s.letters();
    for (const auto& [key, c] : s) {
        if (key.is_unit()) continue;
        const Digraph& g = key.g;
        std::vector<GraphSeries> singles;
        for (int v = 0; v < g.n; ++v)
            singles.push_back(GraphSeries::single(s.alphabet(), s.truncation(),
                                                  GraphKey{Digraph::empty(1, g.color[static_cast<std::size_t>(v)])}));
        Digraph shape = g;
        std::fill(shape.color.begin(), shape.color.end(), 0);
        int prefix = 0;
        for (int v = 0; v < g.n; ++v) {
            auto it = d.find(g.color[static_cast<std::size_t>(v)]);
            if (it != d.end() && !it->second.empty()) {
                std::vector<const GraphSeries*> args;
                for (int u = 0; u < g.n; ++u)
                    args.push_back(u == v ? &it->second : &singles[static_cast<std::size_t>(u)]);
                substitute(shape, args, c * parity_sign(prefix), out);
            }
            prefix += a[g.color[static_cast<std::size_t>(v)]].degree;
        }
    }
    return out;
}

/// Keeps graphs that are rooted trees (every vertex has at most one edge going down).
inline TreeSeries project_to_prelie(const GraphSeries& s)
{
    TreeSeries out(s.alphabet(), s.truncation());
    const Alphabet& a = s.letters();
    for (const auto& [key, c] : s) {
        if (key.is_unit()) {
            out.add_term(PreLieTree{}, c);
            continue;
        }
        const Digraph& g = key.g;
        bool tree = true;
        for (int v = 0; v < g.n && tree; ++v) tree = g.out_degree(v) <= 1;
        if (!tree) continue;
        FlatTree f;
        for (int v = 0; v < g.n; ++v) {
            int parent = -1;
            for (int w = 0; w < g.n; ++w)
                if (g.has_edge(v, w)) parent = w;
            int col = g.color[static_cast<std::size_t>(v)];
            f.add(parent, col, a[col].degree);
        }
        CanonicalTree ct = canonicalize_tree(f);
        if (ct.sign != 0) out.add_term(PreLieTree{ct.tree}, ct.sign > 0 ? c : -c);
    }
    return out;
}

inline WordSeries project_to_assoc(const GraphSeries& s) { return project_tree_to_assoc(project_to_prelie(s)); }

/// Embeds decorated trees as graphs (edges from child to parent).
inline GraphSeries trees_to_graphs(const TreeSeries& s)
{
    GraphSeries out(s.alphabet(), s.truncation());
    const Alphabet& a = s.letters();
    for (const auto& [t, c] : s) {
        if (t.is_unit()) {
            out.add_term(GraphKey{}, c);
            continue;
        }
        FlatTree f = flatten_tree(t.root, [&](int l) { return a[l].degree; });
        Digraph g = Digraph::empty(f.size());
        for (int v = 0; v < f.size(); ++v) {
            g.color[static_cast<std::size_t>(v)] = f.label[static_cast<std::size_t>(v)];
            if (f.parent[static_cast<std::size_t>(v)] >= 0) g.add_edge(v, f.parent[static_cast<std::size_t>(v)]);
        }
        auto [key, sign] = canonical_key(g, a);
        if (sign != 0) out.add_term(key, sign > 0 ? c : -c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The operad itself: labelled graphs, partial compositions, symmetric action.

/// Graph with vertex labels 1..n kept as given (an element of Lie-graph(n)).
struct LabelledGraph {
    Digraph g;

    static constexpr std::string_view family = "labelled-dsgra";

    int weight(const Alphabet&) const { return g.n; }
    int degree(const Alphabet&) const { return 0; }
    std::string encode(const Alphabet&) const { return g.encode(); }
    auto operator<=>(const LabelledGraph&) const = default;
};

using OperadElement = Series<LabelledGraph>;

inline constexpr int kOperadArityBound = 32;

inline AlphabetPtr operad_alphabet()
{
    static const AlphabetPtr a = make_alphabet({});
    return a;
}

inline OperadElement operad_element(const Digraph& g)
{
    validate_dsgra(g);
    Digraph h = g;
    std::fill(h.color.begin(), h.color.end(), 0);
    return OperadElement::single(operad_alphabet(), kOperadArityBound, LabelledGraph{h});
}

/// g₁ ∘ᵢ g₂ (i is 1-based): g₂ replaces vertex i, each edge at i is reconnected to a
/// nonempty set of vertices of g₂ with its direction kept; labels shift as usual.
inline OperadElement partial_composition(const Digraph& g1, int i, const Digraph& g2)
{
    validate_dsgra(g1);
    validate_dsgra(g2);
    if (i < 1 || i > g1.n) throw PreconditionError("partial_composition: slot out of range");
    const int m = g1.n, n = g2.n, slot = i - 1;
    if (m + n - 1 > 32) throw BoundError("partial_composition: arity too large");
    auto remap1 = [&](int v) { return v < slot ? v : v + n - 1; };
    Digraph base = Digraph::empty(m + n - 1);
    std::vector<std::pair<int, int>> loose;  // (other endpoint, +1 if it lies above slot else −1)
    for (auto [u, v] : g1.edges()) {
        if (u == slot) loose.emplace_back(remap1(v), -1);
        else if (v == slot) loose.emplace_back(remap1(u), +1);
        else base.add_edge(remap1(u), remap1(v));
    }
    for (auto [u, v] : g2.edges()) base.add_edge(u + slot, v + slot);
    OperadElement out(operad_alphabet(), kOperadArityBound);
    std::vector<std::uint32_t> choice(loose.size(), 1u);
    const std::uint32_t limit = 1u << n;
    while (true) {
        Digraph g = base;
        for (std::size_t e = 0; e < loose.size(); ++e)
            for (int k = 0; k < n; ++k)
                if ((choice[e] >> k) & 1u) {
                    if (loose[e].second > 0) g.add_edge(loose[e].first, k + slot);
                    else g.add_edge(k + slot, loose[e].first);
                }
        if (!is_acyclic(g) || !is_connected(g) || !is_simple(g))
            throw InternalError("partial composition produced an invalid summand: " + g.encode());
        out.add_term(LabelledGraph{g}, 1);
        std::size_t e = 0;
        while (e < loose.size()) {
            if (++choice[e] < limit) break;
            choice[e] = 1u;
            ++e;
        }
        if (e == loose.size()) break;
    }
    return out;
}

/// Bilinear extension of ∘ᵢ to operad elements of fixed arity.
inline OperadElement compose(const OperadElement& a, int i, const OperadElement& b)
{
    OperadElement out(operad_alphabet(), kOperadArityBound);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out += partial_composition(x.g, i, y.g) * (cx * cy);
    return out;
}

/// Relabels vertex v as sigma[v] (0-based one-line notation).
inline OperadElement act(const OperadElement& a, const std::vector<int>& sigma)
{
    OperadElement out(operad_alphabet(), kOperadArityBound);
    for (const auto& [x, c] : a) {
        if (static_cast<int>(sigma.size()) != x.g.n || !is_permutation_of_range(sigma))
            throw PreconditionError("act: not a permutation of the arity");
        Digraph h = Digraph::empty(x.g.n);
        for (auto [u, v] : x.g.edges()) h.add_edge(sigma[static_cast<std::size_t>(u)], sigma[static_cast<std::size_t>(v)]);
        out.add_term(LabelledGraph{h}, c);
    }
    return out;
}

} // namespace effint
