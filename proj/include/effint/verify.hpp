#pragma once

#include <effint/io.hpp>
#include <effint/laprt.hpp>
#include <effint/lie.hpp>
#include <effint/liegraph.hpp>
#include <effint/paprt.hpp>
#include <effint/prelie.hpp>
#include <effint/slinfty.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace effint {

struct Check {
    std::string suite;
    std::string name;
    bool pass = true;
    std::string basis;  // first offending basis object
    std::string left;
    std::string right;
    std::string detail;
};

template <BasisObject B>
Check compare(const std::string& suite, const std::string& name, const Series<B>& got, const Series<B>& want)
{
    Check c;
    c.suite = suite;
    c.name = name;
    auto d = first_difference(got, want);
    if (!d.equal) {
        c.pass = false;
        c.basis = d.basis;
        c.left = to_string(d.left);
        c.right = to_string(d.right);
    }
    return c;
}

inline Check truth(const std::string& suite, const std::string& name, bool ok, const std::string& detail = "")
{
    Check c;
    c.suite = suite;
    c.name = name;
    c.pass = ok;
    if (!ok) c.detail = detail;
    return c;
}

inline Check coefficient(const std::string& suite, const std::string& name, const std::string& basis,
                         const Rational& got, const Rational& want)
{
    Check c;
    c.suite = suite;
    c.name = name;
    if (got != want) {
        c.pass = false;
        c.basis = basis;
        c.left = to_string(got);
        c.right = to_string(want);
    }
    return c;
}

/// Builds a graph series from "encoding" → "p/q" pairs.
inline GraphSeries graph_series(const AlphabetPtr& a, int N, const std::vector<std::pair<std::string, std::string>>& terms)
{
    GraphSeries s(a, N);
    for (const auto& [enc, c] : terms) {
        int sign = 1;
        GraphKey k = parse_graph_key(*a, enc, &sign);
        if (sign == 0) throw PreconditionError("graph_series: vanishing basis graph " + enc);
        s.add_term(k, sign * parse_rational(c));
    }
    return s;
}

inline Rational graph_coeff(const GraphSeries& s, const std::string& enc)
{
    int sign = 1;
    GraphKey k = parse_graph_key(s.letters(), enc, &sign);
    return s.coeff(k) * sign;
}

/// Deterministic pseudo-random element of the free sL∞-algebra: sums of nested brackets of generators.
inline SLSeries random_sl_element(const FreeSL& alg, int degree, std::mt19937& rng, int terms = 3)
{
    const Alphabet& a = *alg.alphabet();
    const int N = alg.truncation();
    SLSeries out = alg.zero();
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < 200 && static_cast<int>(out.size()) < terms; ++attempt) {
        std::uniform_int_distribution<int> leaves(1, std::max(1, N));
        int k = leaves(rng);
        std::vector<SLSeries> pool;
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> g(0, static_cast<int>(a.size()) - 1);
            pool.push_back(SLSeries::single(alg.alphabet(), N, SLTree{TreeNode{g(rng), {}}}));
        }
        while (pool.size() > 1) {
            std::uniform_int_distribution<int> m(2, static_cast<int>(pool.size()));
            int take = m(rng);
            std::vector<SLSeries> args(pool.end() - take, pool.end());
            pool.resize(pool.size() - static_cast<std::size_t>(take));
            pool.push_back(sl_apply(take, args));
        }
        for (const auto& [t, c] : pool.front())
            if (t.degree(a) == degree) {
                int r = coef(rng);
                out.add_term(t, c * (r == 0 ? 1 : r));
            }
    }
    return out;
}

// ----------------------------------------------------------------------------------------------

inline std::vector<Check> verify_assoc(int N)
{
    const std::string S = "assoc";
    std::vector<Check> out;
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    WordSeries x = word_generator(a, N, "x"), y = word_generator(a, N, "y");
    WordSeries one = word_unit(a, N);
    out.push_back(compare(S, "log(exp(x)) = x", log_assoc(exp_assoc(x)), x));
    out.push_back(compare(S, "exp(x)·exp(-x) = 1", assoc_mul(exp_assoc(x), exp_assoc(-x)), one));
    out.push_back(compare(S, "(1+x)·(1+x)^-1 = 1", assoc_mul(one + x, assoc_inverse(one + x)), one));
    if (N >= 3) {
        auto x3 = x.truncated(3);
        auto l = log_assoc(word_unit(a, 3) + x3);
        out.push_back(coefficient(S, "log(1+λ) has +1/3 λ^3", "x*x*x", l.coeff(parse_word(*a, "x*x*x")), Rational(1, 3)));
    }
    out.push_back(truth(S, "BCH(x,y) is a Lie element", is_lie_element(bch_oracle(x, y))));

    auto g = make_alphabet({{"λ", 0, 1}, {"α", -1, 1}, {"μ", -1, 1}});
    WordSeries l = word_generator(g, N, "λ"), al = word_generator(g, N, "α"), mu = word_generator(g, N, "μ");
    out.push_back(compare(S, "gauge action at λ = 0 is the identity", assoc_gauge_action(WordSeries(g, N), al, WordSeries(g, N)), al));
    GeneratorImages<WordSeries> d{{g->index("λ"), mu}};
    WordSeries L = exp_assoc(l) - word_unit(g, N);
    out.push_back(compare(S, "conjugation by exp(λ) = Lie gauge action", assoc_gauge_action(L, al, assoc_differential(L, d)),
                          lie_gauge_action(l, al, mu)));
    return out;
}

inline std::vector<Check> verify_lie(int N)
{
    const std::string S = "lie";
    std::vector<Check> out;
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    WordSeries x = word_generator(a, N, "x"), y = word_generator(a, N, "y");
    WordSeries dyn = bch_dynkin(x, y), orc = bch_oracle(x, y);
    out.push_back(compare(S, "Dynkin BCH = log(exp x exp y)", dyn, orc));
    for (int k = 1; k <= N; ++k)
        out.push_back(truth(S, "BCH weight " + std::to_string(k) + " is Lie", is_lie_element(dyn.homogeneous(k))));
    if (N >= 2) {
        WordSeries half = assoc_bracket(x, y).truncated(2) * Rational(1, 2);
        out.push_back(compare(S, "BCH to weight 2 = x + y + [x,y]/2", dyn.truncated(2), (x + y).truncated(2) + half));
    }
    for (int k = 1; k <= N; ++k) {
        // Witt: (1/k) Σ_{d|k} μ(d) 2^{k/d}
        auto mobius = [](int n) {
            int m = 1;
            for (int p = 2; p * p <= n; ++p)
                if (n % p == 0) {
                    n /= p;
                    if (n % p == 0) return 0;
                    m = -m;
                }
            return n > 1 ? -m : m;
        };
        long long witt = 0;
        for (int dd = 1; dd <= k; ++dd)
            if (k % dd == 0) witt += mobius(dd) * (1LL << (k / dd));
        witt /= k;
        out.push_back(truth(S, "Lyndon basis size at weight " + std::to_string(k),
                            static_cast<long long>(lyndon_basis(a, k, N).size()) == witt));
    }
    return out;
}

inline std::vector<Check> verify_prelie(int N)
{
    const std::string S = "prelie";
    std::vector<Check> out;
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 1}});
    TreeSeries x = tree_generator(a, N, "x"), y = tree_generator(a, N, "y"), z = tree_generator(a, N, "z");
    TreeSeries one = tree_unit(a, N);
    if (N >= 3) {
        TreeSeries lhs = prelie_mul(prelie_mul(x, y), z) - prelie_mul(x, prelie_mul(y, z));
        TreeSeries rhs = prelie_mul(prelie_mul(x, z), y) - prelie_mul(x, prelie_mul(z, y));
        out.push_back(compare(S, "associator is right-symmetric", lhs, rhs));
        out.push_back(compare(S, "{x; y, z} = (x*y)*z - x*(y*z)", symmetric_brace(x, {y, z}),
                              prelie_mul(prelie_mul(x, y), z) - prelie_mul(x, prelie_mul(y, z))));
        out.push_back(compare(S, "brace recursion = grafting", symmetric_brace(x, {y, z}), brace_graft(x, {y, z})));
    }
    out.push_back(compare(S, "{x;} = x", symmetric_brace(x, {}), x));
    if (N >= 3) {
        auto b = make_alphabet({{"λ", 0, 1}});
        TreeSeries l = tree_generator(b, 3, "λ");
        TreeSeries ll = prelie_mul(l, l);
        TreeSeries want = l - ll * Rational(1, 2) + prelie_mul(l, ll) * Rational(1, 4) + prelie_mul(ll, l) * Rational(1, 12);
        out.push_back(compare(S, "Magnus expansion to weight 3", magnus(tree_unit(b, 3) + l), want));
    }
    out.push_back(compare(S, "magnus(exp(x)) = x", magnus(prelie_exp(x)), x));
    out.push_back(compare(S, "exp(magnus(1+x)) = 1+x", prelie_exp(magnus(one + x)), one + x));
    const int M = std::min(N, 5);
    auto c = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    TreeSeries cx = tree_generator(c, M, "x"), cy = tree_generator(c, M, "y");
    TreeSeries bch = bch_dynkin_generic(cx, cy, [](const TreeSeries& u, const TreeSeries& v) { return prelie_bracket(u, v); });
    out.push_back(compare(S, "exp(BCH(x,y)) = exp(x) ⊚ exp(y)", prelie_exp(bch), circle_product(prelie_exp(cx), prelie_exp(cy))));
    TreeSeries g = tree_unit(c, M) + cx;
    out.push_back(compare(S, "tree-sum inverse = ⊚-inverse", grouplike_inverse(g), grouplike_inverse_by_circle(g)));
    out.push_back(compare(S, "tree-sum inverse = exp(-Ω)", grouplike_inverse(g), grouplike_inverse_by_magnus(g)));
    out.push_back(compare(S, "(1+x)^-1 ⊚ (1+x) = 1", circle_product(grouplike_inverse(g), g), tree_unit(c, M)));

    auto u = make_alphabet({{"a", -1, 1}, {"λ", 0, 1}, {"μ", -1, 1}});
    const int K = std::min(N, 4);
    TreeSeries ua = tree_generator(u, K, "a"), ul = tree_generator(u, K, "λ"), um = tree_generator(u, K, "μ");
    GeneratorImages<TreeSeries> d{{u->index("a"), -prelie_mul(ua, ua)}, {u->index("λ"), um}};
    TreeSeries L = prelie_exp(ul) - tree_unit(u, K);
    TreeSeries act = prelie_gauge_action(L, ua, prelie_differential(L, d));
    out.push_back(compare(S, "gauge action = Lie gauge action", act,
                          lie_gauge_action_generic(ul, ua, um, [](const TreeSeries& p, const TreeSeries& q) { return prelie_bracket(p, q); })));
    out.push_back(compare(S, "gauge action preserves Maurer-Cartan elements",
                          prelie_differential(act, d) + prelie_mul(act, act), TreeSeries(u, K)));
    return out;
}

inline std::vector<Check> verify_liegraph(int N)
{
    const std::string S = "liegraph";
    std::vector<Check> out;
    // First directed simple graphs: eight distinct classes, stable under relabelling.
    {
        std::vector<std::string> shown = {"1;",
                                          "2; e(1,2)",
                                          "3; e(1,2), e(1,3)",
                                          "3; e(2,1), e(3,1)",
                                          "3; e(1,2), e(2,3)",
                                          "3; e(1,2), e(1,3), e(2,3)",
                                          "4; e(1,3), e(1,4), e(2,3), e(2,4)",
                                          "5; e(1,2), e(1,3), e(2,4), e(2,5), e(3,4), e(3,5)"};
        std::set<Digraph> forms;
        bool stable = true;
        std::mt19937 rng(7);
        for (const auto& s : shown) {
            Digraph g = parse_digraph(s);
            Digraph c = canonicalize_graph(g);
            forms.insert(c);
            for (int r = 0; r < 5; ++r) {
                std::vector<int> p(static_cast<std::size_t>(g.n));
                for (int i = 0; i < g.n; ++i) p[static_cast<std::size_t>(i)] = i;
                std::shuffle(p.begin(), p.end(), rng);
                stable = stable && canonicalize_graph(detail::relabel(g, p)) == c;
            }
        }
        out.push_back(truth(S, "first directed simple graphs: 8 classes", forms.size() == 8));
        out.push_back(truth(S, "canonical form stable under relabelling", stable));
    }
    {
        Digraph g1 = parse_digraph("3; e(2,1), e(2,3)"), g2 = parse_digraph("2; e(1,2)");
        OperadElement got = partial_composition(g1, 2, g2);
        OperadElement want(operad_alphabet(), kOperadArityBound);
        for (std::string to1 : {"e(2,1)", "e(3,1)", "e(2,1), e(3,1)"})
            for (std::string to4 : {"e(2,4)", "e(3,4)", "e(2,4), e(3,4)"})
                want += operad_element(parse_digraph("4; e(2,3), " + to1 + ", " + to4));
        out.push_back(compare(S, "partial composition of the two-edge graphs (9 terms)", got, want));
        out.push_back(truth(S, "that composition has 9 summands", got.size() == 9));
    }
    {
        Digraph k22 = parse_digraph("4; e(1,3), e(1,4), e(2,3), e(2,4)");
        k22.color = {1, 1, 0, 0};
        out.push_back(truth(S, "|Aut| of the complete bipartite leveled graph = 4", automorphism_order(k22) == 4));
        Digraph v = parse_digraph("3; e(1,2), e(1,3)");
        v.color = {1, 0, 0};
        out.push_back(truth(S, "|Aut| of one top over two bottoms = 2", automorphism_order(v) == 2));
        out.push_back(truth(S, "linear extensions of the V-with-tail graph = 3",
                            linear_extension_count(parse_digraph("4; e(1,2), e(1,3), e(2,4)")) == 3));
        out.push_back(truth(S, "leveled: lone bottom vertex", enumerate_two_leveled(1, 0).size() == 1));
        out.push_back(truth(S, "leveled: lone middle vertex", enumerate_bowtie_shapes(0, 0).size() == 1));
        bool has_k22 = false;
        for (const auto& lg : enumerate_two_leveled(2, 2)) has_k22 = has_k22 || (lg.graph.edge_count() == 4 && lg.automorphisms == 4);
        out.push_back(truth(S, "leveled 2+2 contains the complete bipartite class", has_k22));
    }
    auto a1 = make_alphabet({{"λ", 0, 1}});
    {
        const int W = std::min(N, 4);
        GraphSeries l = graph_generator(a1, W, "λ");
        GraphSeries e = graph_exp(l);
        if (W >= 3)
            out.push_back(compare(S, "graph exp to weight 3", e.truncated(3),
                                  graph_series(a1, 3, {{"1", "1"}, {"1; | λ", "1"}, {"2; e(2,1) | λ,λ", "1/2"},
                                                       {"3; e(1,2), e(1,3) | λ,λ,λ", "1/6"}, {"3; e(2,1), e(3,1) | λ,λ,λ", "1/6"},
                                                       {"3; e(1,2), e(2,3) | λ,λ,λ", "1/6"}, {"3; e(1,2), e(1,3), e(2,3) | λ,λ,λ", "1/6"}})));
        if (W >= 4) {
            out.push_back(coefficient(S, "graph exp: V-with-tail", "V-with-tail", graph_coeff(e, "4; e(1,2), e(1,3), e(2,4) | λ,λ,λ,λ"), Rational(1, 8)));
            out.push_back(coefficient(S, "graph exp: complete bipartite", "K22", graph_coeff(e, "4; e(1,3), e(1,4), e(2,3), e(2,4) | λ,λ,λ,λ"), Rational(1, 24)));
        }
        if (W >= 3) {
            GraphSeries lg = graph_log(graph_unit(a1, 3) + l.truncated(3));
            out.push_back(compare(S, "graph log to weight 3", lg,
                                  graph_series(a1, 3, {{"1; | λ", "1"}, {"2; e(2,1) | λ,λ", "-1/2"},
                                                       {"3; e(1,2), e(1,3) | λ,λ,λ", "1/12"}, {"3; e(2,1), e(3,1) | λ,λ,λ", "1/12"},
                                                       {"3; e(1,2), e(2,3) | λ,λ,λ", "1/3"}, {"3; e(1,2), e(1,3), e(2,3) | λ,λ,λ", "1/3"}})));
        }
        out.push_back(compare(S, "graph log(exp(λ)) = λ", graph_log(e), l));
        GraphSeries g = graph_unit(a1, W) + l;
        out.push_back(compare(S, "(1+λ)^-1 ⊚ (1+λ) = 1", graph_circle_product(graph_grouplike_inverse(g), g), graph_unit(a1, W)));
    }
    auto a2 = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    {
        const int W = std::min(N, 4);
        GraphSeries x = graph_generator(a2, W, "x"), y = graph_generator(a2, W, "y"), one = graph_unit(a2, W);
        GraphSeries cp = graph_circle_product(one + x, one + y);
        if (W >= 3)
            out.push_back(compare(S, "graph circle product to weight 3", cp.truncated(3),
                                  graph_series(a2, 3, {{"1", "1"}, {"1; | x", "1"}, {"1; | y", "1"}, {"2; e(2,1) | x,y", "1"},
                                                       {"3; e(1,2), e(1,3) | y,x,x", "1/2"}, {"3; e(2,1), e(3,1) | x,y,y", "1/2"}})));
        if (W >= 4)
            out.push_back(coefficient(S, "graph circle product: complete bipartite", "K22",
                                      graph_coeff(cp, "4; e(1,3), e(1,4), e(2,3), e(2,4) | y,y,x,x"), Rational(1, 4)));
        GraphSeries bch = bch_dynkin_generic(x, y, [](const GraphSeries& p, const GraphSeries& q) { return graph_bracket(p, q); });
        out.push_back(compare(S, "exp(BCH(x,y)) = exp(x) ⊚ exp(y)", graph_exp(bch), graph_circle_product(graph_exp(x), graph_exp(y))));
        // compatibility with the pre-Lie and associative formulas
        TreeSeries tx = tree_generator(a2, W, "x"), ty = tree_generator(a2, W, "y"), tone = tree_unit(a2, W);
        out.push_back(compare(S, "tree projection of ⊚", project_to_prelie(cp), circle_product(tone + tx, tone + ty)));
        out.push_back(compare(S, "tree projection of exp", project_to_prelie(graph_exp(x)), prelie_exp(tx)));
        out.push_back(compare(S, "tree projection of log", project_to_prelie(graph_log(one + x)), magnus(tone + tx)));
        out.push_back(compare(S, "tree projection of inverse", project_to_prelie(graph_grouplike_inverse(one + x)), grouplike_inverse(tone + tx)));
        WordSeries wx = word_generator(a2, W, "x"), wy = word_generator(a2, W, "y"), wone = word_unit(a2, W);
        out.push_back(compare(S, "ladder projection of ⊚", project_to_assoc(cp), assoc_mul(wone + wx, wone + wy)));
        out.push_back(compare(S, "ladder projection of exp", project_to_assoc(graph_exp(x)), exp_assoc(wx)));
        out.push_back(compare(S, "ladder projection of log", project_to_assoc(graph_log(one + x)), log_assoc(wone + wx)));
        out.push_back(compare(S, "ladder projection of inverse", project_to_assoc(graph_grouplike_inverse(one + x)), assoc_inverse(wone + wx)));
    }
    {
        auto a3 = make_alphabet({{"x", 0, 1}, {"α", -1, 1}, {"y", 0, 1}});
        const int W = std::min(N, 4);
        GraphSeries x = graph_generator(a3, W, "x"), y = graph_generator(a3, W, "y"), al = graph_generator(a3, W, "α");
        GraphSeries one = graph_unit(a3, W);
        GraphSeries bt = bowtie(one + x, al, one + y);
        if (W >= 3)
            out.push_back(compare(S, "bowtie to weight 2", bt.truncated(2),
                                  graph_series(a3, 2, {{"1; | α", "1"}, {"2; e(2,1) | x,α", "1"}, {"2; e(2,1) | α,y", "1"}})));
        if (W >= 3) {
            out.push_back(coefficient(S, "bowtie: α over two x", "", graph_coeff(bt, "3; e(1,2), e(1,3) | α,x,x"), Rational(1, 2)));
            out.push_back(coefficient(S, "bowtie: two y over α", "", graph_coeff(bt, "3; e(2,1), e(3,1) | α,y,y"), Rational(1, 2)));
            out.push_back(coefficient(S, "bowtie: x-α-y ladder", "", graph_coeff(bt, "3; e(2,1), e(3,2) | x,α,y"), Rational(1)));
            out.push_back(coefficient(S, "bowtie: y over α and x", "", graph_coeff(bt, "3; e(3,1), e(3,2) | x,α,y"), Rational(1)));
            out.push_back(coefficient(S, "bowtie: α over x, y over x", "", graph_coeff(bt, "3; e(2,1), e(3,1) | x,α,y"), Rational(1)));
            out.push_back(coefficient(S, "bowtie: full triangle", "", graph_coeff(bt, "3; e(2,1), e(3,1), e(3,2) | x,α,y"), Rational(1)));
        }
        if (W >= 4) {
            out.push_back(coefficient(S, "bowtie: y over α over two x", "", graph_coeff(bt, "4; e(1,2), e(1,3), e(4,1) | α,x,x,y"), Rational(1, 2)));
            out.push_back(coefficient(S, "bowtie: y also over one x", "", graph_coeff(bt, "4; e(1,2), e(1,3), e(4,1), e(4,3) | α,x,x,y"), Rational(1)));
        }
        out.push_back(compare(S, "bowtie with x = y = 0 is α", bowtie(one, al, one), al));
    }
    {
        auto u = make_alphabet({{"a", -1, 1}, {"λ", 0, 1}, {"μ", -1, 1}});
        const int W = std::min(N, 4);
        GraphSeries ua = graph_generator(u, W, "a"), ul = graph_generator(u, W, "λ"), um = graph_generator(u, W, "μ");
        GraphSeries zero(u, W);
        auto br = [](const GraphSeries& p, const GraphSeries& q) { return graph_bracket(p, q); };
        GraphSeries L = graph_exp(ul) - graph_unit(u, W);
        out.push_back(compare(S, "gauge action with d = 0 is exp(ad λ)", liegraph_gauge_action(L, ua, zero),
                              lie_gauge_action_generic(ul, ua, zero, br)));
        GeneratorImages<GraphSeries> d{{u->index("a"), -graph_product(ua, ua)}, {u->index("λ"), um}};
        GraphSeries act = liegraph_gauge_action(L, ua, graph_differential(L, d));
        out.push_back(compare(S, "gauge action = Lie gauge action", act, lie_gauge_action_generic(ul, ua, um, br)));
        out.push_back(compare(S, "gauge action preserves Maurer-Cartan elements", graph_differential(act, d) + graph_product(act, act), zero));
        TreeSeries ta = tree_generator(u, W, "a"), tl = tree_generator(u, W, "λ"), tm = tree_generator(u, W, "μ");
        out.push_back(compare(S, "tree projection of the gauge action", project_to_prelie(liegraph_gauge_action(ul, ua, um)),
                              prelie_gauge_action(tl, ta, tm)));
        WordSeries wa = word_generator(u, W, "a"), wl = word_generator(u, W, "λ"), wm = word_generator(u, W, "μ");
        out.push_back(compare(S, "ladder projection of the gauge action", project_to_assoc(liegraph_gauge_action(ul, ua, um)),
                              assoc_gauge_action(wl, wa, wm)));
    }
    return out;
}

inline constexpr unsigned kDefaultSeed = 20240501u;

inline std::vector<Check> verify_slinfty(int N, unsigned seed = kDefaultSeed)
{
    const std::string S = "slinfty";
    std::vector<Check> out;
    {
        auto a = make_alphabet({{"x", 0, 1}, {"y", 1, 1}, {"z", 2, 1}});
        const int W = std::max(N, 3);
        SLSeries x = sl_generator(a, W, "x"), y = sl_generator(a, W, "y"), z = sl_generator(a, W, "z");
        SLSeries t = sl_apply(3, {x, y, z});
        out.push_back(truth(S, "degree of l3(x,y,z) = |x|+|y|+|z|-1", homogeneous_degree(t) == 0 + 1 + 2 - 1));
        out.push_back(compare(S, "l2(y,z) = (-1)^{|y||z|} l2(z,y)", sl_apply(2, {y, z}), sl_apply(2, {z, y})));
    }
    out.push_back(truth(S, "C(|) = 1", coefficient_C(PlanarTree::edge()) == 1));
    out.push_back(truth(S, "C(c3) = 6", coefficient_C(PlanarTree::corolla(3)) == 6));
    out.push_back(truth(S, "C of the example tree = 96", coefficient_C(example_flow_tree()) == 96));
    {
        auto setup = universal_gauge_setup(std::max(N, 6));
        const FreeSL& alg = setup.algebra;
        SLSeries al = setup.a, l = setup.lambda;
        SLSeries want = sl_apply(3, {sl_apply(4, {al, alg.differential(l), al, l}), sl_apply(2, {al, l}), l});
        out.push_back(compare(S, "example tree value l3(l4(α,dλ,α,λ), l2(α,λ), λ)",
                              tree_value(alg, example_flow_tree(), l, al), want));
        out.push_back(compare(S, "universal Maurer-Cartan element", mc_residual(alg, al), alg.zero()));
    }
    {
        const int W = std::min(N, 5);
        auto a = make_alphabet({{"u", 0, 1}, {"v", 1, 1}, {"w", -1, 1}});
        std::mt19937 rng(seed);
        FreeSL alg(a, W);
        bool ok = true;
        for (int trial = 0; trial < 4 && ok; ++trial)
            for (int deg : {-1, 0, 1}) {
                SLSeries s = random_sl_element(alg, deg, rng);
                ok = ok && alg.differential(alg.differential(s)).empty();
            }
        out.push_back(truth(S, "d^2 = 0 on the free construction", ok));
        GeneratorImages<SLSeries> dv{{a->index("v"), sl_generator(a, W, "u")}};
        FreeSL alg2(a, W, dv);
        bool ok2 = true;
        for (int trial = 0; trial < 4 && ok2; ++trial)
            for (int deg : {-1, 0, 1}) {
                SLSeries s = random_sl_element(alg2, deg, rng);
                ok2 = ok2 && alg2.differential(alg2.differential(s)).empty();
            }
        out.push_back(truth(S, "d^2 = 0 with a differential on generators", ok2));
    }
    {
        const int W = std::min(N, 5);
        auto a = make_alphabet({{"λ", 0, 1}, {"α", -1, 1}, {"μ", -1, 1}});
        GeneratorImages<WordSeries> d{{a->index("λ"), word_generator(a, W, "μ")}};
        SuspendedLie alg(a, W, d);
        WordSeries l = word_generator(a, W, "λ"), al = word_generator(a, W, "α");
        out.push_back(compare(S, "flow on a dg Lie algebra = Lie gauge action", gauge_flow(alg, l, al),
                              lie_gauge_action(l, al, word_generator(a, W, "μ"))));
    }
    {
        const int W = std::min(N, 4);
        auto setup = universal_gauge_setup(W);
        SLSeries beta = gauge_flow(setup.algebra, setup.lambda, setup.a);
        out.push_back(compare(S, "flow lands on Maurer-Cartan elements", mc_residual(setup.algebra, beta), setup.algebra.zero()));
    }
    {
        auto r = gamma21_check(std::min(N, 5));
        Check c = compare(S, "Γ²₁ = BCH through the flow", r.from_flow, r.expected);
        if (!c.pass) c.detail = "first divergent weight " + std::to_string(r.first_bad_weight);
        out.push_back(c);
    }
    {
        auto v = validate_paprt(example_paprt());
        out.push_back(truth(S, "planarly partitioned example tree is valid", v.empty(), v.empty() ? "" : v.front().condition));
        auto w = validate_laprt(example_laprt());
        out.push_back(truth(S, "labelled planar example tree is valid", w.empty(), w.empty() ? "" : w.front().condition));
    }
    return out;
}

inline std::vector<Check> verify_suite(const std::string& which, int N, unsigned seed = kDefaultSeed)
{
    std::vector<Check> out;
    auto add = [&](std::vector<Check> v) { out.insert(out.end(), v.begin(), v.end()); };
    bool all = which == "all";
    if (all || which == "assoc") add(verify_assoc(N));
    if (all || which == "lie") add(verify_lie(N));
    if (all || which == "prelie") add(verify_prelie(N));
    if (all || which == "liegraph") add(verify_liegraph(N));
    if (all || which == "slinfty") add(verify_slinfty(N, seed));
    if (!all && which != "assoc" && which != "lie" && which != "prelie" && which != "liegraph" && which != "slinfty")
        throw PreconditionError("unknown verification suite '" + which + "'");
    return out;
}

} // namespace effint
