#include <effint/lie.hpp>
#include <effint/liegraph.hpp>

#include "support/graph_oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace effint;

namespace {

using namespace effint::oracle;

// Largest arity of a double composite in the exhaustive axiom checks.
constexpr int kComposedBound = 5;

GraphSeries series_of(const AlphabetPtr& a, int N, std::initializer_list<std::pair<const char*, const char*>> terms)
{
    GraphSeries s(a, N);
    for (const auto& [enc, c] : terms) {
        int sign = 1;
        GraphKey k = parse_graph_key(*a, enc, &sign);
        s.add_term(k, parse_rational(c) * sign);
    }
    return s;
}

Rational coeff_of(const GraphSeries& s, const char* enc)
{
    int sign = 1;
    GraphKey k = parse_graph_key(s.letters(), enc, &sign);
    return s.coeff(k) * sign;
}

} // namespace

TEST(LabelledGraphs, CountsMatchClasses)
{
    // n!/|Aut| labelled copies per class
    for (int n = 1; n <= 4; ++n) {
        Integer total = 0;
        for (const auto& g : enumerate_dsgra(n)) total += factorial(static_cast<unsigned>(n)) / automorphism_order(g);
        EXPECT_EQ(total, Integer(static_cast<long>(labelled_graphs(n).size()))) << n;
    }
}

TEST(Operad, PartialCompositionMatchesOracle) { EXPECT_EQ(composition_oracle_failure(4, 5), ""); }

TEST(Operad, TwoEdgeExample)
{
    OperadElement got = partial_composition(parse_digraph("3; e(2,1), e(2,3)"), 2, parse_digraph("2; e(1,2)"));
    EXPECT_EQ(got.size(), 9u);
    EXPECT_EQ(got.coeff(LabelledGraph{parse_digraph("4; e(2,1), e(2,3), e(2,4), e(3,1), e(3,4)")}), 1);
    EXPECT_EQ(got.coeff(LabelledGraph{parse_digraph("4; e(2,3), e(3,1), e(3,4)")}), 1);
}

TEST(Operad, Unit) { EXPECT_EQ(unit_failure(4), ""); }

TEST(Operad, SequentialAssociativity) { EXPECT_EQ(sequential_failure(4, kComposedBound), ""); }

TEST(Operad, ParallelAssociativity) { EXPECT_EQ(parallel_failure(4, kComposedBound), ""); }

TEST(Operad, Equivariance) { EXPECT_EQ(equivariance_failure(3, kComposedBound), ""); }

TEST(Operad, ActIsAGroupAction)
{
    for (const auto& f : labelled_graphs(3)) {
        std::vector<int> s{1, 2, 0}, t{0, 2, 1}, ts(3);
        for (int v = 0; v < 3; ++v) ts[static_cast<std::size_t>(v)] = t[static_cast<std::size_t>(s[static_cast<std::size_t>(v)])];
        EXPECT_EQ(act(act(single(f), s), t), act(single(f), ts));
    }
    EXPECT_THROW(act(single(parse_digraph("2; e(1,2)")), {0, 0}), PreconditionError);
}

TEST(Operad, RejectsInvalidGraphs)
{
    Digraph ok = parse_digraph("2; e(1,2)");
    Digraph cyc = parse_digraph("3; e(1,2), e(2,3), e(3,1)");
    Digraph apart = parse_digraph("3; e(1,2)");
    EXPECT_THROW(partial_composition(cyc, 1, ok), PreconditionError);
    EXPECT_THROW(partial_composition(ok, 1, apart), PreconditionError);
    EXPECT_THROW(partial_composition(ok, 3, ok), PreconditionError);
    EXPECT_THROW(parse_digraph("2; e(1,2), e(2,1)"), PreconditionError);
    EXPECT_THROW(parse_digraph("2; e(1,1)"), PreconditionError);
    EXPECT_THROW(parse_digraph("2 e(1,2)"), PreconditionError);
}

TEST(GraphSeriesOps, ExpCoefficientsMatchLabelledCount)
{
    // coefficient of a class in exp(λ): Σ over its labelled copies of (linear extensions)/(n!)²
    auto a = make_alphabet({{"λ", 0, 1}});
    const int N = 4;
    GraphSeries e = graph_exp(graph_generator(a, N, "λ"));
    GraphSeries inv = graph_grouplike_inverse(graph_unit(a, N) + graph_generator(a, N, "λ"));
    for (int n = 1; n <= N; ++n) {
        std::map<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>, std::pair<long, long>> classes;
        for (const auto& g : labelled_graphs(n)) {
            auto& slot = classes[min_relabel(g)];
            slot.first += brute_linear_extensions(g);
            slot.second += 1;
        }
        Integer nf = factorial(static_cast<unsigned>(n));
        for (const auto& [key, v] : classes) {
            Digraph g = Digraph::empty(n);
            for (auto [u, w] : key.second) g.add_edge(u, w);
            GraphKey k = canonical_key(g, *a).first;
            EXPECT_EQ(e.coeff(k), Rational(v.first) / Rational(nf * nf)) << g.encode();
            EXPECT_EQ(inv.coeff(k), Rational(n % 2 ? -v.second : v.second) / Rational(nf)) << g.encode();
        }
    }
}

TEST(GraphSeriesOps, ReferenceCoefficients)
{
    auto a = make_alphabet({{"λ", 0, 1}});
    GraphSeries l = graph_generator(a, 4, "λ");
    GraphSeries e = graph_exp(l);
    EXPECT_EQ(coeff_of(e, "2; e(2,1) | λ,λ"), ratio(1, 2));
    EXPECT_EQ(coeff_of(e, "3; e(1,2), e(1,3) | λ,λ,λ"), ratio(1, 6));
    EXPECT_EQ(coeff_of(e, "3; e(1,2), e(1,3), e(2,3) | λ,λ,λ"), ratio(1, 6));
    EXPECT_EQ(coeff_of(e, "4; e(1,2), e(1,3), e(2,4) | λ,λ,λ,λ"), ratio(1, 8));
    EXPECT_EQ(coeff_of(e, "4; e(1,3), e(1,4), e(2,3), e(2,4) | λ,λ,λ,λ"), ratio(1, 24));
    GraphSeries lg = graph_log(graph_unit(a, 3) + l.truncated(3));
    EXPECT_EQ(lg, series_of(a, 3, {{"1; | λ", "1"}, {"2; e(2,1) | λ,λ", "-1/2"}, {"3; e(1,2), e(1,3) | λ,λ,λ", "1/12"},
                                   {"3; e(2,1), e(3,1) | λ,λ,λ", "1/12"}, {"3; e(1,2), e(2,3) | λ,λ,λ", "1/3"},
                                   {"3; e(1,2), e(1,3), e(2,3) | λ,λ,λ", "1/3"}}));
    auto b = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    GraphSeries one = graph_unit(b, 4);
    GraphSeries cp = graph_circle_product(one + graph_generator(b, 4, "x"), one + graph_generator(b, 4, "y"));
    EXPECT_EQ(coeff_of(cp, "2; e(2,1) | x,y"), 1);
    EXPECT_EQ(coeff_of(cp, "2; e(2,1) | y,x"), 0);
    EXPECT_EQ(coeff_of(cp, "3; e(1,2), e(1,3) | y,x,x"), ratio(1, 2));
    EXPECT_EQ(coeff_of(cp, "3; e(2,1), e(3,1) | x,y,y"), ratio(1, 2));
    EXPECT_EQ(coeff_of(cp, "4; e(1,3), e(1,4), e(2,3), e(2,4) | y,y,x,x"), ratio(1, 4));
}

TEST(GraphSeriesOps, CircleProductGroupLaws)
{
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 1}});
    const int N = 4;
    GraphSeries one = graph_unit(a, N), x = graph_generator(a, N, "x"), y = graph_generator(a, N, "y"), z = graph_generator(a, N, "z");
    GraphSeries g1 = one + x + graph_product(y, x) * ratio(1, 2), g2 = one + y - z, g3 = one + z * Rational(3);
    EXPECT_EQ(graph_circle_product(one, g1), g1);
    EXPECT_EQ(graph_circle_product(g1, one), g1);
    EXPECT_EQ(graph_circle_product(graph_circle_product(g1, g2), g3), graph_circle_product(g1, graph_circle_product(g2, g3)));
    GraphSeries inv = graph_grouplike_inverse(g1);
    EXPECT_EQ(graph_circle_product(inv, g1), one);
    EXPECT_EQ(graph_circle_product(g1, inv), one);
}

TEST(GraphSeriesOps, ExpLogAndBch)
{
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    const int N = 4;
    GraphSeries x = graph_generator(a, N, "x"), y = graph_generator(a, N, "y"), one = graph_unit(a, N);
    GraphSeries l = x + graph_product(x, y) * ratio(-2, 3);
    EXPECT_EQ(graph_log(graph_exp(l)), l);
    EXPECT_EQ(graph_exp(graph_log(one + l)), one + l);
    auto br = [](const GraphSeries& p, const GraphSeries& q) { return graph_bracket(p, q); };
    EXPECT_EQ(graph_exp(bch_dynkin_generic(x, y, br)), graph_circle_product(graph_exp(x), graph_exp(y)));
}

TEST(GraphSeriesOps, BracketSatisfiesJacobi)
{
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 1}, {"p", 1, 1}});
    const int N = 4;
    auto g = [&](const char* s) { return graph_generator(a, N, s); };
    auto br = [](const GraphSeries& u, const GraphSeries& v) { return graph_bracket(u, v); };
    std::vector<std::pair<GraphSeries, int>> els{{g("x"), 0}, {g("y"), 0}, {g("p"), 1}, {br(g("x"), g("z")), 0}, {br(g("p"), g("y")), 1}};
    for (const auto& [u, du] : els)
        for (const auto& [v, dv] : els)
            for (const auto& [w, dw] : els) {
                (void)dw;
                EXPECT_EQ(br(u, br(v, w)), br(br(u, v), w) + br(v, br(u, w)) * Rational(parity_sign(static_cast<long long>(du) * dv)));
            }
}

TEST(GraphProjections, TreesAndLadders)
{
    auto a = make_alphabet({{"x", 0, 1}, {"y", 0, 1}});
    const int N = 4;
    GraphSeries x = graph_generator(a, N, "x"), y = graph_generator(a, N, "y");
    TreeSeries tx = tree_generator(a, N, "x"), ty = tree_generator(a, N, "y");
    std::vector<GraphSeries> as{x, graph_product(x, y), graph_product(graph_product(y, x), x) - graph_product(x, y) * ratio(1, 5),
                                series_of(a, N, {{"3; e(1,2), e(1,3) | y,x,x", "1"}, {"3; e(2,1), e(3,1) | x,y,y", "2"}})};
    for (const auto& A : as) {
        EXPECT_EQ(project_to_prelie(graph_product(A, y)), prelie_mul(project_to_prelie(A), ty));
        EXPECT_EQ(project_to_assoc(graph_product(A, x)), assoc_mul(project_to_assoc(A), word_generator(a, N, "x")));
    }
    EXPECT_EQ(project_to_prelie(series_of(a, N, {{"4; e(1,3), e(1,4), e(2,3), e(2,4) | y,y,x,x", "1"}})), TreeSeries(a, N));
    TreeSeries t = prelie_mul(prelie_mul(tx, ty), tx) + ty * ratio(3, 7);
    EXPECT_EQ(project_to_prelie(trees_to_graphs(t)), t);
}

TEST(GraphGauge, TrivialDifferentialAndMaurerCartan)
{
    auto u = make_alphabet({{"a", -1, 1}, {"λ", 0, 1}, {"ν", 0, 1}, {"μ", -1, 1}, {"ρ", -1, 1}});
    const int N = 4;
    auto g = [&](const char* s) { return graph_generator(u, N, s); };
    GraphSeries zero(u, N);
    EXPECT_EQ(liegraph_gauge_action(zero, g("a"), zero), g("a"));
    GeneratorImages<GraphSeries> d{{u->index("a"), -graph_product(g("a"), g("a"))}, {u->index("λ"), g("μ")}, {u->index("ν"), g("ρ")}};
    ASSERT_EQ(graph_differential(g("a"), d) + graph_product(g("a"), g("a")), zero);
    for (const auto& l : {g("λ"), g("λ") + graph_product(g("λ"), g("ν")) * ratio(1, 2), g("ν") - graph_product(g("ν"), g("λ"))}) {
        GraphSeries b = liegraph_gauge_action(l, g("a"), graph_differential(l, d));
        EXPECT_EQ(graph_differential(b, d) + graph_product(b, b), zero);
    }
}

TEST(GraphGauge, DifferentialIsASquareZeroDerivation)
{
    auto u = make_alphabet({{"a", -1, 1}, {"λ", 0, 1}, {"μ", -1, 1}});
    const int N = 4;
    auto g = [&](const char* s) { return graph_generator(u, N, s); };
    GeneratorImages<GraphSeries> d{{u->index("a"), -graph_product(g("a"), g("a"))}, {u->index("λ"), g("μ")}};
    std::vector<std::pair<GraphSeries, int>> els{{g("λ"), 0}, {g("a"), -1}, {graph_product(g("λ"), g("a")), -1}, {graph_product(g("a"), g("a")), -2}};
    for (const auto& [p, dp] : els) {
        EXPECT_EQ(graph_differential(graph_differential(p, d), d), GraphSeries(u, N));
        for (const auto& [q, dq] : els) {
            (void)dq;
            EXPECT_EQ(graph_differential(graph_product(p, q), d),
                      graph_product(graph_differential(p, d), q) + graph_product(p, graph_differential(q, d)) * Rational(parity_sign(dp)));
        }
    }
}

TEST(GraphGauge, AgreesWithExponentialAdjointAction)
{
    auto u = make_alphabet({{"a", -1, 1}, {"λ", 0, 1}, {"μ", -1, 1}});
    const int N = 4;
    auto g = [&](const char* s) { return graph_generator(u, N, s); };
    GeneratorImages<GraphSeries> d{{u->index("λ"), g("μ")}};
    GraphSeries L = graph_exp(g("λ")) - graph_unit(u, N);
    auto br = [](const GraphSeries& p, const GraphSeries& q) { return graph_bracket(p, q); };
    EXPECT_EQ(liegraph_gauge_action(L, g("a"), graph_differential(L, d)), lie_gauge_action_generic(g("λ"), g("a"), g("μ"), br));
    EXPECT_EQ(project_to_assoc(liegraph_gauge_action(g("λ"), g("a"), g("μ"))),
              assoc_gauge_action(word_generator(u, N, "λ"), word_generator(u, N, "a"), word_generator(u, N, "μ")));
}
