#include <effint/graph.hpp>
#include <effint/laprt.hpp>
#include <effint/leveled.hpp>
#include <effint/paprt.hpp>
#include <effint/tree.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace effint;

namespace {

using Edges = std::set<std::pair<int, int>>;

bool oracle_connected(int n, const Edges& e)
{
    std::vector<int> comp(static_cast<std::size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> root = [&](int v) { return comp[static_cast<std::size_t>(v)] == v ? v : root(comp[static_cast<std::size_t>(v)]); };
    for (auto [a, b] : e) comp[static_cast<std::size_t>(root(a))] = root(b);
    for (int v = 0; v < n; ++v)
        if (root(v) != root(0)) return false;
    return true;
}

bool oracle_acyclic(int n, const Edges& e)
{
    // some vertex order puts every edge top-down
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [a, b] : e) ok = ok && p[static_cast<std::size_t>(a)] < p[static_cast<std::size_t>(b)];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// All labelled connected acyclic simple digraphs on n vertices.
std::vector<Edges> oracle_labelled(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Edges> out;
    std::vector<int> choice(pairs.size(), 0);
    while (true) {
        Edges e;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (choice[k] == 1) e.insert(pairs[k]);
            if (choice[k] == 2) e.insert({pairs[k].second, pairs[k].first});
        }
        if (oracle_connected(n, e) && oracle_acyclic(n, e)) out.push_back(e);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

// Minimal sorted edge list over all relabellings.
Edges oracle_canonical(int n, const Edges& e)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    Edges best;
    bool first = true;
    do {
        Edges r;
        for (auto [a, b] : e) r.insert({p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]});
        if (first || r < best) best = r;
        first = false;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

Edges edges_of(const Digraph& g)
{
    Edges e;
    for (auto pr : g.edges()) e.insert(pr);
    return e;
}

Digraph from_edges(int n, const Edges& e)
{
    Digraph g = Digraph::empty(n);
    for (auto [a, b] : e) g.add_edge(a, b);
    return g;
}

long oracle_automorphisms(const Digraph& g)
{
    std::vector<int> p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    Edges e = edges_of(g);
    do {
        bool ok = true;
        for (int v = 0; v < g.n; ++v) ok = ok && g.color[static_cast<std::size_t>(v)] == g.color[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
        for (auto [a, b] : e) ok = ok && e.count({p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]});
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

long oracle_extensions(const Digraph& g)
{
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    std::iota(pos.begin(), pos.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (auto [a, b] : g.edges()) ok = ok && pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
        count += ok;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return count;
}

Integer oracle_C(const PlanarTree& t)
{
    // product over vertices of arity! times the vertex count below (and at) the vertex
    if (t.leaf) return 1;
    Integer c = factorial(static_cast<unsigned>(t.arity())) * t.vertex_count();
    for (const auto& s : t.children) c *= oracle_C(s);
    return c;
}

Integer oracle_C_flat(const PlanarTree& t)
{
    Integer c = 1;
    std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& s) {
        if (s.leaf) return;
        c *= factorial(static_cast<unsigned>(s.arity()));
        c *= s.vertex_count();
        for (const auto& k : s.children) walk(k);
    };
    walk(t);
    return c;
}

const std::vector<std::string> kFirstGraphs = {"1;",
                                               "2; e(1,2)",
                                               "3; e(1,2), e(1,3)",
                                               "3; e(2,1), e(3,1)",
                                               "3; e(1,2), e(2,3)",
                                               "3; e(1,2), e(1,3), e(2,3)",
                                               "4; e(1,3), e(1,4), e(2,3), e(2,4)",
                                               "5; e(1,2), e(1,3), e(2,4), e(2,5), e(3,4), e(3,5)"};

} // namespace

// ---------------------------------------------------------------- graphs

TEST(Graph, ParsingAndValidation)
{
    EXPECT_NO_THROW(validate_dsgra(parse_digraph("3; e(1,2), e(2,3)")));
    EXPECT_THROW(validate_dsgra(parse_digraph("3; e(1,2)")), PreconditionError);                 // disconnected
    EXPECT_THROW(validate_dsgra(parse_digraph("3; e(1,2), e(2,3), e(3,1)")), PreconditionError);  // cyclic
    EXPECT_THROW(parse_digraph("2; e(1,2), e(2,1)"), PreconditionError);                          // multi-edge
    EXPECT_THROW(parse_digraph("2 e(1,2)"), PreconditionError);
    EXPECT_THROW(parse_digraph("2; e(1,1)"), PreconditionError);
}

TEST(Graph, SingleVertexIsItsOwnCanonicalForm)
{
    Digraph g = parse_digraph("1;");
    EXPECT_EQ(canonicalize_graph(g), g);
}

TEST(Graph, BothLadderLabellingsAgree)
{
    EXPECT_EQ(canonicalize_graph(parse_digraph("2; e(1,2)")), canonicalize_graph(parse_digraph("2; e(2,1)")));
}

TEST(Graph, FirstGraphsGiveEightStableClasses)
{
    std::mt19937 rng(2);
    std::set<Digraph> forms;
    for (const auto& s : kFirstGraphs) {
        Digraph g = parse_digraph(s);
        Digraph c = canonicalize_graph(g);
        forms.insert(c);
        for (int r = 0; r < 20; ++r) {
            std::vector<int> p(static_cast<std::size_t>(g.n));
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            EXPECT_EQ(canonicalize_graph(detail::relabel(g, p)), c) << s;
        }
    }
    EXPECT_EQ(forms.size(), 8u);
}

TEST(Graph, CanonicalFormIsIdempotentAndClassConstant)
{
    std::mt19937 rng(9);
    for (int n = 1; n <= 6; ++n)
        for (const Digraph& g : enumerate_dsgra(n)) {
            EXPECT_EQ(canonicalize_graph(g), g);
            for (int r = 0; r < 3; ++r) {
                std::vector<int> p(static_cast<std::size_t>(n));
                std::iota(p.begin(), p.end(), 0);
                std::shuffle(p.begin(), p.end(), rng);
                EXPECT_EQ(canonicalize_graph(detail::relabel(g, p)), g);
            }
        }
}

TEST(Graph, EnumerationMatchesExhaustiveGeneration)
{
    for (int n = 1; n <= 5; ++n) {
        std::set<Edges> classes;
        for (const auto& e : oracle_labelled(n)) classes.insert(oracle_canonical(n, e));
        auto listed = enumerate_dsgra(n);
        std::set<Edges> mine;
        for (const auto& g : listed) mine.insert(oracle_canonical(n, edges_of(g)));
        EXPECT_EQ(listed.size(), mine.size()) << "duplicates at n = " << n;
        EXPECT_EQ(mine, classes) << "n = " << n;
        for (const auto& e : oracle_labelled(n))
            EXPECT_TRUE(std::binary_search(listed.begin(), listed.end(), canonicalize_graph(from_edges(n, e))) ||
                        std::find(listed.begin(), listed.end(), canonicalize_graph(from_edges(n, e))) != listed.end());
    }
}

TEST(Graph, ClassCountsAreFrozen)
{
    // values from the exhaustive generation above
    EXPECT_EQ(enumerate_dsgra(1).size(), 1u);
    EXPECT_EQ(enumerate_dsgra(2).size(), 1u);
    EXPECT_EQ(enumerate_dsgra(3).size(), 4u);
    EXPECT_EQ(enumerate_dsgra(4).size(), 24u);
    EXPECT_EQ(enumerate_dsgra(5).size(), 267u);
}

TEST(Graph, EnumerationBound)
{
    EXPECT_THROW(enumerate_dsgra(7), BoundError);
    EXPECT_THROW(enumerate_dsgra(0), PreconditionError);
}

TEST(Graph, AutomorphismsMatchBruteForce)
{
    EXPECT_EQ(automorphism_order(parse_digraph("2; e(1,2)")), 1);
    for (int n = 1; n <= 5; ++n)
        for (const Digraph& g : enumerate_dsgra(n)) {
            EXPECT_EQ(automorphism_order(g), oracle_automorphisms(g)) << g.encode();
            EXPECT_EQ(factorial(static_cast<unsigned>(n)) % automorphism_order(g), 0);
        }
}

TEST(Graph, LeveledAutomorphismOrders)
{
    Digraph k22 = parse_digraph("4; e(1,3), e(1,4), e(2,3), e(2,4)");
    k22.color = {1, 1, 0, 0};
    EXPECT_EQ(automorphism_order(k22), 4);
    EXPECT_EQ(oracle_automorphisms(k22), 4);
    Digraph v = parse_digraph("3; e(1,2), e(1,3)");
    v.color = {1, 0, 0};
    EXPECT_EQ(automorphism_order(v), 2);
    Digraph marked = v;
    marked.color = {1, 0, 2};
    EXPECT_EQ(automorphism_order(marked), 1);
}

TEST(Graph, LinearExtensions)
{
    for (int n = 1; n <= 6; ++n) {
        Digraph ladder = Digraph::empty(n);
        for (int i = 0; i + 1 < n; ++i) ladder.add_edge(i, i + 1);
        EXPECT_EQ(linear_extension_count(ladder), 1);
        Digraph down = Digraph::empty(n);
        for (int i = 1; i < n; ++i) down.add_edge(0, i);
        EXPECT_EQ(linear_extension_count(down), factorial(static_cast<unsigned>(n - 1)));
    }
    EXPECT_EQ(linear_extension_count(parse_digraph("3; e(1,2), e(1,3)")), 2);
    EXPECT_EQ(linear_extension_count(parse_digraph("4; e(1,2), e(1,3), e(2,4)")), 3);
    for (int n = 1; n <= 5; ++n)
        for (const Digraph& g : enumerate_dsgra(n)) EXPECT_EQ(linear_extension_count(g), oracle_extensions(g)) << g.encode();
}

// ---------------------------------------------------------------- leveled graphs

namespace {

// Level-preserving classes of connected graphs with edges from top (colour 1) to bottom (colour 0).
std::map<Edges, long long> oracle_two_leveled(int bottom, int top)
{
    const int n = bottom + top;
    std::vector<std::pair<int, int>> slots;
    for (int t = bottom; t < n; ++t)
        for (int b = 0; b < bottom; ++b) slots.emplace_back(t, b);
    std::map<Edges, long long> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        Edges e;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1u) e.insert(slots[k]);
        if (!oracle_connected(n, e)) continue;
        // canonical form over permutations that keep each level
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        Edges best;
        bool first = true;
        long long aut = 0;
        std::vector<int> bp(p.begin(), p.begin() + bottom), tp(p.begin() + bottom, p.end());
        do {
            do {
                std::vector<int> q = bp;
                q.insert(q.end(), tp.begin(), tp.end());
                Edges r;
                for (auto [a, b] : e) r.insert({q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]});
                if (r == e) ++aut;
                if (first || r < best) best = r;
                first = false;
            } while (std::next_permutation(tp.begin(), tp.end()));
        } while (std::next_permutation(bp.begin(), bp.end()));
        out[best] = aut;
    }
    return out;
}

} // namespace

TEST(Leveled, LoneVertices)
{
    EXPECT_EQ(enumerate_two_leveled(1, 0).size(), 1u);
    EXPECT_EQ(enumerate_two_leveled(0, 1).size(), 1u);
    EXPECT_EQ(enumerate_bowtie_shapes(0, 0).size(), 1u);
    EXPECT_TRUE(enumerate_two_leveled(2, 0).empty());
}

TEST(Leveled, TwoLevelClassesMatchBruteForce)
{
    for (int b = 0; b <= 3; ++b)
        for (int t = 0; t <= 3; ++t) {
            if (b + t == 0) continue;
            auto want = oracle_two_leveled(b, t);
            auto got = enumerate_two_leveled(b, t);
            ASSERT_EQ(got.size(), want.size()) << b << "+" << t;
            std::multiset<long long> wa, ga;
            for (const auto& kv : want) wa.insert(kv.second);
            for (const auto& lg : got) {
                ga.insert(lg.automorphisms.get_si());
                for (auto [u, v] : lg.graph.edges()) EXPECT_GT(lg.level[static_cast<std::size_t>(u)], lg.level[static_cast<std::size_t>(v)]);
            }
            EXPECT_EQ(ga, wa) << b << "+" << t;
        }
}

TEST(Leveled, CompleteBipartiteClassHasFourAutomorphisms)
{
    bool found = false;
    for (const auto& lg : enumerate_two_leveled(2, 2))
        if (lg.graph.edge_count() == 4) found = lg.automorphisms == 4;
    EXPECT_TRUE(found);
}

TEST(Leveled, BowtieShapesHaveOneMiddleVertexAndDescendingEdges)
{
    for (int b = 0; b <= 2; ++b)
        for (int t = 0; t <= 2; ++t)
            for (const auto& lg : enumerate_bowtie_shapes(b, t)) {
                EXPECT_EQ(std::count(lg.level.begin(), lg.level.end(), 2), 1);
                for (auto [u, v] : lg.graph.edges()) EXPECT_GT(lg.level[static_cast<std::size_t>(u)], lg.level[static_cast<std::size_t>(v)]);
                EXPECT_TRUE(is_connected(lg.graph));
            }
}

// ---------------------------------------------------------------- trees

TEST(Trees, RootedTreeCounts)
{
    // Euler transform of a(n): a(n+1) = (1/n) Σ_{k=1..n} (Σ_{d|k} d·a(d)) a(n−k+1)
    std::vector<long long> a(9, 0);
    a[1] = 1;
    for (int n = 1; n < 8; ++n) {
        long long s = 0;
        for (int k = 1; k <= n; ++k) {
            long long inner = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) inner += d * a[static_cast<std::size_t>(d)];
            s += inner * a[static_cast<std::size_t>(n - k + 1)];
        }
        a[static_cast<std::size_t>(n + 1)] = s / n;
    }
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(static_cast<long long>(enumerate_rooted_trees(n).size()), a[static_cast<std::size_t>(n)]) << n;
}

TEST(Trees, TreeAutomorphisms)
{
    TreeNode leaf{0, {}};
    TreeNode cherry{0, {leaf, leaf}};
    EXPECT_EQ(tree_automorphisms(cherry), 2);
    EXPECT_EQ(tree_automorphisms(TreeNode{0, {cherry, cherry}}), 8);
    EXPECT_EQ(tree_automorphisms(TreeNode{0, {leaf, cherry}}), 2);
}

TEST(Trees, CoefficientC)
{
    EXPECT_EQ(coefficient_C(PlanarTree::edge()), 1);
    EXPECT_EQ(coefficient_C(PlanarTree::corolla(3)), 6);
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(coefficient_C(PlanarTree::corolla(m)), factorial(static_cast<unsigned>(m)));
    using P = PlanarTree;
    P example = P::corolla({P::corolla({P::edge(), P::corolla(0), P::edge()}), P::corolla({P::edge()})});
    EXPECT_EQ(example.vertex_count(), 4);
    EXPECT_EQ(coefficient_C(example), 96);
}

TEST(Trees, CoefficientCMatchesVertexProduct)
{
    for (const PlanarTree& t : enumerate_planar_trees(8)) {
        EXPECT_EQ(coefficient_C(t), oracle_C_flat(t)) << t.encode();
        EXPECT_EQ(coefficient_C(t), oracle_C(t));
    }
}

TEST(Trees, PlanarTreeSizes)
{
    std::map<int, int> count;
    for (const PlanarTree& t : enumerate_planar_trees(7)) ++count[t.vertex_count() + t.leaf_count()];
    // size s: s = 1 is the bare edge; otherwise a root over an ordered forest of total size s − 1
    std::vector<long long> T(8, 0), F(8, 0);
    F[0] = 1;
    for (int s = 1; s <= 7; ++s) {
        T[static_cast<std::size_t>(s)] = (s == 1 ? 1 : 0) + F[static_cast<std::size_t>(s - 1)];
        for (int k = 1; k <= s; ++k) F[static_cast<std::size_t>(s)] += T[static_cast<std::size_t>(k)] * F[static_cast<std::size_t>(s - k)];
    }
    for (int s = 1; s <= 7; ++s) EXPECT_EQ(count[s], T[static_cast<std::size_t>(s)]) << s;
}

// ---------------------------------------------------------------- PaPRT

namespace {

// Independent reading of the three conditions on a planar tree with a vertex partition.
bool oracle_paprt_valid(const PlanarTree& t, const std::vector<int>& block, int blocks)
{
    std::vector<int> parent, arity;
    std::function<void(const PlanarTree&, int)> walk = [&](const PlanarTree& s, int p) {
        int me = static_cast<int>(parent.size());
        parent.push_back(p);
        arity.push_back(s.arity());
        for (const auto& c : s.children)
            if (!c.leaf) walk(c, me);
    };
    walk(t, -1);
    for (int b = 0; b < blocks; ++b) {
        std::vector<int> mem;
        for (std::size_t v = 0; v < block.size(); ++v)
            if (block[v] == b) mem.push_back(static_cast<int>(v));
        if (mem.empty()) return false;
        int entries = 0;
        for (int v : mem)
            if (parent[static_cast<std::size_t>(v)] < 0 || block[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] != b) ++entries;
        if (entries != 1) return false;
        if (mem.size() == 1 && arity[static_cast<std::size_t>(mem[0])] == 0) continue;
        for (int v : mem)
            if (arity[static_cast<std::size_t>(v)] < 2) return false;
    }
    return true;
}

// Only the contracted tree is planar, so the child blocks of a block may come in any order,
// including orders no single planar drawing produces depth-first.
std::vector<PaBlock> reorderings(const PaBlock& b)
{
    if (b.zero) return {b};
    std::vector<PaBlock> out;
    std::vector<std::size_t> idx(b.children.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::vector<std::pair<int, PaBlock>> base;
        for (std::size_t k : idx) base.push_back(b.children[k]);
        std::vector<std::pair<int, PaBlock>> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == base.size()) {
                PaBlock r = b;
                r.children = cur;
                out.push_back(r);
                return;
            }
            for (const auto& c : reorderings(base[k].second)) {
                cur.emplace_back(base[k].first, c);
                rec(k + 1);
                cur.pop_back();
            }
        };
        rec(0);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::set<std::string> oracle_paprt(int n)
{
    std::set<std::string> out;
    for (const PlanarTree& t : enumerate_planar_trees(n)) {
        if (t.leaf || t.vertex_count() + t.leaf_count() != n) continue;
        const int v = t.vertex_count();
        std::vector<int> rgs(static_cast<std::size_t>(v), 0);
        std::function<void(int, int)> rec = [&](int i, int used) {
            if (i == v) {
                if (oracle_paprt_valid(t, rgs, used)) {
                    PartitionedTree p{t, rgs, used};
                    for (const auto& b : reorderings(abstract_paprt(p))) out.insert(b.encode());
                }
                return;
            }
            for (int b = 0; b <= used; ++b) {
                rgs[static_cast<std::size_t>(i)] = b;
                rec(i + 1, std::max(used, b + 1));
            }
        };
        rec(0, 0);
    }
    return out;
}

} // namespace

TEST(Paprt, ExampleIsValid)
{
    EXPECT_TRUE(validate_paprt(example_paprt()).empty());
    EXPECT_EQ(abstract_paprt(example_paprt()).encode(), "v{L1@1,2}[v{L2@1}[o];v{L1}(v{L2})]");
}

TEST(Paprt, EmptyBlockIsNamed)
{
    PartitionedTree p = example_paprt();
    p.block_count = 5;
    auto v = validate_paprt(p);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().condition, "empty-block");
}

TEST(Paprt, AritySmallBlockIsNamed)
{
    using P = PlanarTree;
    PartitionedTree p;
    p.tree = P::corolla({P::corolla({P::edge()}), P::edge()});
    p.block = {0, 0};
    p.block_count = 1;
    auto v = validate_paprt(p);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().condition, "block-shape");
}

TEST(Paprt, DisconnectedBlockIsNamed)
{
    PartitionedTree p = example_paprt();
    p.block = {0, 1, 2, 1, 1};  // left vertex grouped with the right pair
    p.block_count = 3;
    auto v = validate_paprt(p);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().condition, "contraction");
}

TEST(Paprt, BadIndexIsNamed)
{
    PartitionedTree p = example_paprt();
    p.block.pop_back();
    EXPECT_EQ(validate_paprt(p).front().condition, "not-a-partition");
}

TEST(Paprt, EnumerationMatchesBruteForce)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> mine;
        for (const auto& b : enumerate_paprt(n)) {
            mine.insert(b.encode());
            EXPECT_EQ(b.size(), n);
            PartitionedTree c = concrete_paprt(b);
            EXPECT_TRUE(validate_paprt(c).empty());
            EXPECT_EQ(c.tree.vertex_count() + c.tree.leaf_count(), n);
        }
        EXPECT_EQ(mine, oracle_paprt(n)) << "n = " << n;
    }
}

TEST(Paprt, CountsAreFrozen)
{
    // from the brute-force comparison above
    std::vector<std::size_t> want = {1, 0, 3, 4, 23};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_paprt(n).size(), want[static_cast<std::size_t>(n - 1)]) << n;
    EXPECT_THROW(enumerate_paprt(10), BoundError);
}

// ---------------------------------------------------------------- LaPRT

namespace {

std::string first_condition(const LaTree& t)
{
    auto v = validate_laprt(t);
    return v.empty() ? "" : v.front().condition;
}

std::vector<std::vector<int>> all_perms(int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Every planar tree of the given weight with arbitrary child order and every string
// of length equal to its number of 01-leaves, filtered by the validator.
std::vector<LaTree> oracle_candidates(int w)
{
    std::vector<LaTree> out;
    if (w == 1) {
        out.push_back(LaTree::leaf01());
        out.push_back(LaTree::leaf0());
        out.push_back(LaTree::zero());
        return out;
    }
    std::vector<LaTree> seq;
    std::function<void(int)> fill = [&](int r) {
        if (r == 0) {
            if (seq.size() < 2) return;
            const int m = static_cast<int>(seq.size());
            int a = 0;
            for (const auto& c : seq) a += c.kind == LaTree::Kind::Leaf01;
            auto perms = all_perms(m);
            std::vector<std::vector<int>> strings;
            std::function<void(int)> pick = [&](int i) {
                if (i == a) {
                    out.push_back(LaTree::vertex(strings, seq));
                    return;
                }
                for (const auto& p : perms) {
                    strings.push_back(p);
                    pick(i + 1);
                    strings.pop_back();
                }
            };
            pick(0);
            return;
        }
        for (int s = 1; s <= std::min(r, w - 1); ++s)
            for (const LaTree& t : oracle_candidates(s)) {
                if (t.kind == LaTree::Kind::Vertex && !t.children.empty() && !validate_laprt(t).empty()) continue;
                seq.push_back(t);
                fill(r - s);
                seq.pop_back();
            }
    };
    fill(w);
    return out;
}

} // namespace

TEST(Laprt, ExampleIsValid)
{
    EXPECT_TRUE(validate_laprt(example_laprt()).empty());
    EXPECT_EQ(example_laprt().weight(), 7);
}

TEST(Laprt, MutationsNameTheirCondition)
{
    using L = LaTree;
    L base = example_laprt();

    L short_string = base;
    short_string.strings.pop_back();
    EXPECT_EQ(first_condition(short_string), "StringLength");

    L repeated = base;
    repeated.strings[1] = repeated.strings[0];
    EXPECT_EQ(first_condition(repeated), "RepeatedPermutation");

    L not_perm = base;
    not_perm.strings[0] = {1, 1, 3, 4};
    EXPECT_EQ(first_condition(not_perm), "NotPermutation");

    L order = base;
    std::swap(order.children[1], order.children[2]);
    EXPECT_EQ(first_condition(order), "LeafOrder");

    L arity_one = base;
    arity_one.children[2] = L::vertex({}, {L::leaf01()});
    EXPECT_EQ(first_condition(arity_one), "ArityOne");

    L bare = L::leaf01();
    EXPECT_EQ(first_condition(bare), "BareLeaf");

    // over (01, c0, c0) the two internal edges must keep their order in σ
    L monotone = L::vertex({{1, 3, 2}}, {L::leaf01(), L::zero(), L::zero()});
    EXPECT_EQ(first_condition(monotone), "Monotone");

    // with a = 1, I_0 = σ_0({1..σ_0⁻¹(1)−1}) must cover the 0-leaves
    L partition = L::vertex({{1, 2}}, {L::leaf01(), L::leaf0()});
    EXPECT_EQ(first_condition(partition), "OrderedPartition");
}

TEST(Laprt, WeightTwo)
{
    std::vector<std::string> enc;
    for (const auto& t : enumerate_laprt(2)) enc.push_back(t.encode());
    EXPECT_EQ(enc, (std::vector<std::string>{"v<12,21>(01,01)", "v<12>(01,c0)", "v<21>(01,0)"}));
}

TEST(Laprt, EnumerationMatchesFilteredCandidates)
{
    for (int w = 1; w <= 4; ++w) {
        std::set<std::string> want;
        for (const auto& t : oracle_candidates(w))
            if (validate_laprt(t).empty()) want.insert(t.encode());
        std::set<std::string> got;
        for (const auto& t : enumerate_laprt(w)) got.insert(t.encode());
        EXPECT_EQ(got, want) << "w = " << w;
    }
}

TEST(Laprt, EnumerationIsValidSortedAndCounted)
{
    std::vector<std::size_t> want = {1, 3, 24, 1953};
    for (int w = 1; w <= 4; ++w) {
        auto ts = enumerate_laprt(w);
        EXPECT_EQ(ts.size(), want[static_cast<std::size_t>(w - 1)]) << w;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            EXPECT_TRUE(validate_laprt(ts[i]).empty()) << ts[i].encode();
            EXPECT_EQ(ts[i].weight(), w);
            if (i) {
                EXPECT_LT(ts[i - 1].encode(), ts[i].encode());
            }
        }
    }
    EXPECT_THROW(enumerate_laprt(5), BoundError);
}
