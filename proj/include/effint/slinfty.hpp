#pragma once

#include <effint/assoc.hpp>
#include <effint/lie.hpp>
#include <effint/series.hpp>
#include <effint/tree.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace effint {

inline constexpr int kBracketLabel = -1;

/// Rooted tree whose internal vertices are the brackets ℓ_m (m ≥ 2) and whose leaves are generators.
struct SLTree {
    TreeNode root;

    static constexpr std::string_view family = "sl-tree";

    int weight(const Alphabet& a) const { return weight_of(root, a); }
    int degree(const Alphabet& a) const { return degree_of(root, a); }
    std::string encode(const Alphabet& a) const
    {
        return encode_tree(root, [&](int l, std::size_t m) { return l < 0 ? "l" + std::to_string(m) : a[l].name; });
    }
    bool operator<(const SLTree& o) const { return root < o.root; }
    bool operator==(const SLTree& o) const { return root == o.root; }
    bool operator>(const SLTree& o) const { return o.root < root; }
    bool operator<=(const SLTree& o) const { return !(o.root < root); }
    bool operator>=(const SLTree& o) const { return !(root < o.root); }
    bool operator!=(const SLTree& o) const { return !(root == o.root); }

    static int weight_of(const TreeNode& t, const Alphabet& a)
    {
        if (t.label >= 0) return a[t.label].weight;
        int w = 0;
        for (const auto& c : t.children) w += weight_of(c, a);
        return w;
    }
    static int degree_of(const TreeNode& t, const Alphabet& a)
    {
        if (t.label >= 0) return a[t.label].degree;
        int d = -1;
        for (const auto& c : t.children) d += degree_of(c, a);
        return d;
    }
};

using SLSeries = Series<SLTree>;

inline SLSeries sl_generator(const AlphabetPtr& a, int N, const std::string& name)
{
    return SLSeries::single(a, N, SLTree{TreeNode{a->index(name), {}}});
}

/// Degree of a homogeneous series; throws on mixed degrees.
template <BasisObject B>
int homogeneous_degree(const Series<B>& s)
{
    if (s.empty()) return 0;
    int d = s.degree_of(s.begin()->first);
    for (const auto& kv : s)
        if (s.degree_of(kv.first) != d) throw PreconditionError("element is not homogeneous in degree");
    return d;
}

namespace detail {

inline int sl_append(FlatTree& f, const TreeNode& t, int parent, const Alphabet& a)
{
    int id = f.add(parent, t.label, t.label >= 0 ? a[t.label].degree : -1);
    for (const auto& c : t.children) sl_append(f, c, id, a);
    return id;
}

// Unshuffle index sets: all q-subsets of {0..m−1} in increasing order, cached.
inline const std::vector<std::vector<int>>& subsets(int m, int q)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace detail

/// ℓ_m(args) in the free algebra: a new ℓ_m vertex with the arguments grafted on, multilinear.
inline SLSeries sl_apply(int m, const std::vector<SLSeries>& args)
{
    if (m < 2) throw PreconditionError("sl_apply: arity must be at least 2");
    if (static_cast<int>(args.size()) != m) throw PreconditionError("sl_apply: argument count differs from arity");
    for (const auto& s : args) args[0].check_compatible(s);
    SLSeries out = args[0].zero_like();
    const Alphabet& a = out.letters();
    const int N = out.truncation();
    std::vector<int> rest(args.size() + 1, 0);
    for (std::size_t i = args.size(); i-- > 0;) {
        if (args[i].empty()) return out;
        rest[i] = rest[i + 1] + args[i].min_weight();
    }
    if (rest[0] > N) return out;
    std::vector<const TreeNode*> pick(args.size());
    std::function<void(std::size_t, int, const Rational&)> rec = [&](std::size_t i, int w, const Rational& c) {
        if (i == args.size()) {
            FlatTree f;
            int root = f.add(-1, kBracketLabel, -1);
            for (const TreeNode* t : pick) detail::sl_append(f, *t, root, a);
            CanonicalTree ct = canonicalize_tree(f);
            if (ct.sign != 0) out.add_term(SLTree{ct.tree}, ct.sign > 0 ? c : -c);
            return;
        }
        for (const auto& [t, ct] : args[i]) {
            int wt = t.weight(a);
            if (w + wt + rest[i + 1] > N) continue;
            pick[i] = &t.root;
            rec(i + 1, w + wt, c * ct);
        }
    };
    rec(0, 0, Rational(1));
    return out;
}

/// Right-hand side of d(ℓ_m(u₁,…,u_m)) forced by the defining relation:
/// −Σ_{p+q=m, p≥1, q≥2} Σ_{I} ε·ℓ_{p+1}(ℓ_q(u_I), u_J) − Σ_k (−1)^{|u₁|+…+|u_{k−1}|} ℓ_m(…, du_k, …).
template <class Alg>
typename Alg::element structural_differential(const Alg& alg, const std::vector<typename Alg::element>& us)
{
    using E = typename Alg::element;
    const int m = static_cast<int>(us.size());
    std::vector<int> deg;
    for (const auto& u : us) deg.push_back(alg.degree(u));
    E out = alg.zero();
    for (int q = 2; q <= m - 1; ++q) {
        for (const auto& I : detail::subsets(m, q)) {
            std::vector<int> perm(static_cast<std::size_t>(m));
            std::vector<char> inI(static_cast<std::size_t>(m), 0);
            for (int k = 0; k < q; ++k) {
                perm[static_cast<std::size_t>(I[static_cast<std::size_t>(k)])] = k;
                inI[static_cast<std::size_t>(I[static_cast<std::size_t>(k)])] = 1;
            }
            std::vector<E> inner, outer;
            int pos = q;
            for (int k = 0; k < m; ++k) {
                if (inI[static_cast<std::size_t>(k)]) inner.push_back(us[static_cast<std::size_t>(k)]);
                else {
                    perm[static_cast<std::size_t>(k)] = pos++;
                }
            }
            int eps = koszul_sign(perm, deg);
            outer.push_back(alg.bracket(inner));
            for (int k = 0; k < m; ++k)
                if (!inI[static_cast<std::size_t>(k)]) outer.push_back(us[static_cast<std::size_t>(k)]);
            E term = alg.bracket(outer);
            if (eps > 0) out -= term;
            else out += term;
        }
    }
    long long prefix = 0;
    for (int k = 0; k < m; ++k) {
        E du = alg.differential(us[static_cast<std::size_t>(k)]);
        if (!du.empty()) {
            std::vector<E> args = us;
            args[static_cast<std::size_t>(k)] = du;
            E term = alg.bracket(args);
            if (parity_sign(prefix) > 0) out -= term;
            else out += term;
        }
        prefix += deg[static_cast<std::size_t>(k)];
    }
    return out;
}

/// Free complete sL∞-algebra on the generators; d is fixed on generators (default 0).
class FreeSL {
public:
    using element = SLSeries;

    FreeSL(AlphabetPtr a, int N, GeneratorImages<SLSeries> d = {}) : a_(std::move(a)), N_(N), d_(std::move(d))
    {
        for (const auto& [g, img] : d_) {
            zero().check_compatible(img);
            if (g < 0 || g >= static_cast<int>(a_->size())) throw PreconditionError("FreeSL: unknown generator");
            for (const auto& kv : img)
                if (img.degree_of(kv.first) != (*a_)[g].degree - 1)
                    throw PreconditionError("FreeSL: differential of " + (*a_)[g].name + " has the wrong degree");
        }
    }

    SLSeries zero() const { return SLSeries(a_, N_); }
    SLSeries generator(const std::string& name) const { return sl_generator(a_, N_, name); }
    int degree(const SLSeries& s) const { return homogeneous_degree(s); }
    const AlphabetPtr& alphabet() const { return a_; }
    int truncation() const { return N_; }
    int max_arity() const { return N_; }

    SLSeries bracket(const std::vector<SLSeries>& args) const { return sl_apply(static_cast<int>(args.size()), args); }

    SLSeries differential(const SLSeries& s) const
    {
        SLSeries out = zero();
        for (const auto& [t, c] : s) out += differential_tree(t.root) * c;
        return out;
    }

private:
    SLSeries differential_tree(const TreeNode& t) const
    {
        if (t.label >= 0) {
            auto it = d_.find(t.label);
            return it == d_.end() ? zero() : it->second;
        }
        std::vector<SLSeries> us;
        for (const auto& c : t.children) us.push_back(SLSeries::single(a_, N_, SLTree{c}));
        return structural_differential(*this, us);
    }

    AlphabetPtr a_;
    int N_;
    GeneratorImages<SLSeries> d_;
};

inline SLSeries sl_differential(const SLSeries& s, const GeneratorImages<SLSeries>& d = {})
{
    return FreeSL(s.alphabet(), s.truncation(), d).differential(s);
}

/// Index of a basis vector of a finite graded space; weights give the filtration.
struct BasisIndex {
    int index = 0;

    static constexpr std::string_view family = "basis";

    int weight(const Alphabet& a) const { return a[index].weight; }
    int degree(const Alphabet& a) const { return a[index].degree; }
    std::string encode(const Alphabet& a) const { return a[index].name; }
    auto operator<=>(const BasisIndex&) const = default;
};

using VectorSeries = Series<BasisIndex>;

/// sL∞-structure given by structure constants on a finite graded basis.
class StructureAlgebra {
public:
    using element = VectorSeries;

    StructureAlgebra(AlphabetPtr basis, int N) : a_(std::move(basis)), N_(N) {}

    VectorSeries zero() const { return VectorSeries(a_, N_); }
    VectorSeries basis(const std::string& name) const { return VectorSeries::single(a_, N_, BasisIndex{a_->index(name)}); }
    int degree(const VectorSeries& s) const { return homogeneous_degree(s); }
    const AlphabetPtr& alphabet() const { return a_; }
    int truncation() const { return N_; }
    int max_arity() const { return max_arity_; }

    void set_differential(int i, const VectorSeries& v)
    {
        zero().check_compatible(v);
        for (const auto& kv : v)
            if (v.degree_of(kv.first) != (*a_)[i].degree - 1)
                throw PreconditionError("structure: differential of " + (*a_)[i].name + " has the wrong degree");
        d_[i] = v;
    }

    /// Sets ℓ_m(e_{i₁},…,e_{i_m}) = v; the symmetric extension is implied.
    void set_bracket(std::vector<int> args, VectorSeries v)
    {
        if (args.size() < 2) throw PreconditionError("structure: bracket arity must be at least 2");
        zero().check_compatible(v);
        int deg = -1;
        for (int i : args) deg += (*a_)[i].degree;
        for (const auto& kv : v)
            if (v.degree_of(kv.first) != deg)
                throw PreconditionError("structure: bracket value has the wrong degree");
        int sign = sort_args(args);
        if (sign == 0) throw PreconditionError("structure: bracket on a repeated odd argument must vanish");
        brackets_[args] = v * Rational(sign);
        max_arity_ = std::max(max_arity_, static_cast<int>(args.size()));
    }

    VectorSeries bracket(const std::vector<VectorSeries>& args) const
    {
        VectorSeries out = zero();
        if (static_cast<int>(args.size()) > max_arity_) return out;
        std::vector<int> idx(args.size());
        std::function<void(std::size_t, int, const Rational&)> rec = [&](std::size_t k, int w, const Rational& c) {
            if (k == args.size()) {
                std::vector<int> sorted = idx;
                int sign = sort_args(sorted);
                if (sign == 0) return;
                auto it = brackets_.find(sorted);
                if (it != brackets_.end()) out += it->second * (sign > 0 ? c : -c);
                return;
            }
            for (const auto& [b, cb] : args[k]) {
                int wb = b.weight(*a_);
                if (w + wb > N_) continue;
                idx[k] = b.index;
                rec(k + 1, w + wb, c * cb);
            }
        };
        rec(0, 0, Rational(1));
        return out;
    }

    VectorSeries differential(const VectorSeries& s) const
    {
        VectorSeries out = zero();
        for (const auto& [b, c] : s) {
            auto it = d_.find(b.index);
            if (it != d_.end()) out += it->second * c;
        }
        return out;
    }

private:
    // Sorts indices increasingly; returns the Koszul sign, or 0 on a repeated odd index.
    int sort_args(std::vector<int>& args) const
    {
        std::vector<int> deg, order(args.size());
        for (int i : args) deg.push_back((*a_)[i].degree);
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return args[static_cast<std::size_t>(x)] < args[static_cast<std::size_t>(y)]; });
        std::vector<int> perm(args.size());
        for (std::size_t k = 0; k < order.size(); ++k) perm[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
        std::vector<int> sorted;
        for (int o : order) sorted.push_back(args[static_cast<std::size_t>(o)]);
        for (std::size_t k = 1; k < sorted.size(); ++k)
            if (sorted[k] == sorted[k - 1] && ((*a_)[sorted[k]].degree & 1)) return 0;
        args = sorted;
        return koszul_sign(perm, deg);
    }

    AlphabetPtr a_;
    int N_;
    int max_arity_ = 1;
    std::map<int, VectorSeries> d_;
    std::map<std::vector<int>, VectorSeries> brackets_;
};

/// Suspension of a graded Lie algebra of words: an element holds a and stands for sa,
/// ℓ₂(sa, sb) = (−1)^{|a|} s[a,b], d(sa) = −s(da), ℓ_{≥3} = 0.
class SuspendedLie {
public:
    using element = WordSeries;

    SuspendedLie(AlphabetPtr a, int N, GeneratorImages<WordSeries> d = {}) : a_(std::move(a)), N_(N), d_(std::move(d)) {}

    WordSeries zero() const { return WordSeries(a_, N_); }
    int degree(const WordSeries& s) const { return homogeneous_degree(s) + 1; }
    const AlphabetPtr& alphabet() const { return a_; }
    int truncation() const { return N_; }
    int max_arity() const { return 2; }

    WordSeries bracket(const std::vector<WordSeries>& args) const
    {
        if (args.size() != 2) return zero();
        if (args[0].empty() || args[1].empty()) return zero();
        WordSeries b = assoc_bracket(args[0], args[1]);
        return homogeneous_degree(args[0]) % 2 ? -b : b;
    }
    WordSeries differential(const WordSeries& s) const { return -assoc_differential(s, d_); }

private:
    AlphabetPtr a_;
    int N_;
    GeneratorImages<WordSeries> d_;
};

/// dα + Σ_{m≥2} (1/m!) ℓ_m(α,…,α).
template <class Alg>
typename Alg::element mc_residual(const Alg& alg, const typename Alg::element& alpha)
{
    if (!alpha.empty() && alg.degree(alpha) != 0) throw PreconditionError("mc_residual: alpha must have degree 0");
    if (!alpha.empty() && alpha.min_weight() < 1) throw PreconditionError("mc_residual: alpha must have weight ≥ 1");
    auto out = alg.differential(alpha);
    if (alpha.empty()) return out;
    const int w = alpha.min_weight();
    for (int m = 2; m * w <= alg.truncation() && m <= alg.max_arity(); ++m) {
        std::vector<typename Alg::element> args(static_cast<std::size_t>(m), alpha);
        out += alg.bracket(args) * ratio(1, factorial(static_cast<unsigned>(m)));
    }
    return out;
}

inline SLSeries mc_residual(const SLSeries& alpha, const GeneratorImages<SLSeries>& d = {})
{
    return mc_residual(FreeSL(alpha.alphabet(), alpha.truncation(), d), alpha);
}

/// τ^λ(α): |ˡ = α, c_m(τ₁,…,τ_m) ↦ ℓ_{m+1}(τ₁^λ(α),…,τ_m^λ(α), λ) with ℓ₁ = d.
template <class Alg>
typename Alg::element tree_value(const Alg& alg, const PlanarTree& t, const typename Alg::element& lambda,
                                 const typename Alg::element& alpha)
{
    if (t.leaf) return alpha;
    if (t.children.empty()) return alg.differential(lambda);
    std::vector<typename Alg::element> args;
    for (const auto& c : t.children) {
        args.push_back(tree_value(alg, c, lambda, alpha));
        if (args.back().empty()) return alg.zero();
    }
    args.push_back(lambda);
    return alg.bracket(args);
}

/// Σ_{τ planar} (1/C(τ))·τ^λ(α), the time-1 gauge flow.
template <class Alg>
typename Alg::element gauge_flow(const Alg& alg, const typename Alg::element& lambda,
                                 const typename Alg::element& alpha)
{
    if (!lambda.empty() && alg.degree(lambda) != 1) throw PreconditionError("gauge_flow: lambda must have degree 1");
    if (!alpha.empty() && alg.degree(alpha) != 0) throw PreconditionError("gauge_flow: alpha must have degree 0");
    if ((!lambda.empty() && lambda.min_weight() < 1) || (!alpha.empty() && alpha.min_weight() < 1))
        throw PreconditionError("gauge_flow: arguments must have weight ≥ 1");
    const int N = alg.truncation();
    const int wa = alpha.empty() ? N + 1 : alpha.min_weight();
    const int wl = lambda.empty() ? N + 1 : lambda.min_weight();
    auto out = alg.zero();
    for (const PlanarTree& t : enumerate_planar_trees(N)) {
        if (t.leaf_count() * wa + t.vertex_count() * wl > N) continue;
        bool arity_ok = true;
        std::function<void(const PlanarTree&)> scan = [&](const PlanarTree& s) {
            if (!s.leaf && s.arity() + 1 > alg.max_arity() && s.arity() > 0) arity_ok = false;
            for (const auto& c : s.children) scan(c);
        };
        scan(t);
        if (!arity_ok) continue;
        out += tree_value(alg, t, lambda, alpha) * ratio(1, coefficient_C(t));
    }
    return out;
}

/// Universal setup on generators a (degree 0), λ (degree 1), μ = dλ (degree 0):
/// da = −Σ (1/m!) ℓ_m(a,…,a), dλ = μ, dμ = 0.
struct UniversalGaugeSetup {
    AlphabetPtr alphabet;
    FreeSL algebra;
    SLSeries a, lambda, mu;
};

inline UniversalGaugeSetup universal_gauge_setup(int N)
{
    AlphabetPtr al = make_alphabet({{"a", 0, 1}, {"λ", 1, 1}, {"μ", 0, 1}});
    SLSeries a = sl_generator(al, N, "a"), l = sl_generator(al, N, "λ"), mu = sl_generator(al, N, "μ");
    SLSeries da(al, N);
    for (int m = 2; m <= N; ++m) {
        std::vector<SLSeries> args(static_cast<std::size_t>(m), a);
        da -= sl_apply(m, args) * ratio(1, factorial(static_cast<unsigned>(m)));
    }
    GeneratorImages<SLSeries> d{{0, da}, {1, mu}};
    return {al, FreeSL(al, N, d), a, l, mu};
}

/// Reference tree c₂(c₃(|, c₀, |), c₁(|)).
inline PlanarTree example_flow_tree()
{
    using P = PlanarTree;
    return P::corolla({P::corolla({P::edge(), P::corolla(0), P::edge()}), P::corolla({P::edge()})});
}

struct Gamma21Report {
    bool pass = true;
    int first_bad_weight = 0;
    WordSeries from_flow;
    WordSeries expected;
};

/// Composes the gauges y then x on a probe z through the flow of the suspended free Lie
/// algebra; the words ending in the probe read off exp(Z), and Z must be BCH(x, y).
inline Gamma21Report gamma21_check(int N)
{
    AlphabetPtr al = make_alphabet({{"x", 0, 1}, {"y", 0, 1}, {"z", -1, 1}});
    const int M = N + 1;
    SuspendedLie alg(al, M);
    WordSeries x = word_generator(al, M, "x"), y = word_generator(al, M, "y"), z = word_generator(al, M, "z");
    WordSeries beta = gauge_flow(alg, x, gauge_flow(alg, y, z));
    const int zi = al->index("z");
    WordSeries e(al, N);
    for (const auto& [w, c] : beta) {
        if (w.letters.empty() || w.letters.back() != zi) continue;
        std::vector<int> head(w.letters.begin(), w.letters.end() - 1);
        bool clean = std::find(head.begin(), head.end(), zi) == head.end();
        if (clean) e.add_term(Word{head}, c);
    }
    Gamma21Report r;
    r.from_flow = log_assoc(e);
    r.expected = bch_dynkin(word_generator(al, N, "x"), word_generator(al, N, "y"));
    for (int k = 1; k <= N; ++k)
        if (!(r.from_flow.homogeneous(k) == r.expected.homogeneous(k))) {
            r.pass = false;
            r.first_bad_weight = k;
            break;
        }
    return r;
}

} // namespace effint
