#pragma once

#include <effint/assoc.hpp>
#include <effint/linalg.hpp>

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace effint {

struct LyndonBracket {
    Word word;
    std::string text;      // standard bracketing, e.g. "[x,[x,y]]"
    WordSeries expansion;  // image in the free associative algebra
};

/// Lyndon words of length exactly k over letters 0..r-1 (Duval's algorithm).
inline std::vector<std::vector<int>> lyndon_words(int r, int k)
{
    std::vector<std::vector<int>> out;
    if (r <= 0 || k <= 0) return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == r - 1) w.pop_back();
    }
    return out;
}

inline bool is_lyndon(const std::vector<int>& w)
{
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<int> rot(w.begin() + static_cast<long>(i), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < rot)) return false;
    }
    return true;
}

namespace detail {

inline void standard_bracket(const std::vector<int>& w, const WordSeries& proto, const Alphabet& a, std::string& text,
                             WordSeries& expansion)
{
    if (w.size() == 1) {
        text = a[w[0]].name;
        expansion = WordSeries::single(proto.alphabet(), proto.truncation(), Word{w});
        return;
    }
    std::size_t split = 1;
    for (; split < w.size(); ++split)
        if (is_lyndon(std::vector<int>(w.begin() + static_cast<long>(split), w.end()))) break;
    std::vector<int> u(w.begin(), w.begin() + static_cast<long>(split));
    std::vector<int> v(w.begin() + static_cast<long>(split), w.end());
    std::string tu, tv;
    WordSeries eu, ev;
    standard_bracket(u, proto, a, tu, eu);
    standard_bracket(v, proto, a, tv, ev);
    text = "[" + tu + "," + tv + "]";
    expansion = assoc_bracket(eu, ev);
}

} // namespace detail

/// Lyndon brackets of total weight k over the listed generators (all generators if empty).
inline std::vector<LyndonBracket> lyndon_basis(const AlphabetPtr& alphabet, int k, int truncation,
                                               std::vector<int> generators = {})
{
    if (k > truncation) throw PreconditionError("lyndon_basis: weight exceeds truncation");
    if (generators.empty())
        for (std::size_t i = 0; i < alphabet->size(); ++i) generators.push_back(static_cast<int>(i));
    std::sort(generators.begin(), generators.end());
    const int r = static_cast<int>(generators.size());
    WordSeries proto(alphabet, truncation);
    std::vector<LyndonBracket> out;
    for (int len = 1; len <= k; ++len) {
        for (const auto& lw : lyndon_words(r, len)) {
            std::vector<int> w;
            for (int l : lw) w.push_back(generators[static_cast<std::size_t>(l)]);
            Word word{w};
            if (word.weight(*alphabet) != k) continue;
            LyndonBracket b{word, {}, proto};
            detail::standard_bracket(w, proto, *alphabet, b.text, b.expansion);
            out.push_back(std::move(b));
        }
    }
    std::sort(out.begin(), out.end(), [](const LyndonBracket& a, const LyndonBracket& b) { return a.word < b.word; });
    return out;
}

namespace detail {

inline std::vector<int> letters_used(const WordSeries& s)
{
    std::set<int> used;
    for (const auto& kv : s)
        for (int l : kv.first.letters) used.insert(l);
    return {used.begin(), used.end()};
}

// All words over the given letters of exact weight k.
inline void words_of_weight(const Alphabet& a, const std::vector<int>& letters, int k, std::vector<int>& cur,
                            std::vector<Word>& out)
{
    if (k == 0) {
        if (!cur.empty()) out.push_back(Word{cur});
        return;
    }
    for (int l : letters) {
        if (a[l].weight > k) continue;
        cur.push_back(l);
        words_of_weight(a, letters, k - a[l].weight, cur, out);
        cur.pop_back();
    }
}

// Spanning set of the weight-k part of the free Lie (super)algebra on the given letters.
inline std::vector<WordSeries> lie_spanning_set(const WordSeries& proto, const std::vector<int>& letters, int k)
{
    const Alphabet& a = proto.letters();
    bool all_even = true;
    for (int l : letters) all_even = all_even && (a[l].degree % 2 == 0);
    std::vector<WordSeries> out;
    if (all_even) {
        for (auto& b : lyndon_basis(proto.alphabet(), k, proto.truncation(), letters)) out.push_back(b.expansion);
        return out;
    }
    // Right-normed brackets of all words span the free Lie superalgebra.
    std::vector<Word> words;
    std::vector<int> cur;
    words_of_weight(a, letters, k, cur, words);
    for (const Word& w : words) {
        WordSeries v = WordSeries::single(proto.alphabet(), proto.truncation(), Word{{w.letters.back()}});
        for (std::size_t i = w.letters.size() - 1; i-- > 0;)
            v = assoc_bracket(WordSeries::single(proto.alphabet(), proto.truncation(), Word{{w.letters[i]}}), v);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// True iff every homogeneous component lies in the span of Lie brackets of generators.
inline bool is_lie_element(const WordSeries& s)
{
    if (s.coeff(Word{}) != 0) throw PreconditionError("is_lie_element: constant term present");
    std::vector<int> letters = detail::letters_used(s);
    std::set<int> weights;
    for (const auto& kv : s) weights.insert(s.weight_of(kv.first));
    for (int k : weights) {
        SparseEchelon<Word> span;
        for (const auto& v : detail::lie_spanning_set(s, letters, k)) span.insert(v.terms());
        if (!span.contains(s.homogeneous(k).terms())) return false;
    }
    return true;
}

/// Coordinates of a Lie element in the Lyndon-bracket basis (even generators).
inline std::vector<std::pair<LyndonBracket, Rational>> lyndon_coordinates(const WordSeries& s)
{
    std::vector<int> letters = detail::letters_used(s);
    for (int l : letters)
        if (s.letters()[l].degree % 2 != 0)
            throw PreconditionError("lyndon_coordinates: odd generators have no Lyndon basis");
    std::vector<std::pair<LyndonBracket, Rational>> out;
    std::set<int> weights;
    for (const auto& kv : s) weights.insert(s.weight_of(kv.first));
    for (int k : weights) {
        auto basis = lyndon_basis(s.alphabet(), k, s.truncation(), letters);
        WordSeries rest = s.homogeneous(k);
        // P_w = w + (lexicographically larger words), so peel off the smallest word.
        while (!rest.empty()) {
            const Word& m = rest.begin()->first;
            auto it = std::find_if(basis.begin(), basis.end(), [&](const LyndonBracket& b) { return b.word == m; });
            if (it == basis.end())
                throw PreconditionError("lyndon_coordinates: not a Lie element (stuck at " + m.encode(s.letters()) +
                                        ")");
            Rational c = rest.begin()->second;
            rest -= it->expansion * c;
            out.emplace_back(*it, c);
        }
    }
    return out;
}

/// Iterated adjoint ad_a^k(b).
template <class S, class Bracket>
S ad_power(const S& a, S b, int k, Bracket&& bracket)
{
    for (int i = 0; i < k && !b.empty(); ++i) b = bracket(a, b);
    return b;
}

/// Dynkin's formula
///   Σ_n (−1)^{n−1}/n Σ [x^{p₁}y^{q₁}⋯x^{p_n}y^{q_n}] / ((Σ pᵢ+qᵢ) ∏ pᵢ!qᵢ!)
/// generated from the innermost letter outwards; sequences longer than the truncation are never built.
template <class S, class Bracket>
S bch_dynkin_generic(const S& x, const S& y, Bracket&& bracket)
{
    x.check_compatible(y);
    const int N = x.truncation();
    S result = x.zero_like();
    std::function<void(const S&, int, int, const Rational&)> grow = [&](const S& value, int n, int total,
                                                                          const Rational& inv_fact) {
        if (value.empty()) return;
        Rational coeff = ratio(n % 2 ? 1 : -1, n) / total * inv_fact;
        result += value * coeff;
        for (int p = 0; total + p <= N; ++p) {
            S vx_inner = value;
            for (int q = 0; total + p + q <= N; ++q) {
                if (q > 0) vx_inner = bracket(y, vx_inner);
                if (p + q == 0) continue;
                if (total + p + q > N || vx_inner.empty()) break;
                S v = ad_power(x, vx_inner, p, bracket);
                Rational f = inv_fact / Rational(factorial(static_cast<unsigned>(p)) *
                                                 factorial(static_cast<unsigned>(q)));
                grow(v, n + 1, total + p + q, f);
            }
        }
    };
    // Innermost block x^{p_n} y^{q_n}: either (1,0) giving x, or (p,1) giving ad_x^p(y).
    grow(x, 1, 1, Rational(1));
    S adxy = y;
    for (int p = 0; p + 1 <= N; ++p) {
        if (p > 0) adxy = bracket(x, adxy);
        if (adxy.empty()) break;
        grow(adxy, 1, p + 1, ratio(1, factorial(static_cast<unsigned>(p))));
    }
    return result;
}

inline WordSeries bch_dynkin(const WordSeries& x, const WordSeries& y)
{
    return bch_dynkin_generic(x, y, [](const WordSeries& a, const WordSeries& b) { return assoc_bracket(a, b); });
}

/// exp(ad_λ)(α) + ((id − exp(ad_λ))/ad_λ)(dλ), generic over the bracket.
template <class S, class Bracket>
S lie_gauge_action_generic(const S& lambda, const S& alpha, const S& dlambda, Bracket&& bracket)
{
    lambda.check_compatible(alpha);
    lambda.check_compatible(dlambda);
    const int N = lambda.truncation();
    S result = alpha;
    S a = alpha;
    S b = dlambda;
    result -= b;  // k = 1 term of the second sum
    for (int k = 1; k <= N; ++k) {
        a = bracket(lambda, a);
        b = bracket(lambda, b);
        if (a.empty() && b.empty()) break;
        result += a * ratio(1, factorial(static_cast<unsigned>(k)));
        result -= b * ratio(1, factorial(static_cast<unsigned>(k + 1)));
    }
    return result;
}

inline WordSeries lie_gauge_action(const WordSeries& lambda, const WordSeries& alpha, const WordSeries& dlambda)
{
    detail::require_no_constant(lambda, "lie_gauge_action");
    detail::require_degree(lambda, 0, "lie_gauge_action: lambda");
    detail::require_degree(alpha, -1, "lie_gauge_action: alpha");
    detail::require_degree(dlambda, -1, "lie_gauge_action: dlambda");
    return lie_gauge_action_generic(lambda, alpha, dlambda,
                                    [](const WordSeries& a, const WordSeries& b) { return assoc_bracket(a, b); });
}

} // namespace effint
