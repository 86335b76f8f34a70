#pragma once

#include <effint/series.hpp>
#include <effint/signs.hpp>

#include <map>
#include <string>
#include <vector>

namespace effint {

/// Monomial of the free associative algebra; the empty word is the unit.
struct Word {
    std::vector<int> letters;

    static constexpr std::string_view family = "word";

    bool is_unit() const { return letters.empty(); }
    int weight(const Alphabet& a) const
    {
        int w = 0;
        for (int l : letters) w += a[l].weight;
        return w;
    }
    int degree(const Alphabet& a) const
    {
        int d = 0;
        for (int l : letters) d += a[l].degree;
        return d;
    }
    std::string encode(const Alphabet& a) const
    {
        if (letters.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += '*';
            s += a[letters[i]].name;
        }
        return s;
    }
    auto operator<=>(const Word&) const = default;
};

using WordSeries = Series<Word>;

inline Word concat(const Word& a, const Word& b)
{
    Word w{a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

/// Parses "x*y*x" (or "1") against an alphabet.
inline Word parse_word(const Alphabet& a, const std::string& text)
{
    Word w;
    if (text == "1") return w;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find('*', start);
        std::string name = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        w.letters.push_back(a.index(name));
        if (stop == std::string::npos) break;
        start = stop + 1;
    }
    return w;
}

inline WordSeries word_unit(const AlphabetPtr& a, int N) { return WordSeries::single(a, N, Word{}); }

inline WordSeries word_generator(const AlphabetPtr& a, int N, const std::string& name)
{
    return WordSeries::single(a, N, Word{{a->index(name)}});
}

inline WordSeries assoc_mul(const WordSeries& a, const WordSeries& b)
{
    a.check_compatible(b);
    WordSeries r = a.zero_like();
    const int N = a.truncation();
    for (const auto& [u, cu] : a) {
        int wu = a.weight_of(u);
        for (const auto& [v, cv] : b) {
            if (wu + b.weight_of(v) > N) continue;
            r.add_term(concat(u, v), cu * cv);
        }
    }
    return r;
}

/// Graded commutator a⋆b − (−1)^{|a||b|} b⋆a, term by term.
inline WordSeries assoc_bracket(const WordSeries& a, const WordSeries& b)
{
    a.check_compatible(b);
    WordSeries r = a.zero_like();
    const int N = a.truncation();
    for (const auto& [u, cu] : a) {
        int wu = a.weight_of(u), du = a.degree_of(u);
        for (const auto& [v, cv] : b) {
            if (wu + b.weight_of(v) > N) continue;
            Rational c = cu * cv;
            r.add_term(concat(u, v), c);
            r.add_term(concat(v, u), -c * parity_sign(static_cast<long long>(du) * b.degree_of(v)));
        }
    }
    return r;
}

namespace detail {

inline void require_no_constant(const WordSeries& s, const char* what)
{
    for (const auto& kv : s)
        if (kv.first.is_unit()) throw PreconditionError(std::string(what) + ": constant term present");
}

inline WordSeries require_grouplike_part(const WordSeries& g, const char* what)
{
    if (g.coeff(Word{}) != 1) throw PreconditionError(std::string(what) + ": constant term must be 1");
    return g - word_unit(g.alphabet(), g.truncation());
}

inline void require_degree(const WordSeries& s, int degree, const char* what)
{
    for (const auto& kv : s)
        if (s.degree_of(kv.first) != degree)
            throw PreconditionError(std::string(what) + ": expected degree " + std::to_string(degree) + ", found " +
                                    kv.first.encode(s.letters()));
}

} // namespace detail

inline WordSeries exp_assoc(const WordSeries& lambda)
{
    detail::require_no_constant(lambda, "exp_assoc");
    WordSeries result = word_unit(lambda.alphabet(), lambda.truncation());
    WordSeries power = result;
    for (int n = 1; n <= lambda.truncation(); ++n) {
        power = assoc_mul(power, lambda);
        if (power.empty()) break;
        result += power * ratio(1, factorial(static_cast<unsigned>(n)));
    }
    return result;
}

/// ln(g) for g with constant term 1.
inline WordSeries log_assoc(const WordSeries& g)
{
    WordSeries lambda = detail::require_grouplike_part(g, "log_assoc");
    WordSeries result = g.zero_like();
    WordSeries power = word_unit(g.alphabet(), g.truncation());
    for (int n = 1; n <= g.truncation(); ++n) {
        power = assoc_mul(power, lambda);
        if (power.empty()) break;
        result += power * ratio(n % 2 ? 1 : -1, n);
    }
    return result;
}

/// (1+λ)⁻¹ = Σ (−λ)^n for g = 1+λ.
inline WordSeries assoc_inverse(const WordSeries& g)
{
    WordSeries lambda = detail::require_grouplike_part(g, "assoc_inverse");
    WordSeries neg = -lambda;
    WordSeries result = word_unit(g.alphabet(), g.truncation());
    WordSeries power = result;
    for (int n = 1; n <= g.truncation(); ++n) {
        power = assoc_mul(power, neg);
        if (power.empty()) break;
        result += power;
    }
    return result;
}

inline WordSeries bch_oracle(const WordSeries& x, const WordSeries& y)
{
    return log_assoc(assoc_mul(exp_assoc(x), exp_assoc(y)));
}

/// Images of generators under a degree −1 derivation; absent generators map to 0.
template <class S>
using GeneratorImages = std::map<int, S>;

/// d(w₁⋯w_n) = Σ (−1)^{|w₁|+⋯+|w_{i−1}|} w₁⋯d(w_i)⋯w_n.
inline WordSeries assoc_differential(const WordSeries& s, const GeneratorImages<WordSeries>& d)
{
    WordSeries r = s.zero_like();
    const Alphabet& a = s.letters();
    const int N = s.truncation();
    for (const auto& [w, c] : s) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            auto it = d.find(w.letters[i]);
            if (it != d.end()) {
                s.check_compatible(it->second);
                Rational sc = c * parity_sign(prefix_degree);
                Word pre{std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<long>(i))};
                Word post{std::vector<int>(w.letters.begin() + static_cast<long>(i) + 1, w.letters.end())};
                int rest = pre.weight(a) + post.weight(a);
                for (const auto& [img, ci] : it->second)
                    if (rest + img.weight(a) <= N) r.add_term(concat(concat(pre, img), post), sc * ci);
            }
            prefix_degree += a[w.letters[i]].degree;
        }
    }
    return r;
}

/// (1+λ)⋆α⋆(1+λ)⁻¹ − dλ⋆(1+λ)⁻¹.
inline WordSeries assoc_gauge_action(const WordSeries& lambda, const WordSeries& alpha, const WordSeries& dlambda)
{
    lambda.check_compatible(alpha);
    lambda.check_compatible(dlambda);
    detail::require_no_constant(lambda, "assoc_gauge_action");
    detail::require_degree(lambda, 0, "assoc_gauge_action: lambda");
    detail::require_degree(alpha, -1, "assoc_gauge_action: alpha");
    detail::require_degree(dlambda, -1, "assoc_gauge_action: dlambda");
    WordSeries g = word_unit(lambda.alphabet(), lambda.truncation()) + lambda;
    WordSeries ginv = assoc_inverse(g);
    return assoc_mul(assoc_mul(g, alpha), ginv) - assoc_mul(dlambda, ginv);
}

} // namespace effint
