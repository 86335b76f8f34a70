#pragma once

#include <effint/alphabet.hpp>
#include <effint/errors.hpp>
#include <effint/rational.hpp>

#include <algorithm>
#include <concepts>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace effint {

template <class B>
concept BasisObject = std::totally_ordered<B> && requires(const B& b, const Alphabet& a) {
    { b.weight(a) } -> std::convertible_to<int>;
    { b.degree(a) } -> std::convertible_to<int>;
    { b.encode(a) } -> std::convertible_to<std::string>;
    { B::family } -> std::convertible_to<std::string_view>;
};

/// Finite linear combination of canonical basis objects, truncated above weight N.
template <BasisObject B>
class Series {
public:
    using basis_type = B;
    using term_map = std::map<B, Rational>;
    using const_iterator = typename term_map::const_iterator;

    Series() = default;
    Series(AlphabetPtr alphabet, int truncation) : alphabet_(std::move(alphabet)), truncation_(truncation)
    {
        if (!alphabet_) throw PreconditionError("series without alphabet");
        if (truncation_ < 0) throw PreconditionError("negative truncation weight");
    }

    static Series single(AlphabetPtr alphabet, int truncation, const B& b, const Rational& c = 1)
    {
        Series s(std::move(alphabet), truncation);
        s.add_term(b, c);
        return s;
    }

    Series zero_like() const { return Series(alphabet_, truncation_); }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Alphabet& letters() const { return *alphabet_; }
    int truncation() const { return truncation_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    int weight_of(const B& b) const { return b.weight(*alphabet_); }
    int degree_of(const B& b) const { return b.degree(*alphabet_); }

    Rational coeff(const B& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates c·b; terms above the truncation weight are discarded.
    void add_term(const B& b, const Rational& c)
    {
        if (c == 0) return;
        if (b.weight(*alphabet_) > truncation_) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void check_compatible(const Series& other) const
    {
        if (truncation_ != other.truncation_)
            throw MismatchError("truncation weights differ: " + std::to_string(truncation_) + " vs " +
                                std::to_string(other.truncation_));
        if (!same_alphabet(alphabet_, other.alphabet_)) throw MismatchError("generator alphabets differ");
    }

    Series& operator+=(const Series& o)
    {
        check_compatible(o);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        check_compatible(o);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    Series& operator*=(const Rational& r)
    {
        if (r == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= r;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& r) { return a *= r; }
    friend Series operator*(const Rational& r, Series a) { return a *= r; }
    friend Series operator-(Series a) { return a *= Rational(-1); }

    /// Equality of term maps; contexts must agree.
    friend bool operator==(const Series& a, const Series& b)
    {
        a.check_compatible(b);
        return a.terms_ == b.terms_;
    }

    /// Drops terms above weight M; M may not exceed the current truncation.
    Series truncated(int M) const
    {
        if (M > truncation_)
            throw PreconditionError("cannot raise truncation from " + std::to_string(truncation_) + " to " +
                                    std::to_string(M));
        if (M < 0) throw PreconditionError("negative truncation weight");
        Series r(alphabet_, M);
        for (const auto& [b, c] : terms_)
            if (b.weight(*alphabet_) <= M) r.terms_.emplace(b, c);
        return r;
    }

    /// Same terms viewed at a different truncation weight; raising keeps all terms.
    Series with_truncation(int M) const
    {
        if (M <= truncation_) return truncated(M);
        Series r(alphabet_, M);
        r.terms_ = terms_;
        return r;
    }

    Series homogeneous(int k) const
    {
        Series r(alphabet_, truncation_);
        for (const auto& [b, c] : terms_)
            if (b.weight(*alphabet_) == k) r.terms_.emplace(b, c);
        return r;
    }

    Series without_weight_zero() const
    {
        Series r(alphabet_, truncation_);
        for (const auto& [b, c] : terms_)
            if (b.weight(*alphabet_) > 0) r.terms_.emplace(b, c);
        return r;
    }

    /// Sum of the coefficients of weight-0 terms (the unit, where the family has one).
    Rational constant_term() const
    {
        Rational c = 0;
        for (const auto& [b, v] : terms_)
            if (b.weight(*alphabet_) == 0) c += v;
        return c;
    }

    int min_weight() const
    {
        int m = truncation_ + 1;
        for (const auto& kv : terms_) m = std::min(m, kv.first.weight(*alphabet_));
        return m;
    }

    /// Terms sorted by (weight, canonical encoding), the order used by every emitter.
    std::vector<std::pair<std::string, std::pair<const B*, Rational>>> ordered_terms() const
    {
        std::vector<std::pair<std::string, std::pair<const B*, Rational>>> out;
        for (const auto& [b, c] : terms_) out.push_back({b.encode(*alphabet_), {&b, c}});
        std::stable_sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
            int wx = x.second.first->weight(*alphabet_), wy = y.second.first->weight(*alphabet_);
            if (wx != wy) return wx < wy;
            return x.first < y.first;
        });
        return out;
    }

private:
    AlphabetPtr alphabet_;
    int truncation_ = 0;
    term_map terms_;
};

/// First basis object (in emitter order) where a and b differ, for diagnostics.
template <BasisObject B>
struct SeriesDiff {
    bool equal = true;
    std::string basis;
    Rational left = 0;
    Rational right = 0;
};

template <BasisObject B>
SeriesDiff<B> first_difference(const Series<B>& a, const Series<B>& b)
{
    a.check_compatible(b);
    Series<B> d = a - b;
    SeriesDiff<B> out;
    if (d.empty()) return out;
    auto ordered = d.ordered_terms();
    const B& key = *ordered.front().second.first;
    out.equal = false;
    out.basis = ordered.front().first;
    out.left = a.coeff(key);
    out.right = b.coeff(key);
    return out;
}

} // namespace effint
