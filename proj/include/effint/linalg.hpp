#pragma once

#include <effint/rational.hpp>

#include <map>

namespace effint {

/// Row-echelon accumulator for sparse vectors over exact rationals.
/// Each stored row has pivot equal to its smallest key, with pivot coefficient 1.
template <class K>
class SparseEchelon {
public:
    using Vector = std::map<K, Rational>;

    Vector reduce(Vector v) const
    {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            K key = it->first;
            Rational c = it->second;
            for (const auto& [k, r] : row->second) {
                Rational& slot = v[k];
                slot -= c * r;
                if (slot == 0) v.erase(k);
            }
            it = v.upper_bound(key);
        }
        return v;
    }

    /// Returns true when v enlarged the span.
    bool insert(const Vector& v)
    {
        Vector r = reduce(v);
        if (r.empty()) return false;
        Rational lead = r.begin()->second;
        for (auto& kv : r) kv.second /= lead;
        K pivot = r.begin()->first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(const Vector& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<K, Vector> rows_;
};

} // namespace effint
