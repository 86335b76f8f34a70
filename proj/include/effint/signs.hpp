#pragma once

#include <effint/errors.hpp>

#include <vector>

namespace effint {

/// Sign of moving argument i to position perm[i], arguments of the given degrees.
inline int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees)
{
    if (perm.size() != degrees.size())
        throw PreconditionError("koszul_sign: permutation and degree list differ in length");
    int sign = 1;
    const std::size_t n = perm.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((degrees[i] & 1) == 0) continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if ((degrees[j] & 1) != 0 && perm[i] > perm[j]) sign = -sign;
    }
    return sign;
}

inline int parity_sign(long long exponent) { return (exponent & 1) ? -1 : 1; }

inline bool is_permutation_of_range(const std::vector<int>& perm, int base = 0)
{
    std::vector<char> seen(perm.size(), 0);
    for (int v : perm) {
        int k = v - base;
        if (k < 0 || k >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(k)]) return false;
        seen[static_cast<std::size_t>(k)] = 1;
    }
    return true;
}

} // namespace effint
