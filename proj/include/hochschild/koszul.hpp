#pragma once

#include "scalar.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace hoch {

// Koszul parity of a reordering. perm[i] is the index of the item placed at
// position i of the new order, par[j] the parity of item j. Every transposed
// pair of odd items contributes one sign.
inline int koszul_parity(std::span<const int> perm, std::span<const int> par)
{
    if (perm.size() != par.size())
        throw std::invalid_argument("koszul_parity: permutation and parity table differ in length");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[p])
            throw std::invalid_argument("koszul_parity: not a permutation");
        seen[p] = 1;
    }
    int s = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                s ^= par[perm[a]] & par[perm[b]] & 1;
    return s;
}

inline Scalar koszul_sign(std::span<const int> perm, std::span<const int> par)
{
    return sign(koszul_parity(perm, par));
}

// Parity of moving an object of parity p across a block whose parities sum to q.
inline int cross(int p, int q) { return p & q & 1; }

inline int parity_sum(std::span<const int> par, std::size_t from, std::size_t to)
{
    int s = 0;
    for (std::size_t i = from; i < to && i < par.size(); ++i)
        s ^= par[i] & 1;
    return s;
}

// Koszul parity of the cyclic rotation that brings items [k+1, n) in front of
// items [0, k+1).
inline int rotation_parity(std::span<const int> par, std::size_t k)
{
    return cross(parity_sum(par, 0, k + 1), parity_sum(par, k + 1, par.size()));
}

} // namespace hoch
