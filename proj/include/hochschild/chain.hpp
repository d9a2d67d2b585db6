#pragma once

#include "algebra.hpp"
#include "koszul.hpp"

#include <algorithm>
#include <functional>

namespace hoch {

// Hochschild chain a_0 ⊗ a_1 ⊗ ... ⊗ a_n as basis indices. In the normalized
// complex the slots 1..n never hold the unit.
using Chain = std::vector<int>;
using ChainVec = Lin<Chain>;
using CyclicChain = USeries<Chain>;

inline int chain_deg(const GradedAlgebra& A, const Chain& c)
{
    int d = A.deg[c[0]];
    for (std::size_t i = 1; i < c.size(); ++i)
        d += A.deg[c[i]] + 1;
    return d;
}

inline int chain_length(const Chain& c) { return static_cast<int>(c.size()) - 1; }

// Shifted slot parities |a_i|+1, including slot 0.
inline std::vector<int> slot_parities(const GradedAlgebra& A, const Chain& c)
{
    std::vector<int> ps(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        ps[i] = A.apar(c[i]);
    return ps;
}

inline bool reduced_tail(const Chain& c, std::size_t from = 1)
{
    for (std::size_t i = from; i < c.size(); ++i)
        if (c[i] == 0)
            return false;
    return true;
}

// Hochschild boundary. normalized=false keeps units in the tail slots, which
// gives the un-normalized complex used as a cross-check.
inline ChainVec b_op(const GradedAlgebra& A, const Chain& c, bool normalized = true)
{
    ChainVec r;
    const int n = chain_length(c);
    auto ps = slot_parities(A, c);
    for (int k = 0; k < n; ++k) {
        int s = parity_sum(ps, 0, k + 1) + 1;
        for (const auto& [o, v] : A.prod(c[k], c[k + 1])) {
            if (normalized && k > 0 && o == 0)
                continue;
            Chain w(c.begin(), c.begin() + k);
            w.push_back(o);
            w.insert(w.end(), c.begin() + k + 2, c.end());
            r.add(w, v * sign(s));
        }
    }
    if (n >= 1) {
        int s = A.deg[c[n]] + cross(ps[n], parity_sum(ps, 0, n));
        for (const auto& [o, v] : A.prod(c[n], c[0])) {
            Chain w{o};
            w.insert(w.end(), c.begin() + 1, c.begin() + n);
            r.add(w, v * sign(s));
        }
    }
    return r;
}

// Connes operator on the normalized complex.
inline ChainVec B_op(const GradedAlgebra& A, const Chain& c)
{
    ChainVec r;
    const int n = chain_length(c);
    auto ps = slot_parities(A, c);
    for (int k = 0; k <= n; ++k) {
        Chain w{0};
        w.insert(w.end(), c.begin() + k + 1, c.end());
        w.insert(w.end(), c.begin(), c.begin() + k + 1);
        if (!reduced_tail(w))
            continue;
        r.add(w, sign(rotation_parity(ps, k)));
    }
    return r;
}

// Internal differential of a DGA extended to chains as a derivation. The
// differential passes each slot with its shifted parity |a_i|+1.
inline ChainVec delta_chain(const GradedAlgebra& A, const Chain& c)
{
    ChainVec r;
    if (!A.has_differential())
        return r;
    auto ps = slot_parities(A, c);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int s = parity_sum(ps, 0, i);
        for (const auto& [k, v] : A.d(c[i])) {
            if (i > 0 && k == 0)
                continue;
            Chain w = c;
            w[i] = k;
            r.add(w, v * sign(s));
        }
    }
    return r;
}

template <class F>
ChainVec apply_chain(const ChainVec& v, F&& f)
{
    return apply_linear<Chain>(v, std::forward<F>(f));
}

// b + δ (δ only for a DGA)
inline ChainVec b_total(const GradedAlgebra& A, const Chain& c)
{
    ChainVec r = b_op(A, c);
    if (A.has_differential())
        r.add(delta_chain(A, c));
    return r;
}

// Cyclic differential b + δ + uB on a u-series of chains.
inline CyclicChain cyclic_d(const GradedAlgebra& A, const CyclicChain& s)
{
    CyclicChain r;
    for (const auto& [u, v] : s.at)
        for (const auto& [c, x] : v) {
            r.add(u, b_total(A, c), x);
            r.add(u + 1, B_op(A, c), x);
        }
    r.valid_hi = s.valid_hi;
    return r;
}

inline CyclicChain single(const Chain& c, int u = 0, const Scalar& x = 1)
{
    CyclicChain s;
    s.add(u, c, x);
    return s;
}

// Iterate over all ways to interleave p items of one sequence with q of
// another; pos marks which output positions take the first sequence.
template <class F>
void for_each_shuffle(int p, int q, F&& f)
{
    std::vector<char> pos(p + q, 0);
    std::fill(pos.begin(), pos.begin() + p, 1);
    std::sort(pos.begin(), pos.end(), std::greater<>());
    do {
        f(pos);
    } while (std::prev_permutation(pos.begin(), pos.end()));
}

// Shuffle product (a_0⊗a)·(b_0⊗b) = ± a_0b_0 ⊗ (a ⧢ b), Koszul signs with
// weights |a_0|, |a_i|+1, |b_0|, |b_j|+1.
inline ChainVec shuffle(const GradedAlgebra& A, const Chain& x, const Chain& y)
{
    ChainVec r;
    const int p = chain_length(x), q = chain_length(y);
    std::vector<int> w(p + q + 2);
    Chain full = x;
    full.insert(full.end(), y.begin(), y.end());
    for (int i = 0; i < p + q + 2; ++i)
        w[i] = (i == 0 || i == p + 1) ? A.deg[full[i]] & 1 : A.apar(full[i]);
    for_each_shuffle(p, q, [&](const std::vector<char>& pos) {
        std::vector<int> perm{0, p + 1};
        int ia = 1, ib = p + 2;
        for (char t : pos)
            perm.push_back(t ? ia++ : ib++);
        int s = koszul_parity(perm, w);
        for (const auto& [o, v] : A.prod(x[0], y[0])) {
            Chain c{o};
            for (std::size_t i = 2; i < perm.size(); ++i)
                c.push_back(full[perm[i]]);
            r.add(c, v * sign(s));
        }
    });
    return r;
}

// Cyclic shuffle: (-1)^{|x|} Σ over rotations of both words and shuffles of
// the rotated words with a_0 placed before b_0, giving 1 ⊗ (word). Koszul
// signs use the shifted parities |·|+1 throughout.
inline ChainVec cyclic_shuffle(const GradedAlgebra& A, const Chain& x, const Chain& y)
{
    ChainVec r;
    const int p = chain_length(x), q = chain_length(y);
    Chain full = x;
    full.insert(full.end(), y.begin(), y.end());
    std::vector<int> w(full.size());
    for (std::size_t i = 0; i < full.size(); ++i)
        w[i] = A.apar(full[i]);
    const Scalar g = sign(chain_deg(A, x));
    for (int i = 0; i <= p; ++i) {
        std::vector<int> ra;
        for (int k = i; k <= p; ++k)
            ra.push_back(k);
        for (int k = 0; k < i; ++k)
            ra.push_back(k);
        for (int j = 0; j <= q; ++j) {
            std::vector<int> rb;
            for (int k = j; k <= q; ++k)
                rb.push_back(p + 1 + k);
            for (int k = 0; k < j; ++k)
                rb.push_back(p + 1 + k);
            for_each_shuffle(p + 1, q + 1, [&](const std::vector<char>& pos) {
                std::vector<int> seq;
                int ia = 0, ib = 0, posa0 = -1, posb0 = -1;
                for (char t : pos) {
                    int v = t ? ra[ia++] : rb[ib++];
                    if (v == 0)
                        posa0 = static_cast<int>(seq.size());
                    if (v == p + 1)
                        posb0 = static_cast<int>(seq.size());
                    seq.push_back(v);
                }
                if (posa0 > posb0)
                    return;
                Chain c{0};
                for (int v : seq) {
                    if (full[v] == 0)
                        return;
                    c.push_back(full[v]);
                }
                r.add(c, g * koszul_sign(seq, w));
            });
        }
    }
    return r;
}

// sh_u(x, y) = shuffle + u · cyclic shuffle
inline CyclicChain shuffle_u(const GradedAlgebra& A, const Chain& x, const Chain& y)
{
    CyclicChain r;
    r.add(0, shuffle(A, x, y));
    r.add(1, cyclic_shuffle(A, x, y));
    return r;
}

// All normalized chains of length n (slot 0 arbitrary, others reduced).
inline std::vector<Chain> chains_of_length(const GradedAlgebra& A, int n, bool normalized = true)
{
    std::vector<Chain> out;
    const int lo = normalized ? 1 : 0;
    if (normalized && n > 0 && A.dim() < 2)
        return out;
    Chain c(n + 1, lo);
    for (;;) {
        for (int a0 = 0; a0 < A.dim(); ++a0) {
            c[0] = a0;
            out.push_back(c);
        }
        int p = n;
        while (p >= 1 && c[p] == A.dim() - 1)
            c[p--] = lo;
        if (p < 1)
            break;
        ++c[p];
    }
    return out;
}

inline std::vector<Chain> chains_upto(const GradedAlgebra& A, int maxlen)
{
    std::vector<Chain> out;
    for (int n = 0; n <= maxlen; ++n) {
        auto v = chains_of_length(A, n);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

} // namespace hoch
