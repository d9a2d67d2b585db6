#pragma once

#include "chain.hpp"
#include "cochain.hpp"

#include <numeric>

namespace hoch {

// i_D(a_0⊗…⊗a_n) = (-1)^{|D||a_0|} a_0 D(a_1..a_d) ⊗ a_{d+1} ⊗ … ⊗ a_n.
// `A` supplies the product a_0·D(…); a derivative table may be passed here.
inline ChainVec iota(const GradedAlgebra& A, const Cochain& D, const Chain& c)
{
    ChainVec r;
    const int n = chain_length(c);
    for (const auto& [e, x] : D) {
        const int d = static_cast<int>(e.in.size());
        if (d > n || !std::equal(e.in.begin(), e.in.end(), c.begin() + 1))
            continue;
        Scalar s = sign(edeg(A, e) * A.deg[c[0]]);
        for (const auto& [o, v] : A.prod(c[0], e.out)) {
            Chain w{o};
            w.insert(w.end(), c.begin() + d + 1, c.end());
            r.add(w, x * v * s);
        }
    }
    return r;
}

// L_D: interior insertions (from index k = first, 0 in the calibrated table)
// and cyclic wraps with a_0 inside D. D may be non-normalized here, which is
// how L_m is evaluated.
inline ChainVec lie(const GradedAlgebra& A, const Cochain& D, const Chain& c, int first = 0)
{
    ChainVec r;
    const int n = chain_length(c);
    auto ps = slot_parities(A, c);
    for (const auto& [e, x] : D) {
        const int d = static_cast<int>(e.in.size());
        const int pD = (edeg(A, e) + 1) & 1;
        for (int k = first; k <= n - d; ++k) {
            if (e.out == 0) // a unit landing in a reduced slot vanishes
                continue;
            if (!std::equal(e.in.begin(), e.in.end(), c.begin() + k + 1))
                continue;
            int s = cross(pD, (A.deg[c[0]] & 1) ^ parity_sum(ps, 1, k + 1));
            Chain w(c.begin(), c.begin() + k + 1);
            w.push_back(e.out);
            w.insert(w.end(), c.begin() + k + d + 1, c.end());
            r.add(w, x * sign(s));
        }
        for (int k = std::max(0, n + 1 - d); k <= n; ++k) {
            int jj = k + d - n - 1;
            if (jj > k)
                continue;
            std::vector<int> args(c.begin() + k + 1, c.end());
            args.insert(args.end(), c.begin(), c.begin() + jj + 1);
            if (args != e.in)
                continue;
            int s = pD ^ rotation_parity(ps, k);
            Chain w{e.out};
            w.insert(w.end(), c.begin() + jj + 1, c.begin() + k + 1);
            r.add(w, x * sign(s));
        }
    }
    return r;
}

// The twisted multiplication m'(a,b) = (-1)^{|a|}ab on the full basis,
// units included. Only used through lie(); b = kappa · L_{m'}.
inline Cochain full_multiplication(const GradedAlgebra& A)
{
    Cochain m;
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b)
            for (const auto& [k, c] : A.prod(a, b))
                m.add(Elem{{a, b}, k}, c * sign(A.deg[a]));
    return m;
}

// Shared enumerator for S-type operators: the cyclic word starting after a_k,
// blocks F_1..F_m placed disjointly to the right of a_0, result 1 ⊗ word.
inline ChainVec ess_blocks(const GradedAlgebra& A, const std::vector<Cochain>& blocks, const Chain& c)
{
    ChainVec r;
    const int n = chain_length(c);
    auto ps = slot_parities(A, c);
    const int m = static_cast<int>(blocks.size());
    for (int k = 0; k <= n; ++k) {
        std::vector<int> seq(c.begin() + k + 1, c.end());
        seq.insert(seq.end(), c.begin(), c.begin() + k + 1);
        const int off = n - k;
        const int pre = rotation_parity(ps, k);
        std::vector<int> tail(seq.begin() + off + 1, seq.end());
        int head_par = A.deg[seq[off]] & 1;
        for (int i = 0; i < off; ++i)
            head_par ^= A.apar(seq[i]);
        std::vector<int> acc;
        std::function<void(int, int, int, Scalar)> rec = [&](int pos, int bi, int sg, Scalar coef) {
            if (bi == m) {
                Chain w{0};
                w.insert(w.end(), seq.begin(), seq.begin() + off + 1);
                w.insert(w.end(), acc.begin(), acc.end());
                w.insert(w.end(), tail.begin() + pos, tail.end());
                if (!reduced_tail(w))
                    return;
                r.add(w, coef * sign(sg + pre));
                return;
            }
            for (int start = pos; start <= static_cast<int>(tail.size()); ++start) {
                int pb = head_par;
                for (int i = 0; i < start; ++i)
                    pb ^= A.apar(tail[i]);
                for (const auto& [e, v] : blocks[bi]) {
                    const int d = static_cast<int>(e.in.size());
                    if (start + d > static_cast<int>(tail.size()) ||
                        !std::equal(e.in.begin(), e.in.end(), tail.begin() + start))
                        continue;
                    std::size_t keep = acc.size();
                    acc.insert(acc.end(), tail.begin() + pos, tail.begin() + start);
                    acc.push_back(e.out);
                    rec(start + d, bi + 1, sg + cross(lpar(A, e), pb), coef * v);
                    acc.resize(keep);
                }
            }
        };
        rec(0, 0, 0, Scalar(1));
    }
    return r;
}

inline ChainVec ess(const GradedAlgebra& A, const Cochain& D, const Chain& c) { return ess_blocks(A, {D}, c); }

// Shared enumerator for T-type operators: D takes a cyclic segment that
// contains a_0, with the blocks F_1..F_m applied inside D to the right of a_0.
inline ChainVec tee_blocks(const GradedAlgebra& A, const Cochain& D, const std::vector<Cochain>& blocks,
                           const Chain& c)
{
    ChainVec r;
    const int n = chain_length(c);
    auto ps = slot_parities(A, c);
    const int m = static_cast<int>(blocks.size());
    for (const auto& [eD, vD] : D) {
        for (int k = 0; k <= n; ++k) {
            std::vector<int> seq(c.begin() + k + 1, c.end());
            seq.insert(seq.end(), c.begin(), c.begin() + k + 1);
            const int off = n - k;
            const int rot = rotation_parity(ps, k);
            std::vector<int> tail(seq.begin() + off + 1, seq.end());
            int head_par = A.deg[seq[off]] & 1;
            for (int i = 0; i < off; ++i)
                head_par ^= A.apar(seq[i]);
            std::vector<int> acc(seq.begin(), seq.begin() + off + 1);
            std::function<void(int, int, int, Scalar)> rec = [&](int pos, int bi, int sg, Scalar coef) {
                if (bi == m) {
                    std::size_t keep = acc.size();
                    for (int L = pos; L <= static_cast<int>(tail.size()); ++L) {
                        if (L > pos)
                            acc.push_back(tail[L - 1]);
                        if (acc != eD.in)
                            continue;
                        Chain w{eD.out};
                        w.insert(w.end(), tail.begin() + L, tail.end());
                        r.add(w, coef * vD * sign(sg + rot));
                    }
                    acc.resize(keep);
                    return;
                }
                for (int start = pos; start <= static_cast<int>(tail.size()); ++start) {
                    int pb = head_par;
                    for (int i = 0; i < start; ++i)
                        pb ^= A.apar(tail[i]);
                    for (const auto& [e, v] : blocks[bi]) {
                        const int d = static_cast<int>(e.in.size());
                        if (start + d > static_cast<int>(tail.size()) ||
                            !std::equal(e.in.begin(), e.in.end(), tail.begin() + start))
                            continue;
                        std::size_t keep = acc.size();
                        acc.insert(acc.end(), tail.begin() + pos, tail.begin() + start);
                        acc.push_back(e.out);
                        rec(start + d, bi + 1, sg + cross(lpar(A, e), pb), coef * v);
                        acc.resize(keep);
                    }
                }
            };
            rec(0, 0, 0, Scalar(1));
        }
    }
    return r;
}

// ---- symmetric algebra side ----------------------------------------------

// A monomial E_1…E_n of S(g), g = C^{•+1}(A); each factor homogeneous.
using SMonomial = std::vector<Cochain>;

inline int lie_parity(const GradedAlgebra& A, const Cochain& E) { return (hdeg_or(A, E) + 1) & 1; }

// Left-nested composition (…(D_1∘D_2)∘…)∘D_n.
inline Cochain ybar_U(const GradedAlgebra& A, const SMonomial& w)
{
    if (w.empty())
        return Cochain(unit_elem());
    Cochain r = w[0];
    for (std::size_t i = 1; i < w.size(); ++i)
        r = circ(A, r, w[i]);
    return r;
}

// Ȳ for Y in S(g): PBW symmetrization followed by ybar_U.
inline Cochain ybar(const GradedAlgebra& A, const SMonomial& Y)
{
    const int n = static_cast<int>(Y.size());
    std::vector<int> par(n), perm(n);
    for (int i = 0; i < n; ++i)
        par[i] = lie_parity(A, Y[i]);
    std::iota(perm.begin(), perm.end(), 0);
    Cochain r;
    const Scalar inv = Scalar(1) / factorial(n);
    do {
        SMonomial w;
        for (int p : perm)
            w.push_back(Y[p]);
        r.add(ybar_U(A, w), inv * koszul_sign(perm, par));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

struct CoproductTerm {
    int parity;
    std::vector<SMonomial> blocks;
};

// Ordered splittings of Y into k nonempty blocks (internal order kept) with
// the Koszul sign for Lie parities.
inline std::vector<CoproductTerm> coproduct(const GradedAlgebra& A, const SMonomial& Y, int k)
{
    std::vector<CoproductTerm> out;
    const int n = static_cast<int>(Y.size());
    if (k < 1 || k > n)
        return out;
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i)
        par[i] = lie_parity(A, Y[i]);
    std::vector<int> lab(n, 0);
    for (;;) {
        std::vector<char> used(k, 0);
        for (int l : lab)
            used[l] = 1;
        if (std::all_of(used.begin(), used.end(), [](char u) { return u; })) {
            std::vector<int> perm;
            CoproductTerm t;
            t.blocks.resize(k);
            for (int b = 0; b < k; ++b)
                for (int i = 0; i < n; ++i)
                    if (lab[i] == b) {
                        perm.push_back(i);
                        t.blocks[b].push_back(Y[i]);
                    }
            t.parity = koszul_parity(perm, par);
            out.push_back(std::move(t));
        }
        int p = n - 1;
        while (p >= 0 && lab[p] == k - 1)
            lab[p--] = 0;
        if (p < 0)
            break;
        ++lab[p];
    }
    return out;
}

inline ChainVec iota_Y(const GradedAlgebra& A, const SMonomial& Y, const Chain& c) { return iota(A, ybar(A, Y), c); }

inline ChainVec ess_Y(const GradedAlgebra& A, const SMonomial& Y, const Chain& c)
{
    ChainVec r;
    for (int k = 1; k <= static_cast<int>(Y.size()); ++k)
        for (const auto& t : coproduct(A, Y, k)) {
            std::vector<Cochain> Fs;
            for (const auto& b : t.blocks)
                Fs.push_back(ybar(A, b));
            r.add(ess_blocks(A, Fs, c), sign(t.parity));
        }
    return r;
}

inline ChainVec tee(const GradedAlgebra& A, const Cochain& D, const SMonomial& Y, const Chain& c)
{
    ChainVec r;
    for (int k = 1; k <= static_cast<int>(Y.size()); ++k)
        for (const auto& t : coproduct(A, Y, k)) {
            std::vector<Cochain> Fs;
            for (const auto& b : t.blocks)
                Fs.push_back(ybar(A, b));
            r.add(tee_blocks(A, D, Fs, c), sign(t.parity));
        }
    return r;
}

// ---- operators on u-series ------------------------------------------------

using ChainOp = std::function<CyclicChain(const Chain&)>;

inline CyclicChain apply_op(const ChainOp& f, const CyclicChain& s)
{
    CyclicChain r;
    for (const auto& [u, v] : s.at)
        for (const auto& [c, x] : v)
            r.add(f(c), x, u);
    r.valid_hi = s.valid_hi;
    return r;
}

inline ChainOp at_u(std::function<ChainVec(const Chain&)> f, int u = 0)
{
    return [f = std::move(f), u](const Chain& c) { return CyclicChain(u, f(c)); };
}

inline ChainOp op_sum(std::vector<std::pair<ChainOp, Scalar>> terms)
{
    return [terms = std::move(terms)](const Chain& c) {
        CyclicChain r;
        for (const auto& [f, k] : terms)
            r.add(f(c), k);
        return r;
    };
}

inline ChainOp op_compose(ChainOp f, ChainOp g)
{
    return [f = std::move(f), g = std::move(g)](const Chain& c) { return apply_op(f, g(c)); };
}

// Graded commutator [f,g] = fg - (-1)^{pf pg} gf.
inline ChainOp op_comm(const ChainOp& f, int pf, const ChainOp& g, int pg)
{
    return op_sum({{op_compose(f, g), 1}, {op_compose(g, f), -sign(pf * pg)}});
}

inline ChainOp cyclic_d_op(const GradedAlgebra& A)
{
    return [&A](const Chain& c) { return cyclic_d(A, single(c)); };
}

// ι_D = i_D + u S_D
inline ChainOp iota_u(const GradedAlgebra& A, Cochain D)
{
    return [&A, D = std::move(D)](const Chain& c) {
        CyclicChain r(0, iota(A, D, c));
        r.add(1, ess(A, D, c));
        return r;
    };
}

inline ChainOp iota_Y_u(const GradedAlgebra& A, SMonomial Y)
{
    return [&A, Y = std::move(Y)](const Chain& c) {
        CyclicChain r(0, iota_Y(A, Y, c));
        r.add(1, ess_Y(A, Y, c));
        return r;
    };
}

// Compare two operators on every chain of the list, up to an optional u cap.
inline bool ops_equal(const ChainOp& f, const ChainOp& g, const std::vector<Chain>& chains, int ucap = INT_MAX,
                      Chain* witness = nullptr)
{
    for (const auto& c : chains)
        if (!equal_upto(f(c), g(c), ucap)) {
            if (witness)
                *witness = c;
            return false;
        }
    return true;
}

} // namespace hoch
