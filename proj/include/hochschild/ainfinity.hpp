#pragma once

#include "chain.hpp"
#include "cochain.hpp"
#include "pairing.hpp"

namespace hoch {

// Chains of C^•(A): D_0 ⊗ D_1 ⊗ … ⊗ D_N of elementary cochains. Slots ≥ 1
// never hold the unit 0-cochain.
using CCWord = std::vector<Elem>;
using CCChain = Lin<CCWord>;
using CCSeries = USeries<CCWord>;

inline int ccword_parity(const GradedAlgebra& A, const CCWord& w)
{
    int s = 0;
    for (const auto& e : w)
        s ^= lpar(A, e);
    return s;
}

inline int ccword_deg(const GradedAlgebra& A, const CCWord& w)
{
    int d = edeg(A, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        d += edeg(A, w[i]) + 1;
    return d;
}

inline bool cc_reduced_tail(const CCWord& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (is_unit(w[i]))
            return false;
    return true;
}

inline CCWord to_ccword(const Chain& c)
{
    CCWord w;
    for (int a : c)
        w.push_back(Elem{{}, a});
    return w;
}

inline bool is_algebra_word(const CCWord& w)
{
    return std::all_of(w.begin(), w.end(), [](const Elem& e) { return e.in.empty(); });
}

inline Chain to_chain(const CCWord& w)
{
    Chain c;
    for (const auto& e : w)
        c.push_back(e.out);
    return c;
}

// ---- m_1 = b + δ + uB on C_•(C^•(A)) ---------------------------------------

inline CCChain cc_b(const GradedAlgebra& A, const CCWord& w)
{
    CCChain r;
    const int N = static_cast<int>(w.size()) - 1;
    std::vector<int> ps(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        ps[i] = lpar(A, w[i]);
    for (int k = 0; k < N; ++k) {
        int s = parity_sum(ps, 0, k);
        for (const auto& [e, c] : m_pair(A, Cochain(w[k]), Cochain(w[k + 1]))) {
            if (k > 0 && is_unit(e))
                continue;
            CCWord nw(w.begin(), w.begin() + k);
            nw.push_back(e);
            nw.insert(nw.end(), w.begin() + k + 2, w.end());
            r.add(nw, c * sign(s));
        }
    }
    if (N >= 1) {
        int s = cross(ps[N], parity_sum(ps, 0, N));
        for (const auto& [e, c] : m_pair(A, Cochain(w[N]), Cochain(w[0]))) {
            CCWord nw{e};
            nw.insert(nw.end(), w.begin() + 1, w.begin() + N);
            r.add(nw, c * sign(s));
        }
    }
    return r;
}

inline CCChain cc_B(const GradedAlgebra& A, const CCWord& w)
{
    CCChain r;
    const int N = static_cast<int>(w.size()) - 1;
    std::vector<int> ps(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        ps[i] = lpar(A, w[i]);
    for (int k = 0; k <= N; ++k) {
        CCWord nw{unit_elem()};
        nw.insert(nw.end(), w.begin() + k + 1, w.end());
        nw.insert(nw.end(), w.begin(), w.begin() + k + 1);
        if (!cc_reduced_tail(nw))
            continue;
        r.add(nw, sign(rotation_parity(ps, k)));
    }
    return r;
}

inline CCChain cc_delta(const GradedAlgebra& A, const CCWord& w)
{
    CCChain r;
    int s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const auto& [e, c] : delta_elem(A, w[i])) {
            if (i > 0 && is_unit(e))
                continue;
            CCWord nw = w;
            nw[i] = e;
            r.add(nw, c * sign(s));
        }
        s ^= lpar(A, w[i]);
    }
    return r;
}

// ---- interleavings --------------------------------------------------------

namespace detail {

// One placement of all factors: pre-order sequence of flat ids, the root ids
// and the child lists.
struct Placement {
    std::vector<int> seq;
    std::vector<int> roots;
    std::vector<std::vector<int>> children;
};

// Enumerates the placements used by m_n. Group g contributes its factors in
// a cyclic order starting anywhere; the head (index 0) of each group must
// appear in group order. A factor becomes a new root or a child of an open
// node of a strictly later group with a free input slot. In mode 1 only the
// first two roots may open before every head has been placed, and at least
// two roots are required.
template <class F>
void for_each_placement(const std::vector<int>& sizes, const std::vector<std::vector<int>>& arities, int mode,
                        F&& emit)
{
    const int n = static_cast<int>(sizes.size());
    std::vector<int> offset(n + 1, 0);
    for (int g = 0; g < n; ++g)
        offset[g + 1] = offset[g] + sizes[g];
    const int total = offset[n];
    std::vector<int> rots(n, 0), consumed(n, 0);
    Placement pl;
    pl.children.assign(total, {});
    struct Open {
        int id;
        int group;
        int cap;
    };

    std::function<void(std::vector<Open>&, int, int)> rec = [&](std::vector<Open>& stack, int heads, int nroots) {
        if (static_cast<int>(pl.seq.size()) == total) {
            if (heads != n)
                return;
            if (mode == 1 && nroots < 2)
                return;
            emit(static_cast<const Placement&>(pl));
            return;
        }
        for (int g = 0; g < n; ++g) {
            if (consumed[g] >= sizes[g])
                continue;
            const int idx = (rots[g] + consumed[g]) % sizes[g];
            const bool head = idx == 0;
            if (head && g != heads)
                continue;
            const int id = offset[g] + idx;
            const int ar = arities[g][idx];
            const int nh = heads + (head ? 1 : 0);
            bool may_root = mode == 1 ? (nroots < 2 || heads == n) : true;
            ++consumed[g];
            pl.seq.push_back(id);
            if (may_root) {
                std::vector<Open> ns{{id, g, ar}};
                pl.roots.push_back(id);
                rec(ns, nh, nroots + 1);
                pl.roots.pop_back();
            }
            for (std::size_t t = 0; t < stack.size(); ++t) {
                if (stack[t].group <= g || stack[t].cap <= 0)
                    continue;
                std::vector<Open> ns(stack.begin(), stack.begin() + t + 1);
                ns.back().cap -= 1;
                ns.push_back({id, g, ar});
                pl.children[stack[t].id].push_back(id);
                rec(ns, nh, nroots);
                pl.children[stack[t].id].pop_back();
            }
            pl.seq.pop_back();
            --consumed[g];
        }
    };

    for (;;) {
        std::vector<Open> empty;
        rec(empty, 0, 0);
        int g = n - 1;
        while (g >= 0 && rots[g] == sizes[g] - 1)
            rots[g--] = 0;
        if (g < 0)
            break;
        ++rots[g];
    }
}

inline Cochain tree_value(const GradedAlgebra& A, int id, const std::vector<std::vector<int>>& children,
                          const std::vector<Elem>& elems)
{
    std::vector<Cochain> kids;
    for (int c : children[id]) {
        kids.push_back(tree_value(A, c, children, elems));
        if (kids.back().empty())
            return {};
    }
    return brace_elem(A, elems[id], kids);
}

inline void add_tensor(CCChain& res, const std::vector<Cochain>& factors, const Scalar& coef)
{
    CCWord w;
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t i, Scalar c) {
        if (i == factors.size()) {
            res.add(w, c);
            return;
        }
        for (const auto& [e, v] : factors[i]) {
            if (i > 0 && is_unit(e))
                continue;
            w.push_back(e);
            rec(i + 1, c * v);
            w.pop_back();
        }
    };
    rec(0, coef);
}

} // namespace detail

// m_n^(mode) on elementary words, n ≥ 2.
inline CCChain m_layer(const GradedAlgebra& A, const std::vector<CCWord>& words, int mode)
{
    std::vector<int> sizes;
    std::vector<std::vector<int>> ar;
    std::vector<Elem> elems;
    std::vector<int> par;
    for (const auto& w : words) {
        sizes.push_back(static_cast<int>(w.size()));
        ar.emplace_back();
        for (const auto& e : w) {
            ar.back().push_back(static_cast<int>(e.in.size()));
            elems.push_back(e);
            par.push_back(lpar(A, e));
        }
    }
    CCChain res;
    detail::for_each_placement(sizes, ar, mode, [&](const detail::Placement& pl) {
        int s = koszul_parity(pl.seq, par);
        std::vector<Cochain> vals;
        for (int r : pl.roots) {
            vals.push_back(detail::tree_value(A, r, pl.children, elems));
            if (vals.back().empty())
                return;
        }
        std::vector<Cochain> factors;
        if (mode == 1) {
            factors.push_back(m_pair(A, vals[0], vals[1]));
            factors.insert(factors.end(), vals.begin() + 2, vals.end());
        } else {
            factors.push_back(Cochain(unit_elem()));
            factors.insert(factors.end(), vals.begin(), vals.end());
        }
        detail::add_tensor(res, factors, sign(s));
    });
    return res;
}

// m_n on elementary words as a u-series: m_1 = b + δ + uB, m_n = m^(1) + u m^(2).
inline CCSeries m_words(const GradedAlgebra& A, const std::vector<CCWord>& words)
{
    CCSeries r;
    if (words.size() == 1) {
        r.add(0, cc_b(A, words[0]));
        r.add(0, cc_delta(A, words[0]));
        r.add(1, cc_B(A, words[0]));
        return r;
    }
    r.add(0, m_layer(A, words, 1));
    r.add(1, m_layer(A, words, 2));
    return r;
}

// Multilinear extension to u-series arguments.
inline CCSeries m_series(const GradedAlgebra& A, const std::vector<CCSeries>& args, int ucap = INT_MAX)
{
    CCSeries res;
    std::vector<CCWord> ws(args.size());
    int valid = INT_MAX;
    for (const auto& a : args)
        valid = std::min(valid, a.valid_hi);
    std::function<void(std::size_t, int, Scalar)> rec = [&](std::size_t i, int u, Scalar c) {
        if (u > ucap)
            return;
        if (i == args.size()) {
            auto s = m_words(A, ws);
            res.add(s, c, u);
            return;
        }
        for (const auto& [ua, v] : args[i].at)
            for (const auto& [w, x] : v) {
                ws[i] = w;
                rec(i + 1, u + ua, c * x);
            }
    };
    rec(0, 0, Scalar(1));
    if (ucap != INT_MAX)
        res.truncate_above(ucap);
    if (valid != INT_MAX)
        res.valid_hi = std::min(res.valid_hi, valid);
    return res;
}

inline CCSeries cc_single(const CCWord& w, const Scalar& c = 1)
{
    CCSeries s;
    s.add(0, w, c);
    return s;
}

// Σ_{k,j} (-1)^{Σ_{i<j} P_i} m(w_1..w_j, m_k(w_{j+1}..w_{j+k}), …), P_i the
// sum of the factor parities |D|+1 of word i. Zero iff the A∞ relation holds.
inline CCSeries ainf_relation(const GradedAlgebra& A, const std::vector<CCWord>& words, int ucap)
{
    const int n = static_cast<int>(words.size());
    CCSeries res;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j + k <= n; ++j) {
            int s = 0;
            for (int i = 0; i < j; ++i)
                s ^= ccword_parity(A, words[i]);
            std::vector<CCSeries> inner_args;
            for (int i = j; i < j + k; ++i)
                inner_args.push_back(cc_single(words[i]));
            CCSeries inner = m_series(A, inner_args, ucap);
            if (inner.empty())
                continue;
            std::vector<CCSeries> outer;
            for (int i = 0; i < j; ++i)
                outer.push_back(cc_single(words[i]));
            outer.push_back(inner);
            for (int i = j + k; i < n; ++i)
                outer.push_back(cc_single(words[i]));
            res.add(m_series(A, outer, ucap), sign(s));
        }
    res.truncate_above(ucap);
    return res;
}

// ---- module structure on C_•(A)[[u]] --------------------------------------

// μ_n(x, c_1..c_{n-1}): the chain x enters as a word of 0-ary cochains and
// only the algebra-valued part of the result is kept.
inline CyclicChain mu_words(const GradedAlgebra& A, const Chain& x, const std::vector<CCWord>& cs)
{
    std::vector<CCWord> ws{to_ccword(x)};
    ws.insert(ws.end(), cs.begin(), cs.end());
    CyclicChain out;
    auto S = m_words(A, ws);
    for (const auto& [u, v] : S.at)
        for (const auto& [w, c] : v)
            if (is_algebra_word(w))
                out.add(u, to_chain(w), c);
    return out;
}

inline CyclicChain mu_series(const GradedAlgebra& A, const CyclicChain& x, const std::vector<CCSeries>& cs,
                             int ucap = INT_MAX)
{
    CyclicChain res;
    std::vector<CCWord> ws(cs.size());
    std::function<void(std::size_t, int, Scalar, const Chain&)> rec = [&](std::size_t i, int u, Scalar c,
                                                                          const Chain& a) {
        if (u > ucap)
            return;
        if (i == cs.size()) {
            res.add(mu_words(A, a, ws), c, u);
            return;
        }
        for (const auto& [ua, v] : cs[i].at)
            for (const auto& [w, y] : v) {
                ws[i] = w;
                rec(i + 1, u + ua, c * y, a);
            }
    };
    for (const auto& [u, v] : x.at)
        for (const auto& [a, c] : v)
            rec(0, u, c, a);
    if (ucap != INT_MAX)
        res.truncate_above(ucap);
    return res;
}

// Σ ± μ(μ_k(x, c_1..c_{k-1}), c_k, …) + Σ ± μ(x, …, m_k(c_j..c_{j+k-1}), …),
// signs as in ainf_relation with x as the first word. Zero iff the module
// relation holds.
inline CyclicChain module_relation(const GradedAlgebra& A, const Chain& x, const std::vector<CCWord>& cs, int ucap)
{
    const int n = static_cast<int>(cs.size());
    CyclicChain res;
    auto series_of = [&](int from, int to) {
        std::vector<CCSeries> out;
        for (int i = from; i < to; ++i)
            out.push_back(cc_single(cs[i]));
        return out;
    };
    for (int k = 0; k <= n; ++k) {
        CyclicChain inner = mu_series(A, single(x), series_of(0, k), ucap);
        if (!inner.empty())
            res.add(mu_series(A, inner, series_of(k, n), ucap));
    }
    int s = ccword_parity(A, to_ccword(x));
    for (int j = 0; j < n; ++j) {
        for (int k = 1; j + k <= n; ++k) {
            CCSeries inner = m_series(A, series_of(j, j + k), ucap);
            if (inner.empty())
                continue;
            auto args = series_of(0, j);
            args.push_back(inner);
            auto rest = series_of(j + k, n);
            args.insert(args.end(), rest.begin(), rest.end());
            res.add(mu_series(A, single(x), args, ucap), sign(s));
        }
        s ^= ccword_parity(A, cs[j]);
    }
    res.truncate_above(ucap);
    return res;
}

// x • y = (-1)^{|x|} m_2(x, y)
inline CCSeries bullet(const GradedAlgebra& A, const CCSeries& x, const CCSeries& y)
{
    CCSeries r;
    for (const auto& [ux, vx] : x.at)
        for (const auto& [wx, a] : vx)
            for (const auto& [uy, vy] : y.at)
                for (const auto& [wy, b] : vy)
                    r.add(m_words(A, {wx, wy}), a * b * sign(ccword_deg(A, wx)), ux + uy);
    return r;
}

// Right-hand side of the product formula for (1⊗D_1)•…•(1⊗D_N): Σ over
// ordered splittings of D_1…D_N into blocks, each block read from its last
// factor to its first and composed left-nested.
inline CCSeries bullet_product_formula(const GradedAlgebra& A, const std::vector<Cochain>& Ds)
{
    CCSeries r;
    for (int k = 1; k <= static_cast<int>(Ds.size()); ++k)
        for (const auto& t : coproduct(A, Ds, k)) {
            std::vector<Cochain> factors{Cochain(unit_elem())};
            for (auto bl : t.blocks) {
                std::reverse(bl.begin(), bl.end());
                factors.push_back(ybar_U(A, bl));
            }
            CCChain v;
            detail::add_tensor(v, factors, sign(t.parity));
            r.add(0, v);
        }
    return r;
}

} // namespace hoch
