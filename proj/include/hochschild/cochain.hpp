#pragma once

#include "algebra.hpp"
#include "koszul.hpp"

#include <functional>
#include <optional>

namespace hoch {

// Elementary normalized cochain: reduced inputs (no unit) mapped to one basis
// element (which may be the unit).
struct Elem {
    std::vector<int> in;
    int out = 0;
    auto operator<=>(const Elem&) const = default;
    bool operator==(const Elem&) const = default;
};

using Cochain = Lin<Elem>;

inline Elem unit_elem() { return Elem{{}, 0}; }
inline bool is_unit(const Elem& e) { return e.in.empty() && e.out == 0; }

// Total degree |D| = internal degree + arity.
inline int edeg(const GradedAlgebra& A, const Elem& e)
{
    int d = A.deg[e.out] + static_cast<int>(e.in.size());
    for (int i : e.in)
        d -= A.deg[i];
    return d;
}
// Parity in the shifted (Gerstenhaber) grading.
inline int lpar(const GradedAlgebra& A, const Elem& e) { return (edeg(A, e) + 1) & 1; }

inline std::optional<int> hdeg(const GradedAlgebra& A, const Cochain& D)
{
    std::optional<int> d;
    for (const auto& [e, c] : D) {
        int x = edeg(A, e);
        if (d && *d != x)
            throw std::invalid_argument("cochain is not homogeneous");
        d = x;
    }
    return d;
}

inline int hdeg_or(const GradedAlgebra& A, const Cochain& D, int dflt = 0) { return hdeg(A, D).value_or(dflt); }

inline Cochain elem(std::vector<int> in, int out, const Scalar& c = 1) { return Cochain(Elem{std::move(in), out}, c); }

inline void check_normalized(const GradedAlgebra& A, const Cochain& D)
{
    for (const auto& [e, c] : D) {
        for (int i : e.in)
            if (i <= 0 || i >= A.dim())
                throw std::invalid_argument("cochain input is not a reduced basis index");
        if (e.out < 0 || e.out >= A.dim())
            throw std::invalid_argument("cochain output index out of range");
    }
}

inline int input_apar(const GradedAlgebra& A, const std::vector<int>& in, std::size_t upto)
{
    int s = 0;
    for (std::size_t i = 0; i < upto; ++i)
        s ^= A.apar(in[i]);
    return s;
}

// D{X_1,...,X_k} for elementary D. Each X_p is plugged into an input slot of D
// whose basis index equals the output of the chosen term of X_p; the sign is
// the Koszul sign of X_p passing the inputs that precede it.
inline Cochain brace_elem(const GradedAlgebra& A, const Elem& D, const std::vector<Cochain>& args)
{
    Cochain res;
    const int d = static_cast<int>(D.in.size());
    const int k = static_cast<int>(args.size());
    if (k == 0) {
        res.add(D, 1);
        return res;
    }
    if (k > d)
        return res;
    std::vector<int> newin;
    newin.reserve(d + 8);
    std::function<void(int, int, int, Scalar)> rec = [&](int p, int slot, int par, Scalar coef) {
        if (p == k) {
            std::size_t keep = newin.size();
            newin.insert(newin.end(), D.in.begin() + slot, D.in.end());
            res.add(Elem{newin, D.out}, par ? -coef : coef);
            newin.resize(keep);
            return;
        }
        for (int s = slot; s <= d - (k - p); ++s) {
            std::size_t keep = newin.size();
            newin.insert(newin.end(), D.in.begin() + slot, D.in.begin() + s);
            int before = input_apar(A, newin, newin.size());
            for (const auto& [e, c] : args[p]) {
                if (e.out != D.in[s])
                    continue;
                std::size_t keep2 = newin.size();
                newin.insert(newin.end(), e.in.begin(), e.in.end());
                rec(p + 1, s + 1, par ^ cross(lpar(A, e), before), coef * c);
                newin.resize(keep2);
            }
            newin.resize(keep);
        }
    };
    rec(0, 0, 0, Scalar(1));
    return res;
}

inline Cochain brace(const GradedAlgebra& A, const Cochain& D, const std::vector<Cochain>& args)
{
    Cochain res;
    for (const auto& [e, c] : D)
        res.add(brace_elem(A, e, args), c);
    return res;
}

inline Cochain circ(const GradedAlgebra& A, const Cochain& X, const Cochain& Y) { return brace(A, X, {Y}); }

// Gerstenhaber bracket [X,Y] = X{Y} - (-1)^{(|X|+1)(|Y|+1)} Y{X}, bilinear in
// homogeneous components.
inline Cochain gbracket(const GradedAlgebra& A, const Cochain& X, const Cochain& Y)
{
    Cochain res;
    for (const auto& [ex, cx] : X)
        for (const auto& [ey, cy] : Y) {
            Cochain x(ex), y(ey);
            res.add(brace_elem(A, ex, {y}), cx * cy);
            res.add(brace_elem(A, ey, {x}), -cx * cy * sign(lpar(A, ex) * lpar(A, ey)));
        }
    return res;
}

// m{X,Y}: the product m(a,b) = (-1)^{|a|} ab with both X and Y plugged in.
inline Cochain m_pair(const GradedAlgebra& A, const Cochain& X, const Cochain& Y)
{
    Cochain res;
    for (const auto& [ex, cx] : X)
        for (const auto& [ey, cy] : Y) {
            int s = A.deg[ex.out] + cross(lpar(A, ey), input_apar(A, ex.in, ex.in.size()));
            std::vector<int> in = ex.in;
            in.insert(in.end(), ey.in.begin(), ey.in.end());
            for (const auto& [k, c] : A.prod(ex.out, ey.out))
                res.add(Elem{in, k}, cx * cy * c * sign(s));
        }
    return res;
}

// (D ⌣ E)(a_1..a_{d+e}) = (-1)^{|E| Σ_{i≤d}(|a_i|+1)} D(a_1..a_d) E(a_{d+1}..)
inline Cochain cup(const GradedAlgebra& A, const Cochain& D, const Cochain& E)
{
    Cochain res;
    for (const auto& [ed, cd] : D)
        for (const auto& [ee, ce] : E) {
            int s = cross(edeg(A, ee), input_apar(A, ed.in, ed.in.size()));
            std::vector<int> in = ed.in;
            in.insert(in.end(), ee.in.begin(), ee.in.end());
            for (const auto& [k, c] : A.prod(ed.out, ee.out))
                res.add(Elem{in, k}, cd * ce * c * sign(s));
        }
    return res;
}

// Hochschild differential δD = [m', D] on one elementary cochain.
inline Cochain delta_elem(const GradedAlgebra& A, const Elem& D)
{
    Cochain res;
    const int d = static_cast<int>(D.in.size());
    const int pD = lpar(A, D);
    for (int r = 1; r < A.dim(); ++r) {
        std::vector<int> in = D.in;
        in.push_back(r);
        for (const auto& [k, c] : A.prod(D.out, r))
            res.add(Elem{in, k}, c * sign(A.deg[D.out]));
    }
    for (int r = 1; r < A.dim(); ++r) {
        std::vector<int> in{r};
        in.insert(in.end(), D.in.begin(), D.in.end());
        for (const auto& [k, c] : A.prod(r, D.out))
            res.add(Elem{in, k}, c * sign(cross(pD, A.apar(r)) + A.deg[r]));
    }
    for (int j = 0; j < d; ++j) {
        int pre = input_apar(A, D.in, j);
        for (int a = 1; a < A.dim(); ++a)
            for (int b = 1; b < A.dim(); ++b)
                for (const auto& [k, c] : A.prod(a, b)) {
                    if (k != D.in[j])
                        continue;
                    std::vector<int> in(D.in.begin(), D.in.begin() + j);
                    in.push_back(a);
                    in.push_back(b);
                    in.insert(in.end(), D.in.begin() + j + 1, D.in.end());
                    res.add(Elem{in, D.out}, c * sign(pre + A.deg[a] + pD + 1));
                }
    }
    // Internal differential of a DGA: d∘D - (-1)^{|D|+1 ...} Σ D∘(d at slot j)
    if (A.has_differential()) {
        for (const auto& [k, c] : A.d(D.out))
            res.add(Elem{D.in, k}, c);
        for (int j = 0; j < d; ++j) {
            int pre = input_apar(A, D.in, j);
            for (int a = 1; a < A.dim(); ++a)
                for (const auto& [k, c] : A.d(a)) {
                    if (k != D.in[j])
                        continue;
                    std::vector<int> in = D.in;
                    in[j] = a;
                    res.add(Elem{in, D.out}, c * sign(pre + pD + 1));
                }
        }
    }
    return res;
}

inline Cochain delta(const GradedAlgebra& A, const Cochain& D)
{
    Cochain res;
    for (const auto& [e, c] : D)
        res.add(delta_elem(A, e), c);
    return res;
}

// The twisted multiplication m'(a,b) = (-1)^{|a|} ab on reduced inputs, as a cochain.
inline Cochain mprime_reduced(const GradedAlgebra& A)
{
    Cochain m;
    for (int a = 1; a < A.dim(); ++a)
        for (int b = 1; b < A.dim(); ++b)
            for (const auto& [k, c] : A.prod(a, b))
                m.add(Elem{{a, b}, k}, c * sign(A.deg[a]));
    return m;
}

// D(a_1..a_d) for basis arguments.
inline Vec evaluate(const Cochain& D, const std::vector<int>& args)
{
    Vec r;
    for (const auto& [e, c] : D)
        if (e.in == args)
            r.add(e.out, c);
    return r;
}

// All elementary cochains of the given arity with any output.
inline std::vector<Elem> elementary_cochains(const GradedAlgebra& A, int arity)
{
    std::vector<Elem> out;
    std::vector<int> in(arity, 1);
    if (A.dim() < 2 && arity > 0)
        return out;
    for (;;) {
        for (int o = 0; o < A.dim(); ++o)
            out.push_back(Elem{in, o});
        int p = arity - 1;
        while (p >= 0 && in[p] == A.dim() - 1)
            in[p--] = 1;
        if (p < 0)
            break;
        ++in[p];
    }
    return out;
}

// Right-hand side of (D{E_1..E_k}){F_1..F_l}: the F's are distributed in
// order over the gaps between the E's and inside the E's, with the Koszul
// sign of every F moved to the left of an E.
inline Cochain brace_composition_rhs(const GradedAlgebra& A, const Cochain& D, const std::vector<Cochain>& Es,
                              const std::vector<Cochain>& Fs)
{
    const int k = static_cast<int>(Es.size()), l = static_cast<int>(Fs.size());
    Cochain res;
    std::vector<int> lab(l, 0); // 2i = gap before E_i (2k = last gap), 2i+1 = inside E_i
    std::function<void(int, int)> rec = [&](int j, int lo) {
        if (j == l) {
            int s = 0;
            for (int f = 0; f < l; ++f)
                for (int i = 0; i < k; ++i)
                    if (lab[f] <= 2 * i)
                        s ^= lpar(A, Fs[f].begin()->first) & lpar(A, Es[i].begin()->first);
            std::vector<Cochain> args;
            for (int slot = 0; slot <= 2 * k; ++slot) {
                std::vector<Cochain> inner;
                for (int f = 0; f < l; ++f)
                    if (lab[f] == slot)
                        inner.push_back(Fs[f]);
                if (slot % 2 == 0)
                    args.insert(args.end(), inner.begin(), inner.end());
                else
                    args.push_back(brace(A, Es[slot / 2], inner));
            }
            res.add(brace(A, D, args), sign(s));
            return;
        }
        for (int v = lo; v <= 2 * k; ++v) {
            lab[j] = v;
            rec(j + 1, v);
        }
    };
    rec(0, 0);
    return res;
}


// ---- C^•(C^•(A)) ----------------------------------------------------------
// A cochain on the DGA (C^•(A), δ, ⌣), given by its values on argument tuples
// of homogeneous cochains. deg is the total degree (map degree + arity).
struct SecondLevel {
    int deg = 0;
    std::function<Cochain(const std::vector<Cochain>&)> at;
};

// ΣD^{(k)} with D^{(k)}(D_1,…,D_k) = D{D_1,…,D_k}.
inline SecondLevel lift(const GradedAlgebra& A, const Cochain& D)
{
    return SecondLevel{hdeg_or(A, D), [&A, D](const std::vector<Cochain>& xs) { return brace(A, D, xs); }};
}

inline Cochain lift(const GradedAlgebra& A, const Cochain& D, const std::vector<Cochain>& args)
{
    return brace(A, D, args);
}

namespace detail {
inline std::vector<Cochain> slice(const std::vector<Cochain>& xs, std::size_t a, std::size_t b)
{
    return std::vector<Cochain>(xs.begin() + a, xs.begin() + b);
}
} // namespace detail

// δ' = [m' + δ, Φ] on the DGA C^•(A), written exactly as delta_elem with
// A replaced by C^•(A) (product ⌣, differential δ, parities |X|+1).
inline Cochain delta2(const GradedAlgebra& A, const SecondLevel& F, const std::vector<Cochain>& xs)
{
    const std::size_t n = xs.size();
    const int pF = (F.deg + 1) & 1;
    std::vector<int> deg(n), ap(n);
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = hdeg_or(A, xs[i]);
        ap[i] = (deg[i] + 1) & 1;
    }
    Cochain res;
    if (n >= 1) {
        Cochain head = F.at(detail::slice(xs, 0, n - 1));
        res.add(cup(A, head, xs[n - 1]), sign(hdeg_or(A, head)));
        Cochain tail = F.at(detail::slice(xs, 1, n));
        res.add(cup(A, xs[0], tail), sign(cross(pF, ap[0]) + deg[0]));
    }
    int pre = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<Cochain> ys = detail::slice(xs, 0, j);
        ys.push_back(cup(A, xs[j], xs[j + 1]));
        auto rest = detail::slice(xs, j + 2, n);
        ys.insert(ys.end(), rest.begin(), rest.end());
        res.add(F.at(ys), sign(pre + deg[j] + pF + 1));
        pre ^= ap[j];
    }
    res.add(delta(A, F.at(xs)), 1);
    pre = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Cochain> ys = xs;
        ys[j] = delta(A, xs[j]);
        res.add(F.at(ys), sign(pre + pF + 1));
        pre ^= ap[j];
    }
    return res;
}

// (Φ ⌣' Ψ)(X_1..X_n) = Σ_p (-1)^{|Ψ| Σ_{i≤p}(|X_i|+1)} Φ(X_1..X_p) ⌣ Ψ(X_{p+1}..X_n).
inline Cochain cup2(const GradedAlgebra& A, const SecondLevel& F, const SecondLevel& G,
                    const std::vector<Cochain>& xs)
{
    Cochain res;
    int pre = 0;
    for (std::size_t p = 0; p <= xs.size(); ++p) {
        if (p > 0)
            pre ^= (hdeg_or(A, xs[p - 1]) + 1) & 1;
        res.add(cup(A, F.at(detail::slice(xs, 0, p)), G.at(detail::slice(xs, p, xs.size()))),
                sign(cross(G.deg, pre)));
    }
    return res;
}

struct EtoeeReport {
    int checked = 0;
    int delta_failures = 0;
    int cup_failures = 0;
    bool ok() const { return delta_failures == 0 && cup_failures == 0; }
};

// D ↦ ΣD^{(k)} is a DGA morphism C^•(A) -> C^•(C^•(A)): checked on the
// given cochains D, E and argument tuples.
inline EtoeeReport check_etoee(const GradedAlgebra& A, const std::vector<std::pair<Cochain, Cochain>>& DE,
                               const std::vector<std::vector<Cochain>>& arg_tuples)
{
    EtoeeReport rep;
    for (const auto& [D, E] : DE) {
        auto LD = lift(A, D), LE = lift(A, E);
        Cochain dD = delta(A, D), DE_ = cup(A, D, E);
        for (const auto& xs : arg_tuples) {
            ++rep.checked;
            if (!(delta2(A, LD, xs) == brace(A, dD, xs)))
                ++rep.delta_failures;
            if (!(cup2(A, LD, LE, xs) == brace(A, DE_, xs)))
                ++rep.cup_failures;
        }
    }
    return rep;
}

} // namespace hoch
