#pragma once

#include "calibration.hpp"
#include "format.hpp"

#include <chrono>
#include <future>
#include <random>

namespace hoch {

struct RunConfig {
    int max_length = -1;  // -1: per-suite default
    int arity_cap = 2;    // arity of sampled cochains
    int u_lo = 0, u_hi = 2;
    int ainf_arity = 4;   // highest n for the A∞ and module relations
    int samples = -1;     // -1: per-suite default
    std::uint64_t seed = 2024;
    int jobs = 1;

    int length_or(int dflt) const { return max_length >= 0 ? max_length : dflt; }
    int samples_or(int dflt) const { return samples >= 0 ? samples : dflt; }
};

struct IdentityResult {
    std::string suite, identity, anchor;
    long checked = 0;
    long failures = 0;
    std::string witness;
    std::string note;
    double seconds = 0;
    bool pass() const { return failures == 0; }
};

struct SuiteReport {
    std::string algebra;
    std::vector<IdentityResult> results;
    bool ok() const
    {
        for (const auto& r : results)
            if (!r.pass())
                return false;
        return true;
    }
    const IdentityResult* first_failure() const
    {
        for (const auto& r : results)
            if (!r.pass())
                return &r;
        return nullptr;
    }
};

// Selects identities by suite name or identity name; empty selects all.
struct Selector {
    std::vector<std::string> names;
    bool operator()(const std::string& suite, const std::string& id) const
    {
        if (names.empty())
            return true;
        for (const auto& n : names)
            if (n == suite || n == id)
                return true;
        return false;
    }
    bool touches(const std::string& suite, const std::vector<std::string>& ids) const
    {
        for (const auto& id : ids)
            if ((*this)(suite, id))
                return true;
        return false;
    }
};

namespace suite {

// Seeded samplers for every value type the suites feed to identities.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Scalar coefficient()
    {
        Scalar r(pick(-3, 3), pick(1, 2));
        r.canonicalize();
        return r;
    }

    Elem elem(const GradedAlgebra& A, int max_arity, bool nonunit = false)
    {
        for (;;) {
            Elem e;
            const int d = A.dim() > 1 ? pick(0, max_arity) : 0;
            for (int i = 0; i < d; ++i)
                e.in.push_back(pick(1, A.dim() - 1));
            e.out = pick(0, A.dim() - 1);
            if (!nonunit || !is_unit(e) || A.dim() == 1)
                return e;
        }
    }

    // Homogeneous cochain with up to `terms` terms of one degree.
    Cochain cochain(const GradedAlgebra& A, int max_arity, int terms = 3)
    {
        Elem seed = elem(A, max_arity);
        const int d = edeg(A, seed);
        Cochain c(seed, 1);
        for (int t = 1; t < terms * 4 && static_cast<int>(c.size()) < terms; ++t) {
            Elem e = elem(A, max_arity);
            if (edeg(A, e) == d)
                c.add(e, coefficient());
        }
        return c;
    }

    Chain chain(const GradedAlgebra& A, int max_len)
    {
        const int n = A.dim() > 1 ? pick(0, max_len) : 0;
        Chain c{pick(0, A.dim() - 1)};
        for (int i = 0; i < n; ++i)
            c.push_back(pick(1, A.dim() - 1));
        return c;
    }

    CCWord ccword(const GradedAlgebra& A, int max_len, int max_arity, bool unit_head = false)
    {
        CCWord w{unit_head ? unit_elem() : elem(A, max_arity)};
        const int L = A.dim() > 1 ? pick(unit_head ? 1 : 0, max_len) : 0;
        for (int i = 0; i < L; ++i)
            w.push_back(elem(A, max_arity, true));
        return w;
    }

    std::optional<Letter> letter(const GradedAlgebra& A, int nfac, int max_arity, int force_eps = -1)
    {
        if (A.dim() == 1)
            return std::nullopt;
        for (int attempt = 0; attempt < 100; ++attempt) {
            std::vector<Factor> fs;
            for (int i = 0; i < nfac; ++i)
                fs.push_back(Factor{elem(A, max_arity, true), force_eps >= 0 ? force_eps : pick(0, 1)});
            if (auto l = make_letter(A, fs))
                return l;
        }
        return std::nullopt;
    }

private:
    std::mt19937_64 rng_;
};

class Tally {
public:
    Tally(std::string suite, std::string id, std::string anchor)
        : start_(std::chrono::steady_clock::now())
    {
        r_.suite = std::move(suite);
        r_.identity = std::move(id);
        r_.anchor = std::move(anchor);
    }
    template <class W>
    bool check(bool ok, W&& witness)
    {
        ++r_.checked;
        if (!ok && r_.failures++ == 0)
            r_.witness = witness();
        return ok;
    }
    void note(std::string s) { r_.note = std::move(s); }
    IdentityResult done()
    {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return r_;
    }

private:
    IdentityResult r_;
    std::chrono::steady_clock::time_point start_;
};

inline bool graded_commutative(const GradedAlgebra& A)
{
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            Vec r = A.mul_basis(j, i);
            r *= sign(A.deg[i] * A.deg[j]);
            if (!(A.mul_basis(i, j) == r))
                return false;
        }
    return true;
}

inline std::vector<Cochain> elementary_upto(const GradedAlgebra& A, int max_arity, bool nonunit)
{
    std::vector<Cochain> out;
    for (int a = 0; a <= max_arity; ++a)
        for (const auto& e : elementary_cochains(A, a))
            if (!nonunit || !is_unit(e))
                out.push_back(Cochain(e));
    return out;
}

inline std::string factor_str(const GradedAlgebra& A, const Factor& f)
{
    return (f.eps ? "ε" : "") + elem_str(A, f.e);
}

inline std::string letter_str(const GradedAlgebra& A, const Letter& l)
{
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i)
        s += (i ? "∧" : "") + factor_str(A, l[i]);
    return s;
}

inline std::string word_str(const GradedAlgebra& A, const BarWord& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " | " : "") + letter_str(A, w[i]);
    return s + "]";
}

// Every letter with 1..max_factors factors drawn from the nonunit elementary
// cochains of arity ≤ max_arity, each with or without ε.
inline std::vector<Letter> all_letters(const GradedAlgebra& A, int max_factors, int max_arity)
{
    std::vector<Factor> base;
    for (int a = 0; a <= max_arity; ++a)
        for (const auto& e : elementary_cochains(A, a))
            if (!is_unit(e))
                for (int eps : {0, 1})
                    base.push_back(Factor{e, eps});
    std::vector<Letter> out;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (!idx.empty()) {
            std::vector<Factor> fs;
            for (int i : idx)
                fs.push_back(base[i]);
            if (auto l = make_letter(A, fs))
                out.push_back(*l);
        }
        if (static_cast<int>(idx.size()) == max_factors)
            return;
        for (int i = from; i < static_cast<int>(base.size()); ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

inline ChainVec b_any(const GradedAlgebra& A, const Chain& c)
{
    return A.has_differential() ? b_total(A, c) : b_op(A, c);
}

inline std::string cochains_str(const GradedAlgebra& A, const std::vector<Cochain>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + cochain_str(A, xs[i]);
    return s;
}

// ---- validate ---------------------------------------------------------------

inline std::vector<IdentityResult> run_validate(const GradedAlgebra& A, const RunConfig&, const Selector& sel)
{
    std::vector<IdentityResult> out;
    if (!sel("validate", "algebra-axioms"))
        return out;
    Tally t("validate", "algebra-axioms", "unit law, associativity, degrees, d² = 0, Leibniz rule for d");
    auto rep = validate(A);
    const long n = A.dim();
    for (long i = 0; i < n * n * n; ++i)
        t.check(true, [] { return std::string(); });
    for (std::size_t i = 0; i < rep.violations.size(); ++i)
        t.check(false, [&] { return rep.violations[i]; });
    out.push_back(t.done());
    return out;
}

// ---- structural differentials -------------------------------------------------

inline std::vector<IdentityResult> run_structural(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "structural";
    std::vector<IdentityResult> out;
    const int L = cfg.length_or(4);
    if (sel(S, "delta-squared")) {
        Tally t(S, "delta-squared", "δ² = 0 on C^•(A)");
        for (const auto& D : elementary_upto(A, L, false))
            t.check(delta(A, delta(A, D)).empty(), [&] { return "D = " + cochain_str(A, D); });
        out.push_back(t.done());
    }
    const auto chains = chains_upto(A, L);
    auto apply = [&](const ChainVec& v, auto&& f) {
        ChainVec r;
        for (const auto& [c, x] : v)
            r.add(f(c), x);
        return r;
    };
    auto b = [&](const Chain& c) { return b_any(A, c); };
    auto B = [&](const Chain& c) { return B_op(A, c); };
    const std::string bname = A.has_differential() ? "(b+δ)" : "b";
    auto wit = [&](const Chain& c) { return [&A, c] { return "x = " + chain_str(A, c); }; };
    if (sel(S, "b-squared")) {
        Tally t(S, "b-squared", bname + "² = 0 on C_•(A)");
        for (const auto& c : chains)
            t.check(apply(b(c), b).empty(), wit(c));
        out.push_back(t.done());
    }
    if (sel(S, "B-squared")) {
        Tally t(S, "B-squared", "B² = 0");
        for (const auto& c : chains)
            t.check(apply(B(c), B).empty(), wit(c));
        out.push_back(t.done());
    }
    if (sel(S, "bB+Bb")) {
        Tally t(S, "bB+Bb", bname + "B + B" + bname + " = 0");
        for (const auto& c : chains) {
            ChainVec v = apply(b(c), B);
            v += apply(B(c), b);
            t.check(v.empty(), wit(c));
        }
        out.push_back(t.done());
    }
    if (sel(S, "cyclic-d-squared")) {
        Tally t(S, "cyclic-d-squared", "(" + bname + "+uB)² = 0 on C_•(A)[[u]]");
        for (const auto& c : chains)
            t.check(cyclic_d(A, cyclic_d(A, single(c))).empty(), wit(c));
        out.push_back(t.done());
    }
    return out;
}

// ---- Gerstenhaber layer ------------------------------------------------------

inline std::vector<IdentityResult> run_gerstenhaber(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "gerstenhaber";
    std::vector<IdentityResult> out;
    const int N = cfg.samples_or(100);
    const int ar = cfg.arity_cap;
    Sampler g(cfg.seed);
    auto trio = [&](const Cochain& D, const Cochain& E, const Cochain& F) {
        return [&A, D, E, F] { return "D = " + cochain_str(A, D) + "; E = " + cochain_str(A, E) + "; F = " +
                                      cochain_str(A, F); };
    };
    if (sel.touches(S, {"cup-leibniz", "bracket-leibniz", "jacobi"})) {
        Tally tc(S, "cup-leibniz", "δ(D⌣E) = δD⌣E + (-1)^{|D|} D⌣δE");
        Tally tb(S, "bracket-leibniz", "δ[D,E] = [δD,E] + (-1)^{|D|+1} [D,δE]");
        Tally tj(S, "jacobi", "[D,[E,F]] = [[D,E],F] + (-1)^{(|D|+1)(|E|+1)} [E,[D,F]]");
        for (int i = 0; i < N; ++i) {
            Cochain D = g.cochain(A, ar), E = g.cochain(A, ar), F = g.cochain(A, ar);
            const int d = hdeg_or(A, D), e = hdeg_or(A, E);
            Cochain lc = delta(A, cup(A, D, E));
            lc.add(cup(A, delta(A, D), E), -1);
            lc.add(cup(A, D, delta(A, E)), -sign(d));
            tc.check(lc.empty(), trio(D, E, F));
            Cochain lb = delta(A, gbracket(A, D, E));
            lb.add(gbracket(A, delta(A, D), E), -1);
            lb.add(gbracket(A, D, delta(A, E)), -sign(d + 1));
            tb.check(lb.empty(), trio(D, E, F));
            Cochain jac = gbracket(A, D, gbracket(A, E, F));
            jac.add(gbracket(A, gbracket(A, D, E), F), -1);
            jac.add(gbracket(A, E, gbracket(A, D, F)), -sign((d + 1) * (e + 1)));
            tj.check(jac.empty(), trio(D, E, F));
        }
        if (sel(S, "cup-leibniz"))
            out.push_back(tc.done());
        if (sel(S, "bracket-leibniz"))
            out.push_back(tb.done());
        if (sel(S, "jacobi"))
            out.push_back(tj.done());
    }
    if (sel(S, "brace-composition")) {
        Tally t(S, "brace-composition",
                "(D{E_1..E_k}){F_1..F_l} = Σ ± D{.., E_1{..}, .., E_k{..}, ..} over ordered distributions of the F's");
        for (int i = 0; i < N; ++i) {
            Cochain D = g.cochain(A, ar + 1, 2);
            std::vector<Cochain> Es, Fs;
            const int k = g.pick(1, 2), l = g.pick(1, 2);
            for (int j = 0; j < k; ++j)
                Es.push_back(g.cochain(A, ar, 1));
            for (int j = 0; j < l; ++j)
                Fs.push_back(g.cochain(A, 1, 1));
            t.check(brace(A, brace(A, D, Es), Fs) == brace_composition_rhs(A, D, Es, Fs), [&] {
                return "D = " + cochain_str(A, D) + "; E = (" + cochains_str(A, Es) + "); F = (" +
                       cochains_str(A, Fs) + ")";
            });
        }
        out.push_back(t.done());
    }
    if (sel(S, "lift-dga-morphism")) {
        Tally t(S, "lift-dga-morphism",
                "D ↦ ΣD^{(k)} into C^•(C^•(A)) commutes with δ and carries ⌣ to ⌣");
        int side = 1;
        while (side * side < N)
            ++side;
        std::vector<std::pair<Cochain, Cochain>> de;
        std::vector<std::vector<Cochain>> args;
        for (int i = 0; i < side; ++i)
            de.push_back({g.cochain(A, ar, 2), g.cochain(A, ar, 2)});
        for (int i = 0; i < side; ++i) {
            std::vector<Cochain> xs;
            for (int j = g.pick(0, 3); j > 0; --j)
                xs.push_back(g.cochain(A, 1, 2));
            args.push_back(xs);
        }
        for (const auto& [D, E] : de) {
            auto LD = lift(A, D), LE = lift(A, E);
            const Cochain dD = delta(A, D), DE = cup(A, D, E);
            for (const auto& xs : args) {
                const bool ok = delta2(A, LD, xs) == brace(A, dD, xs) && cup2(A, LD, LE, xs) == brace(A, DE, xs);
                t.check(ok, [&] {
                    return "D = " + cochain_str(A, D) + "; E = " + cochain_str(A, E) + "; args = (" +
                           cochains_str(A, xs) + ")";
                });
            }
        }
        out.push_back(t.done());
    }
    return out;
}

// ---- pairing layer -----------------------------------------------------------

inline std::vector<IdentityResult> run_pairing(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "pairing";
    const std::vector<std::string> ids{"i-chain-map", "i-product",  "L-bracket", "L-b",        "L-B",
                                       "b-L-anchor",  "cartan",     "gdt",       "Y-singleton"};
    std::vector<IdentityResult> out;
    if (!sel.touches(S, ids))
        return out;
    if (A.has_differential()) {
        for (const auto& id : ids)
            if (sel(S, id)) {
                Tally t(S, id, "pairing identities over algebras without internal differential");
                t.note("skipped: algebra has an internal differential");
                out.push_back(t.done());
            }
        return out;
    }
    const auto& T = frozen_calibration();
    const int N = cfg.samples_or(6);
    const auto chains = chains_upto(A, cfg.length_or(3));
    Sampler g(cfg.seed + 1);
    auto plain = [](std::function<ChainVec(const Chain&)> f) { return at_u(std::move(f)); };
    auto run_ops = [&](Tally& t, const ChainOp& f, const ChainOp& h, const std::string& what) {
        for (const auto& c : chains)
            t.check(equal_upto(f(c), h(c)), [&] { return what + "; x = " + chain_str(A, c); });
    };
    const ChainOp zero = [](const Chain&) { return CyclicChain(); };
    const ChainOp b = plain([&](const Chain& c) { return b_op(A, c); });
    const ChainOp B = plain([&](const Chain& c) { return B_op(A, c); });
    const ChainOp d = cyclic_d_op(A);
    auto L = [&](const Cochain& D) {
        return plain([&A, D, f = T.L_first_index](const Chain& c) { return lie(A, D, c, f); });
    };
    auto i_ = [&](const Cochain& D) { return plain([&A, D](const Chain& c) { return iota(A, D, c); }); };
    auto Tee = [&](const Cochain& X, const Cochain& Y) {
        return plain([&A, X, Y](const Chain& c) { return X.empty() || Y.empty() ? ChainVec{} : tee(A, X, {Y}, c); });
    };

    std::vector<std::pair<Cochain, Cochain>> samples;
    for (int i = 0; i < N; ++i)
        samples.push_back({g.cochain(A, cfg.arity_cap), g.cochain(A, cfg.arity_cap)});
    auto pair_str = [&](const Cochain& D, const Cochain& E) {
        return "D = " + cochain_str(A, D) + "; E = " + cochain_str(A, E);
    };

    if (sel(S, "i-chain-map")) {
        Tally t(S, "i-chain-map", "[b, i_D] = i_{δD}");
        for (const auto& [D, E] : samples)
            run_ops(t, op_comm(b, 1, i_(D), hdeg_or(A, D)), i_(delta(A, D)), pair_str(D, E));
        out.push_back(t.done());
    }
    if (sel(S, "i-product")) {
        Tally t(S, "i-product", "i_D i_E = (-1)^{|D||E|} i_{E⌣D}");
        for (const auto& [D, E] : samples) {
            const Cochain ed = cup(A, E, D);
            const Scalar s = sign(hdeg_or(A, D) * hdeg_or(A, E));
            run_ops(t, op_compose(i_(D), i_(E)), op_sum({{i_(ed), s}}), pair_str(D, E));
        }
        out.push_back(t.done());
    }
    if (sel(S, "L-bracket")) {
        Tally t(S, "L-bracket", "[L_D, L_E] = L_{[D,E]}");
        for (const auto& [D, E] : samples)
            run_ops(t, op_comm(L(D), lie_parity(A, D), L(E), lie_parity(A, E)), L(gbracket(A, D, E)),
                    pair_str(D, E));
        out.push_back(t.done());
    }
    if (sel(S, "L-b")) {
        Tally t(S, "L-b", "[b, L_D] + L_{δD} = 0");
        for (const auto& [D, E] : samples)
            run_ops(t, op_sum({{op_comm(b, 1, L(D), lie_parity(A, D)), 1}, {L(delta(A, D)), 1}}), zero,
                    pair_str(D, E));
        out.push_back(t.done());
    }
    if (sel(S, "L-B")) {
        Tally t(S, "L-B", "[L_D, B] = 0");
        for (const auto& [D, E] : samples)
            run_ops(t, op_comm(L(D), lie_parity(A, D), B, 1), zero, pair_str(D, E));
        out.push_back(t.done());
    }
    if (sel(S, "b-L-anchor")) {
        Tally t(S, "b-L-anchor", "b = κ L_{m'} with m'(a,b) = (-1)^{|a|}ab, κ = " + std::to_string(T.b_L_kappa));
        run_ops(t, b, op_sum({{L(full_multiplication(A)), Scalar(T.b_L_kappa)}}), "m'");
        out.push_back(t.done());
    }
    if (sel(S, "cartan")) {
        Tally t(S, "cartan",
                "[b+uB, i_D + uS_D] - (i_{δD} + uS_{δD}) = " + std::to_string(T.cartan_sign) + "·u^" +
                    std::to_string(T.cartan_u_power) + "·L_D");
        for (const auto& [D, E] : samples) {
            auto lhs = op_sum({{op_comm(d, 1, iota_u(A, D), hdeg_or(A, D)), 1}, {iota_u(A, delta(A, D)), -1}});
            auto rhs = op_sum({{at_u([&A, D, f = T.L_first_index](const Chain& c) { return lie(A, D, c, f); },
                                     T.cartan_u_power),
                                Scalar(T.cartan_sign)}});
            run_ops(t, lhs, rhs, pair_str(D, E));
        }
        out.push_back(t.done());
    }
    if (sel(S, "gdt")) {
        Tally t(S, "gdt",
                "[b+uB, T(D,E)] - T(δD,E) - (-1)^{|D|}T(D,δE) = [L_D, i_E + uS_E] - (-1)^{|D|+1}(i+uS)_{[D,E]}");
        for (const auto& [D, E] : samples) {
            const int dD = hdeg_or(A, D), dE = hdeg_or(A, E);
            auto lhs = op_sum({{op_comm(d, 1, Tee(D, E), (dD + dE) & 1), 1},
                               {Tee(delta(A, D), E), -1},
                               {Tee(D, delta(A, E)), -sign(dD)}});
            auto rhs0 = op_sum({{op_comm(L(D), (dD + 1) & 1, iota_u(A, E), dE), 1},
                                {iota_u(A, gbracket(A, D, E)), -sign(dD + 1)}});
            ChainOp rhs = [rhs0, s = T.gdt_sign, sh = T.gdt_u_shift](const Chain& c) {
                CyclicChain r = rhs0(c).shifted(sh);
                r *= s;
                return r;
            };
            run_ops(t, lhs, rhs, pair_str(D, E));
        }
        out.push_back(t.done());
    }
    if (sel(S, "Y-singleton")) {
        Tally t(S, "Y-singleton", "i_Y = i_D and S_Y = S_D for Y = D");
        for (const auto& [D, E] : samples)
            for (const auto& c : chains)
                t.check(iota_Y(A, {D}, c) == iota(A, D, c) && ess_Y(A, {D}, c) == ess(A, D, c),
                        [&] { return pair_str(D, E) + "; x = " + chain_str(A, c); });
        out.push_back(t.done());
    }
    return out;
}

// ---- A∞ layer ------------------------------------------------------------------

inline std::vector<IdentityResult> run_ainfinity(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "ainfinity";
    std::vector<IdentityResult> out;
    const int ucap = cfg.u_hi;
    const int L = cfg.length_or(2);
    const int base = cfg.samples_or(12);
    Sampler g(cfg.seed + 2);
    auto words_str = [&](const std::vector<CCWord>& ws) {
        std::string s;
        for (std::size_t i = 0; i < ws.size(); ++i)
            s += (i ? "; " : "") + ("w" + std::to_string(i + 1) + " = " + ccword_str(A, ws[i]));
        return s;
    };
    // fewer samples and shorter words as n grows
    auto trials = [&](int n) { return n <= 2 ? base : std::max(1, base / (n == 3 ? 2 : 4)); };
    auto len_for = [&](int n) { return n <= 3 ? L : std::min(L, 1); };

    if (sel(S, "ainf-relations")) {
        Tally t(S, "ainf-relations", "Σ ± m(w_1..w_j, m_k(w_{j+1}..w_{j+k}), ..) = 0 for n ≤ " +
                                         std::to_string(cfg.ainf_arity) + ", u-window [" + std::to_string(cfg.u_lo) +
                                         "," + std::to_string(cfg.u_hi) + "]");
        for (int n = 1; n <= cfg.ainf_arity; ++n)
            for (int i = 0; i < trials(n); ++i) {
                std::vector<CCWord> ws;
                for (int j = 0; j < n; ++j)
                    ws.push_back(g.ccword(A, len_for(n), 1));
                t.check(is_zero_upto(ainf_relation(A, ws, ucap), ucap), [&] { return words_str(ws); });
            }
        out.push_back(t.done());
    }
    if (sel(S, "module-relations")) {
        Tally t(S, "module-relations", "Σ ± μ(μ(x,..),..) + Σ ± μ(x,.., m(..),..) = 0 for n ≤ " +
                                           std::to_string(cfg.ainf_arity));
        for (int n = 1; n <= cfg.ainf_arity; ++n)
            for (int i = 0; i < trials(n); ++i) {
                Chain x = g.chain(A, len_for(n));
                std::vector<CCWord> cs;
                for (int j = 1; j < n; ++j)
                    cs.push_back(g.ccword(A, len_for(n), 1));
                t.check(is_zero_upto(module_relation(A, x, cs, ucap), ucap),
                        [&] { return "x = " + chain_str(A, x) + "; " + words_str(cs); });
            }
        out.push_back(t.done());
    }

    const auto chains = chains_upto(A, L);
    if (sel(S, "m1")) {
        Tally t(S, "m1", "m_1 = b + δ + uB: (b+uB)x on C_•(A), δD on cochains");
        for (const auto& c : chains) {
            CyclicChain got;
            for (const auto& [u, v] : m_words(A, {to_ccword(c)}).at)
                for (const auto& [w, k] : v)
                    if (is_algebra_word(w))
                        got.add(u, to_chain(w), k);
            t.check(equal_upto(got, cyclic_d(A, single(c))), [&] { return "x = " + chain_str(A, c); });
        }
        for (const auto& D : elementary_upto(A, 2, false)) {
            CCChain want;
            for (const auto& [e, k] : delta(A, D))
                want.add(CCWord{e}, k);
            t.check(m_words(A, {{D.begin()->first}}).coeff(0) == want, [&] { return "D = " + cochain_str(A, D); });
        }
        out.push_back(t.done());
    }
    const bool comm = graded_commutative(A);
    if (sel(S, "m2-shuffle")) {
        Tally t(S, "m2-shuffle", "(-1)^{|x|} m_2(x,y) = (sh + u sh')(x,y) for x, y in C_•(A)");
        if (!comm)
            t.note("checked on graded-commutative algebras only");
        else
            for (const auto& x : chains)
                for (const auto& y : chains) {
                    CCSeries m2 = m_words(A, {to_ccword(x), to_ccword(y)});
                    CyclicChain got;
                    for (const auto& [u, v] : m2.at)
                        for (const auto& [w, k] : v)
                            got.add(u, to_chain(w), k * sign(chain_deg(A, x)));
                    t.check(equal_upto(got, shuffle_u(A, x, y)),
                            [&] { return "x = " + chain_str(A, x) + "; y = " + chain_str(A, y); });
                }
        out.push_back(t.done());
    }

    std::vector<Elem> elems;
    for (int a = 0; a <= 1; ++a)
        for (const auto& e : elementary_cochains(A, a))
            elems.push_back(e);
    auto de_str = [&](const Elem& D, const Elem& E) {
        return "D = " + elem_str(A, D) + "; E = " + elem_str(A, E);
    };
    if (sel(S, "m2-cup")) {
        Tally t(S, "m2-cup", "(-1)^{|D|} m_2(D,E) = D⌣E at u^0; the u^1 part is 1⊗D⊗E");
        for (const auto& D : elems)
            for (const auto& E : elems) {
                auto m2 = m_words(A, {{D}, {E}});
                CCChain cupw;
                for (const auto& [e, c] : cup(A, Cochain(D), Cochain(E)))
                    cupw.add(CCWord{e}, c);
                CCChain u1;
                if (!is_unit(D) && !is_unit(E))
                    u1.add(CCWord{unit_elem(), D, E}, 1);
                CCChain m0 = m2.coeff(0);
                m0 *= sign(edeg(A, D));
                t.check(m0 == cupw && m2.coeff(1) == u1, [&] { return de_str(D, E); });
            }
        out.push_back(t.done());
    }
    if (sel.touches(S, {"m2-bracket", "m2-mixed"})) {
        Tally tb(S, "m2-bracket", "m_2(1⊗D,1⊗E) + (-1)^{|D||E|} m_2(1⊗E,1⊗D) = (-1)^{|D|} 1⊗[D,E]");
        Tally tm(S, "m2-mixed", "m_2(D,1⊗E) + (-1)^{(|D|+1)|E|} m_2(1⊗E,D) = (-1)^{|D|+1} [D,E]");
        for (const auto& D : elems)
            for (const auto& E : elems) {
                if (is_unit(D) || is_unit(E))
                    continue;
                const int dD = edeg(A, D), dE = edeg(A, E);
                const Cochain br = gbracket(A, Cochain(D), Cochain(E));
                CCSeries lhs = m_words(A, {{unit_elem(), D}, {unit_elem(), E}});
                lhs.add(m_words(A, {{unit_elem(), E}, {unit_elem(), D}}), sign(dD * dE));
                CCSeries rhs;
                for (const auto& [e, c] : br)
                    if (!is_unit(e))
                        rhs.add(0, CCWord{unit_elem(), e}, c * sign(dD));
                tb.check(equal_upto(lhs, rhs), [&] { return de_str(D, E); });
                CCSeries lhs2 = m_words(A, {{D}, {unit_elem(), E}});
                lhs2.add(m_words(A, {{unit_elem(), E}, {D}}), sign((dD + 1) * dE));
                CCSeries rhs2;
                for (const auto& [e, c] : br)
                    rhs2.add(0, CCWord{e}, c * sign(dD + 1));
                tm.check(equal_upto(lhs2, rhs2), [&] { return de_str(D, E); });
            }
        if (sel(S, "m2-bracket"))
            out.push_back(tb.done());
        if (sel(S, "m2-mixed"))
            out.push_back(tm.done());
    }
    if (sel(S, "mu1")) {
        Tally t(S, "mu1", "μ_1 = b + uB on C_•(A)[[u]]");
        for (const auto& c : chains)
            t.check(equal_upto(mu_words(A, c, {}), cyclic_d(A, single(c))),
                    [&] { return "x = " + chain_str(A, c); });
        out.push_back(t.done());
    }
    if (sel.touches(S, {"mu2-iota", "mu2-lie"})) {
        Tally ti(S, "mu2-iota", "μ_2(a, D) = (-1)^{|a||D|+|a|} (i_D + uS_D) a");
        Tally tl(S, "mu2-lie", "μ_2(a, 1⊗D) = (-1)^{|a||D|} L_D a");
        std::vector<Elem> Ds;
        for (int a = 0; a <= 2; ++a)
            for (const auto& e : elementary_cochains(A, a))
                if (!is_unit(e))
                    Ds.push_back(e);
        for (const auto& D : Ds)
            for (const auto& a : chains) {
                const int da = chain_deg(A, a), dD = edeg(A, D);
                CyclicChain exp(0, iota(A, Cochain(D), a));
                exp.add(1, ess(A, Cochain(D), a));
                CyclicChain got = mu_words(A, a, {{D}});
                got *= sign(da * dD + da);
                ti.check(equal_upto(got, exp), [&] { return "a = " + chain_str(A, a) + "; D = " + elem_str(A, D); });
                CyclicChain got2 = mu_words(A, a, {{unit_elem(), D}});
                got2 *= sign(da * dD);
                tl.check(equal_upto(got2, CyclicChain(0, lie(A, Cochain(D), a))),
                         [&] { return "a = " + chain_str(A, a) + "; D = " + elem_str(A, D); });
            }
        if (sel(S, "mu2-iota"))
            out.push_back(ti.done());
        if (sel(S, "mu2-lie"))
            out.push_back(tl.done());
    }
    if (sel(S, "mu2-shuffle")) {
        Tally t(S, "mu2-shuffle", "(-1)^{|a|} μ_2(a, x) = (sh + u sh')(a, x): C_•(A) is an A∞ subalgebra");
        if (!comm)
            t.note("checked on graded-commutative algebras only");
        else
            for (const auto& x : chains)
                for (const auto& y : chains) {
                    CyclicChain got = mu_words(A, x, {to_ccword(y)});
                    got *= sign(chain_deg(A, x));
                    t.check(equal_upto(got, shuffle_u(A, x, y)),
                            [&] { return "a = " + chain_str(A, x) + "; x = " + chain_str(A, y); });
                }
        out.push_back(t.done());
    }
    if (sel(S, "unit-vanishing")) {
        Tally t(S, "unit-vanishing",
                "m_k(.., 1⊗D_1⊗.., ..) = 0 and μ_k(x, .., 1⊗D_1⊗.., ..) = 0 for k ≥ 3, leading-unit word not last");
        for (int i = 0; i < 2 * base && A.dim() > 1; ++i) {
            const int k = g.pick(3, 4);
            std::vector<CCWord> ws;
            for (int j = 0; j < k; ++j)
                ws.push_back(g.ccword(A, k == 3 ? L : 1, 1));
            const int pos = g.pick(0, k - 2);
            ws[pos] = g.ccword(A, k == 3 ? L : 1, 1, true);
            t.check(m_words(A, ws).empty(), [&] { return words_str(ws); });
            if (pos > 0) {
                Chain x = g.chain(A, L);
                std::vector<CCWord> cs(ws.begin() + 1, ws.end());
                t.check(mu_words(A, x, cs).empty(), [&] { return "x = " + chain_str(A, x) + "; " + words_str(cs); });
            }
        }
        out.push_back(t.done());
    }
    if (sel(S, "bullet-product")) {
        Tally t(S, "bullet-product",
                "(1⊗D_1)•..•(1⊗D_N) = Σ over ordered block splittings ± 1⊗Ȳ_1⊗..⊗Ȳ_k, blocks composed last to first");
        for (int N = 2; N <= 3; ++N)
            for (int i = 0; i < base && A.dim() > 1; ++i) {
                std::vector<Cochain> Ds;
                CCSeries X;
                for (int j = 0; j < N; ++j) {
                    Elem e = g.elem(A, 1, true);
                    Ds.push_back(Cochain(e));
                    CCSeries f = cc_single({unit_elem(), e});
                    X = j == 0 ? f : bullet(A, X, f);
                }
                t.check(equal_upto(X, bullet_product_formula(A, Ds)), [&] { return cochains_str(A, Ds); });
            }
        out.push_back(t.done());
    }
    return out;
}

// ---- bar layer -----------------------------------------------------------------

inline std::vector<IdentityResult> run_bar(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "bar";
    const std::vector<std::string> ids{"bar-d-squared", "bar-tw-d-squared", "module-identity", "rho-closed-form",
                                       "symmetrization", "ybar-ad", "ybar-delta"};
    std::vector<IdentityResult> out;
    if (!sel.touches(S, ids))
        return out;
    if (A.has_differential()) {
        for (const auto& id : ids)
            if (sel(S, id)) {
                Tally t(S, id, "bar identities over algebras without internal differential");
                t.note("skipped: algebra has an internal differential");
                out.push_back(t.done());
            }
        return out;
    }
    const auto& T = frozen_calibration();
    const int N = cfg.samples_or(12);
    const int L = cfg.length_or(A.dim() > 2 ? 2 : 3);
    const int ucap = cfg.u_hi;
    Sampler g(cfg.seed + 3);
    const auto chains = chains_upto(A, L);

    // generators: every letter with ≤ 3 factors of arity ≤ arity_cap when that
    // is small, a random sample otherwise
    std::vector<Letter> letters = A.dim() <= 2 ? all_letters(A, 3, cfg.arity_cap) : std::vector<Letter>{};
    const bool exhaustive = !letters.empty();
    if (!exhaustive)
        for (int nf = 1; nf <= 3; ++nf)
            for (int i = 0; i < N; ++i)
                if (auto l = g.letter(A, nf, cfg.arity_cap))
                    letters.push_back(*l);
    auto note_gen = [&](Tally& t) {
        t.note(std::to_string(letters.size()) + (exhaustive ? " letters (all" : " letters (sampled") +
               ", ≤ 3 factors, arity ≤ " + std::to_string(cfg.arity_cap) + ")");
    };

    auto dsq = [&](const std::string& id, BarKind kind, const std::string& anchor) {
        Tally t(S, id, anchor);
        note_gen(t);
        for (const auto& l : letters) {
            BarElem x;
            x.add(0, BarWord{l}, 1);
            t.check(is_zero_upto(d_bar(A, d_bar(A, x, kind), kind), ucap), [&] { return letter_str(A, l); });
        }
        for (int i = 0; i < N && !letters.empty(); ++i) {
            BarWord w{letters[g.pick(0, static_cast<int>(letters.size()) - 1)],
                      letters[g.pick(0, static_cast<int>(letters.size()) - 1)]};
            BarElem x;
            x.add(0, w, 1);
            t.check(is_zero_upto(d_bar(A, d_bar(A, x, kind), kind), ucap), [&] { return word_str(A, w); });
        }
        out.push_back(t.done());
    };
    if (sel(S, "bar-d-squared"))
        dsq("bar-d-squared", BarKind::untwisted, "d² = 0 on B(g[u,ε])");
    if (sel(S, "bar-tw-d-squared"))
        dsq("bar-tw-d-squared", BarKind::twisted, "d² = 0 on B^tw(g[u,ε])");
    if (sel(S, "module-identity")) {
        Tally t(S, "module-identity", "x·(dc) = (-1)^{|x|}((b+uB)(x·c) - ((b+uB)x)·c) for c in B^tw");
        note_gen(t);
        for (const auto& l : letters)
            for (const auto& x : chains)
                t.check(is_zero_upto(module_axiom_defect(A, x, BarWord{l}, BarKind::twisted, ucap), ucap),
                        [&] { return "x = " + chain_str(A, x) + "; c = " + letter_str(A, l); });
        for (int i = 0; i < N && !letters.empty(); ++i) {
            BarWord w{letters[g.pick(0, static_cast<int>(letters.size()) - 1)],
                      letters[g.pick(0, static_cast<int>(letters.size()) - 1)]};
            if (w[0].size() + w[1].size() > 3)
                continue;
            for (const auto& x : chains)
                t.check(is_zero_upto(module_axiom_defect(A, x, w, BarKind::twisted, ucap), ucap),
                        [&] { return "x = " + chain_str(A, x) + "; c = " + word_str(A, w); });
        }
        out.push_back(t.done());
    }
    if (sel(S, "rho-closed-form")) {
        Tally t(S, "rho-closed-form", "ρ(D) = L_D, ρ(εY) = i_Y + uS_Y, ρ(εY∧D) = ±T(D,Y) agree with the μ_n route");
        note_gen(t);
        for (const auto& l : letters) {
            int nd = 0;
            for (const auto& f : l)
                nd += f.eps ? 0 : 1;
            if (nd > 1)
                continue;
            for (const auto& x : chains)
                t.check(equal_upto(act_letter(A, x, l), act_letter_mu(A, x, l)),
                        [&] { return "x = " + chain_str(A, x) + "; c = " + letter_str(A, l); });
        }
        out.push_back(t.done());
    }
    if (sel(S, "symmetrization")) {
        Tally t(S, "symmetrization",
                "Φ(εE_1∧..∧εE_n) = (1/n!)^" + std::to_string(T.symmetrization_norm) +
                    " Σ_σ ± (εE_σ1)E_σ2..E_σn commutes with the differentials into U(g[u,ε])");
        note_gen(t);
        for (const auto& l : letters) {
            BarElem x;
            x.add(0, BarWord{l}, 1);
            t.check(symmetrization_defect(A, x, T.symmetrization_norm, T.u_commutator_sign).empty(),
                    [&] { return letter_str(A, l); });
        }
        out.push_back(t.done());
    }
    if (sel.touches(S, {"ybar-ad", "ybar-delta"})) {
        Tally ta(S, "ybar-ad", "Ȳ(ad_D Y) = Σ ± D{Ȳ_1..Ȳ_k} - (-1)^{(|D|+1)(|Ȳ|+1)} Ȳ{D}");
        Tally td(S, "ybar-delta", "Ȳ(δY) = δȲ + Σ ± m{Ȳ_1, Ȳ_2}");
        for (int i = 0; i < N; ++i) {
            SMonomial Y;
            for (int j = g.pick(1, 3); j > 0; --j)
                Y.push_back(g.cochain(A, cfg.arity_cap, 1));
            Cochain D = g.cochain(A, cfg.arity_cap, 2);
            auto w = [&] { return "Y = (" + cochains_str(A, Y) + "); D = " + cochain_str(A, D); };
            ta.check(ybar_ad_defect(A, D, Y, 0).empty(), w);
            td.check(ybar_delta_defect(A, Y).empty(), w);
        }
        if (sel(S, "ybar-ad"))
            out.push_back(ta.done());
        if (sel(S, "ybar-delta"))
            out.push_back(td.done());
    }
    return out;
}

// ---- calibration -------------------------------------------------------------

inline std::vector<IdentityResult> run_calibration(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel)
{
    const std::string S = "calibration";
    std::vector<IdentityResult> out;
    if (!sel.touches(S, {"calibration-L", "calibration-cartan", "calibration-gdt", "calibration-symmetrization",
                         "calibration-gm-sigma"}))
        return out;
    if (A.has_differential()) {
        Tally t(S, "calibration", "calibration constants");
        t.note("skipped: algebra has an internal differential");
        out.push_back(t.done());
        return out;
    }
    CalibrationOptions o;
    o.seed = cfg.seed;
    if (cfg.samples >= 0)
        o.samples = cfg.samples;
    if (cfg.max_length >= 0)
        o.max_length = cfg.max_length;
    using Fn = CalibrationCheck (*)(const GradedAlgebra&, const CalibrationOptions&, const CalibrationTable&);
    const std::vector<std::pair<std::string, Fn>> checks{{"calibration-L", check_L_range},
                                                         {"calibration-cartan", check_cartan},
                                                         {"calibration-gdt", check_gdt},
                                                         {"calibration-symmetrization", check_symmetrization},
                                                         {"calibration-gm-sigma", check_gm_sigma}};
    const bool pin = A.name == corpus::dual_numbers().name;
    for (const auto& [id, fn] : checks) {
        if (!sel(S, id))
            continue;
        auto start = std::chrono::steady_clock::now();
        CalibrationCheck c = fn(A, o, frozen_calibration());
        Tally t(S, id, c.constant + " frozen at " + c.frozen + (pin ? " (pinned here)" : ""));
        std::string passing;
        for (const auto& p : c.passing)
            passing += (passing.empty() ? "" : " | ") + p;
        const bool ok = pin ? c.pinned() : c.holds();
        t.check(ok, [&] { return "candidates passing on " + c.algebra + ": " + (passing.empty() ? "none" : passing); });
        t.note("passing: " + (passing.empty() ? std::string("none") : passing));
        IdentityResult r = t.done();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(r);
    }
    return out;
}

} // namespace suite

using SuiteFn = std::vector<IdentityResult> (*)(const GradedAlgebra&, const RunConfig&, const Selector&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table()
{
    static const std::vector<std::pair<std::string, SuiteFn>> t{
        {"validate", suite::run_validate},     {"structural", suite::run_structural},
        {"gerstenhaber", suite::run_gerstenhaber}, {"pairing", suite::run_pairing},
        {"ainfinity", suite::run_ainfinity},   {"bar", suite::run_bar},
        {"calibration", suite::run_calibration}};
    return t;
}

// Runs the selected suites; a failed algebra validation stops the run. With
// jobs > 1 the suites run concurrently and are reassembled in table order.
inline SuiteReport run_suites(const GradedAlgebra& A, const RunConfig& cfg, const Selector& sel = {})
{
    SuiteReport rep{A.name, {}};
    const auto& table = suite_table();
    auto first = suite::run_validate(A, cfg, Selector{});
    const bool valid = first.empty() || first[0].pass();
    if (sel("validate", "algebra-axioms") || !valid)
        rep.results = first;
    if (!valid)
        return rep;
    std::vector<std::vector<IdentityResult>> parts(table.size());
    if (cfg.jobs > 1) {
        std::vector<std::future<std::vector<IdentityResult>>> fut(table.size());
        for (std::size_t i = 1; i < table.size(); ++i)
            fut[i] = std::async(std::launch::async, table[i].second, std::cref(A), std::cref(cfg), std::cref(sel));
        for (std::size_t i = 1; i < table.size(); ++i)
            parts[i] = fut[i].get();
    } else {
        for (std::size_t i = 1; i < table.size(); ++i)
            parts[i] = table[i].second(A, cfg, sel);
    }
    for (auto& p : parts)
        for (auto& r : p)
            rep.results.push_back(std::move(r));
    return rep;
}

inline bool known_selector(const std::string& name)
{
    static const std::vector<std::string> ids{
        "algebra-axioms",  "delta-squared",    "b-squared",        "B-squared",        "bB+Bb",
        "cyclic-d-squared", "cup-leibniz",     "bracket-leibniz",  "jacobi",           "brace-composition",
        "lift-dga-morphism", "i-chain-map",    "i-product",        "L-bracket",        "L-b",
        "L-B",             "b-L-anchor",       "cartan",           "gdt",              "Y-singleton",
        "ainf-relations",  "module-relations", "m1",               "m2-shuffle",       "m2-cup",
        "m2-bracket",      "m2-mixed",         "mu1",              "mu2-iota",         "mu2-lie",
        "mu2-shuffle",     "unit-vanishing",   "bullet-product",   "bar-d-squared",    "bar-tw-d-squared",
        "module-identity", "rho-closed-form",  "symmetrization",   "ybar-ad",          "ybar-delta",
        "calibration-L",   "calibration-cartan", "calibration-gdt", "calibration-symmetrization",
        "calibration-gm-sigma"};
    for (const auto& [s, f] : suite_table())
        if (s == name)
            return true;
    return std::find(ids.begin(), ids.end(), name) != ids.end();
}

} // namespace hoch
