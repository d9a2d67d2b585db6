#pragma once

#include "bar.hpp"
#include "gm.hpp"

#include <random>

namespace hoch {

// Signs and u-powers that the printed formulas leave open, each pinned by a
// machine-checked identity on the dual numbers and then required to hold
// unchanged on the rest of the corpus.
struct CalibrationTable {
    int L_first_index = 0;        // interior sum of L_D starts at k = 0
    int b_L_kappa = -1;           // b = κ L_{m'}, m'(a,b) = (-1)^{|a|} ab
    int cartan_sign = 1;          // [b+uB, ι_D] − ι_{δD} = sign · u^p · L_D
    int cartan_u_power = 1;
    int gdt_sign = 1;             // GDT left side = sign · u^shift · right side
    int gdt_u_shift = 0;
    int symmetrization_norm = 1;  // (1/n!)^norm in the symmetrization
    int u_commutator_sign = -1;   // commutator in U(g[u,ε]) against the CE bracket
    int gm_sigma = -1;            // ∇ = ∂ + σ u^{-1} ρ(θ)
    int bar_quadratic = -1;       // coefficient of Σ ± c1 c2 in the bar differential
    bool bar_tw_inverse_factorial = true;
};

inline const CalibrationTable& frozen_calibration()
{
    static const CalibrationTable t{};
    return t;
}

struct CalibrationCheck {
    std::string constant;
    std::string algebra;
    std::string frozen;
    std::vector<std::string> candidates;
    std::vector<std::string> passing;

    bool holds() const { return std::find(passing.begin(), passing.end(), frozen) != passing.end(); }
    bool pinned() const { return passing.size() == 1 && passing[0] == frozen; }
};

struct CalibrationOptions {
    int samples = 4;
    std::uint64_t seed = 2024;
    int max_length = -1; // -1: 3 for dim ≤ 3, 2 otherwise
};

namespace calib {

inline int bound(const GradedAlgebra& A, const CalibrationOptions& o)
{
    return o.max_length >= 0 ? o.max_length : (A.dim() >= 4 ? 2 : 3);
}

inline std::string label(std::initializer_list<std::pair<const char*, int>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv)
        s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
    return s;
}

// Small homogeneous random cochains, never the zero cochain.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    Cochain cochain(const GradedAlgebra& A, int max_arity)
    {
        auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); };
        const int ar = A.dim() > 1 ? pick(0, max_arity) : 0;
        std::vector<int> in(ar);
        for (auto& x : in)
            x = pick(1, A.dim() - 1);
        Elem seed{in, pick(0, A.dim() - 1)};
        if (is_unit(seed) && A.dim() > 1)
            seed.out = 1;
        Cochain c(seed, 1);
        for (int t = 0; t < 6; ++t) {
            std::vector<int> in2(ar);
            for (auto& x : in2)
                x = pick(1, A.dim() - 1);
            Elem e{in2, pick(0, A.dim() - 1)};
            if (edeg(A, e) == edeg(A, seed))
                c.add(e, Scalar(pick(-3, 3), 1) / pick(1, 2));
        }
        return c.empty() ? Cochain(seed, 1) : c;
    }
    Letter letter(const GradedAlgebra& A, int nfac)
    {
        auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); };
        for (;;) {
            std::vector<Factor> fs;
            for (int i = 0; i < nfac; ++i) {
                Elem e{{}, 0};
                while (is_unit(e)) {
                    std::vector<int> in(pick(0, 2));
                    for (auto& x : in)
                        x = pick(1, A.dim() - 1);
                    e = Elem{in, pick(0, A.dim() - 1)};
                }
                fs.push_back(Factor{e, pick(0, 1)});
            }
            if (auto l = make_letter(A, fs))
                return *l;
        }
    }

private:
    std::mt19937_64 rng_;
};

inline CyclicChain d_of(const GradedAlgebra& A, const CyclicChain& x) { return cyclic_d(A, x); }

inline CyclicChain series_of(int u, const ChainVec& v) { return CyclicChain(u, v); }

inline CyclicChain iota_series(const GradedAlgebra& A, const Cochain& D, const CyclicChain& x)
{
    return apply_op(iota_u(A, D), x);
}

inline ChainVec lie_vec(const GradedAlgebra& A, const Cochain& D, const ChainVec& v, int first)
{
    ChainVec r;
    for (const auto& [c, x] : v)
        r.add(lie(A, D, c, first), x);
    return r;
}

inline ChainVec b_vec(const GradedAlgebra& A, const ChainVec& v)
{
    ChainVec r;
    for (const auto& [c, x] : v)
        r.add(b_op(A, c), x);
    return r;
}

} // namespace calib

// L index range jointly with the anchor κ: [L_D,L_E] = L_{[D,E]},
// [b,L_D] + L_{δD} = 0 and b = κ L_{m'}.
inline CalibrationCheck check_L_range(const GradedAlgebra& A, const CalibrationOptions& o = {},
                                      const CalibrationTable& T = frozen_calibration())
{
    CalibrationCheck r{"L index range / b = kappa L_m'", A.name,
                       calib::label({{"first", T.L_first_index}, {"kappa", T.b_L_kappa}}), {}, {}};
    calib::Sampler smp(o.seed);
    const auto chains = chains_upto(A, calib::bound(A, o));
    const Cochain m = full_multiplication(A);
    std::vector<std::pair<Cochain, Cochain>> samples;
    for (int i = 0; i < o.samples; ++i)
        samples.push_back({smp.cochain(A, 2), smp.cochain(A, 2)});
    for (int first : {0, 1})
        for (int kappa : {1, -1}) {
            const std::string lab = calib::label({{"first", first}, {"kappa", kappa}});
            r.candidates.push_back(lab);
            bool ok = true;
            for (const auto& c : chains) {
                if (!ok)
                    break;
                ChainVec bl = b_op(A, c);
                bl.add(lie(A, m, c, first), -kappa);
                ok = bl.empty();
                for (const auto& [D, E] : samples) {
                    if (!ok)
                        break;
                    const int pD = lie_parity(A, D), pE = lie_parity(A, E);
                    ChainVec cm = calib::lie_vec(A, D, lie(A, E, c, first), first);
                    cm.add(calib::lie_vec(A, E, lie(A, D, c, first), first), -sign(pD * pE));
                    cm.add(lie(A, gbracket(A, D, E), c, first), -1);
                    ChainVec bL = calib::b_vec(A, lie(A, D, c, first));
                    bL.add(calib::lie_vec(A, D, b_op(A, c), first), -sign(pD));
                    bL.add(lie(A, delta(A, D), c, first), 1);
                    ok = cm.empty() && bL.empty();
                }
            }
            if (ok)
                r.passing.push_back(lab);
        }
    return r;
}

// [b+uB, ι_D] − ι_{δD} = sign · u^p · L_D.
inline CalibrationCheck check_cartan(const GradedAlgebra& A, const CalibrationOptions& o = {},
                                     const CalibrationTable& T = frozen_calibration())
{
    CalibrationCheck r{"Cartan u-power", A.name,
                       calib::label({{"sign", T.cartan_sign}, {"p", T.cartan_u_power}}), {}, {}};
    calib::Sampler smp(o.seed + 1);
    const auto chains = chains_upto(A, calib::bound(A, o));
    std::vector<std::pair<CyclicChain, ChainVec>> pairs; // (lhs, L_D) per chain and sample
    for (int i = 0; i < o.samples; ++i) {
        Cochain D = smp.cochain(A, 2);
        const int dD = hdeg_or(A, D);
        const Cochain dlt = delta(A, D);
        for (const auto& c : chains) {
            CyclicChain x = single(c);
            CyclicChain lhs = calib::d_of(A, calib::iota_series(A, D, x));
            lhs.add(calib::iota_series(A, D, calib::d_of(A, x)), -sign(dD));
            lhs.add(calib::iota_series(A, dlt, x), -1);
            pairs.push_back({lhs, lie(A, D, c, T.L_first_index)});
        }
    }
    for (int s : {1, -1})
        for (int p = 0; p <= 2; ++p) {
            const std::string lab = calib::label({{"sign", s}, {"p", p}});
            r.candidates.push_back(lab);
            bool ok = true;
            for (const auto& [lhs, L] : pairs) {
                CyclicChain rhs(p, L);
                rhs *= s;
                if (!equal_upto(lhs, rhs)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                r.passing.push_back(lab);
        }
    return r;
}

// [b+uB, T(D,E)] − T(δD,E) − (-1)^{|D|} T(D,δE)
//   = sign · u^shift · ([L_D, ι_E] − (-1)^{|D|+1} ι_{[D,E]}).
inline CalibrationCheck check_gdt(const GradedAlgebra& A, const CalibrationOptions& o = {},
                                  const CalibrationTable& T = frozen_calibration())
{
    CalibrationCheck r{"GDT signs", A.name, calib::label({{"sign", T.gdt_sign}, {"shift", T.gdt_u_shift}}), {}, {}};
    calib::Sampler smp(o.seed + 2);
    const auto chains = chains_upto(A, calib::bound(A, o));
    auto tee_series = [&](const Cochain& X, const Cochain& Y, const CyclicChain& x) {
        CyclicChain out;
        if (X.empty() || Y.empty())
            return out;
        for (const auto& [u, v] : x.at)
            for (const auto& [c, k] : v)
                out.add(u, tee(A, X, {Y}, c), k);
        return out;
    };
    auto lie_series = [&](const Cochain& X, const CyclicChain& x) {
        CyclicChain out;
        for (const auto& [u, v] : x.at)
            out.add(u, calib::lie_vec(A, X, v, T.L_first_index));
        return out;
    };
    std::vector<std::pair<CyclicChain, CyclicChain>> pairs;
    for (int i = 0; i < o.samples; ++i) {
        Cochain D = smp.cochain(A, 2), E = smp.cochain(A, 2);
        const int dD = hdeg_or(A, D), dE = hdeg_or(A, E);
        const Cochain dD_ = delta(A, D), dE_ = delta(A, E), br = gbracket(A, D, E);
        for (const auto& c : chains) {
            CyclicChain x = single(c);
            CyclicChain lhs = calib::d_of(A, tee_series(D, E, x));
            lhs.add(tee_series(D, E, calib::d_of(A, x)), -sign(dD + dE));
            lhs.add(tee_series(dD_, E, x), -1);
            lhs.add(tee_series(D, dE_, x), -sign(dD));
            CyclicChain rhs = lie_series(D, calib::iota_series(A, E, x));
            rhs.add(calib::iota_series(A, E, lie_series(D, x)), -sign((dD + 1) * dE));
            rhs.add(calib::iota_series(A, br, x), -sign(dD + 1));
            pairs.push_back({lhs, rhs});
        }
    }
    for (int s : {1, -1})
        for (int shift : {0, 1}) {
            const std::string lab = calib::label({{"sign", s}, {"shift", shift}});
            r.candidates.push_back(lab);
            bool ok = true;
            for (const auto& [lhs, rhs0] : pairs) {
                CyclicChain rhs = rhs0.shifted(shift);
                rhs *= s;
                if (!equal_upto(lhs, rhs)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                r.passing.push_back(lab);
        }
    return r;
}

// Symmetrization B^tw → U(g[u,ε]) is a chain map on letters with ≤ 3 factors.
inline CalibrationCheck check_symmetrization(const GradedAlgebra& A, const CalibrationOptions& o = {},
                                      const CalibrationTable& T = frozen_calibration())
{
    CalibrationCheck r{"symmetrization normalization", A.name,
                       calib::label({{"norm", T.symmetrization_norm}, {"commutator", T.u_commutator_sign}}), {}, {}};
    calib::Sampler smp(o.seed + 3);
    std::vector<BarElem> xs;
    if (A.dim() > 1)
        for (int nf = 1; nf <= 3; ++nf)
            for (int i = 0; i < 3 * o.samples; ++i) {
                BarElem x;
                x.add(0, BarWord{smp.letter(A, nf)}, 1);
                xs.push_back(std::move(x));
            }
    for (int norm : {1, 2})
        for (int cs : {1, -1}) {
            const std::string lab = calib::label({{"norm", norm}, {"commutator", cs}});
            r.candidates.push_back(lab);
            bool ok = true;
            for (const auto& x : xs)
                if (!is_zero_upto(symmetrization_defect(A, x, norm, cs))) {
                    ok = false;
                    break;
                }
            if (ok)
                r.passing.push_back(lab);
        }
    return r;
}

// The deformation used for σ on each corpus algebra (constant family when the
// corpus offers no natural one-parameter deformation).
inline AlgebraFamily gm_family_for(const GradedAlgebra& A)
{
    if (A.name == corpus::dual_numbers().name)
        return families::xx_minus_t();
    if (A.name == corpus::truncated_poly(3).name)
        return families::cubic_tx();
    if (A.name == corpus::group_algebra_z2().name)
        return families::group_z2_deformation();
    return families::constant(A);
}

inline CalibrationCheck check_gm_sigma(const GradedAlgebra& A, const CalibrationOptions& o = {},
                                       const CalibrationTable& T = frozen_calibration())
{
    const AlgebraFamily F = gm_family_for(A);
    CalibrationCheck r{"GM sigma", A.name + " via " + F.name, calib::label({{"sigma", T.gm_sigma}}), {}, {}};
    const int len = std::min(calib::bound(A, o), 3);
    for (int s : {1, -1}) {
        const std::string lab = calib::label({{"sigma", s}});
        r.candidates.push_back(lab);
        if (check_gm_chain_map(F, 0, Point{0, 0}, len, -1, 2, s).ok())
            r.passing.push_back(lab);
    }
    return r;
}

struct CalibrationReport {
    std::vector<CalibrationCheck> pins;          // on the pinning algebra: unique and equal to the table
    std::vector<CalibrationCheck> verifications; // elsewhere: the frozen value still holds
    bool ok() const
    {
        for (const auto& c : pins)
            if (!c.pinned())
                return false;
        for (const auto& c : verifications)
            if (!c.holds())
                return false;
        return true;
    }
};

inline std::vector<CalibrationCheck> calibration_checks(const GradedAlgebra& A, const CalibrationOptions& o,
                                                        const CalibrationTable& T)
{
    return {check_L_range(A, o, T), check_cartan(A, o, T), check_gdt(A, o, T), check_symmetrization(A, o, T),
            check_gm_sigma(A, o, T)};
}

inline CalibrationReport calibration_stability(const GradedAlgebra& pin_on, const std::vector<GradedAlgebra>& others,
                                               const CalibrationOptions& o = {},
                                               const CalibrationTable& T = frozen_calibration())
{
    CalibrationReport rep;
    rep.pins = calibration_checks(pin_on, o, T);
    for (const auto& A : others) {
        if (A.name == pin_on.name)
            continue;
        for (auto& c : calibration_checks(A, o, T))
            rep.verifications.push_back(std::move(c));
    }
    return rep;
}

} // namespace hoch
