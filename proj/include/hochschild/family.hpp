#pragma once

#include "cochain.hpp"

#include <array>

namespace hoch {

// Polynomial in at most two parameters: exponent pair (a, b) ↦ coefficient of
// p_0^a p_1^b. One-parameter families only use a.
using Mono = std::array<int, 2>;

class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c) { terms_.add(Mono{0, 0}, c); }
    static Poly monomial(int a, int b, const Scalar& c = 1)
    {
        Poly p;
        p.terms_.add(Mono{a, b}, c);
        return p;
    }

    void add(const Mono& m, const Scalar& c) { terms_.add(m, c); }
    Poly& operator+=(const Poly& o) { terms_ += o.terms_; return *this; }
    Poly& operator-=(const Poly& o) { terms_ -= o.terms_; return *this; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [m, c] : a.terms_)
            for (const auto& [n, d] : b.terms_)
                r.terms_.add(Mono{m[0] + n[0], m[1] + n[1]}, c * d);
        return r;
    }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    const Lin<Mono>& terms() const { return terms_; }

    Scalar eval(const std::array<Scalar, 2>& p) const
    {
        Scalar r = 0;
        for (const auto& [m, c] : terms_) {
            Scalar x = c;
            for (int v = 0; v < 2; ++v)
                for (int k = 0; k < m[v]; ++k)
                    x *= p[v];
            r += x;
        }
        return r;
    }

    Poly derivative(int var) const
    {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m[var] > 0) {
                Mono n = m;
                --n[var];
                r.terms_.add(n, c * m[var]);
            }
        return r;
    }

    std::string to_string(const std::vector<std::string>& vars) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string mon;
            for (int v = 0; v < 2; ++v)
                if (m[v] > 0)
                    mon += (mon.empty() ? "" : "*") + vars.at(v) + (m[v] > 1 ? "^" + std::to_string(m[v]) : "");
            std::string coef = hoch::to_string(c);
            if (!s.empty())
                s += " + ";
            if (mon.empty())
                s += coef;
            else if (c == 1)
                s += mon;
            else
                s += coef + "*" + mon;
        }
        return s;
    }

private:
    Lin<Mono> terms_;
};

using Point = std::array<Scalar, 2>;

// A family of graded algebras over an affine base with polynomial structure
// constants; the unit (index 0) is constant.
struct AlgebraFamily {
    std::string name;
    std::vector<std::string> names;
    std::vector<int> deg;
    std::vector<std::string> params; // one or two parameter names
    std::map<std::array<int, 3>, Poly> products; // (i, j, k) ↦ μ_ij^k, reduced i, j

    int dim() const { return static_cast<int>(deg.size()); }
    int nparams() const { return static_cast<int>(params.size()); }

    int param_index(const std::string& p) const
    {
        for (int i = 0; i < nparams(); ++i)
            if (params[i] == p)
                return i;
        throw std::invalid_argument("family '" + name + "' has no parameter '" + p + "'");
    }

    GradedAlgebra at(const Point& p) const
    {
        GradedAlgebra A(name + "@" + point_str(p), names, deg);
        A.set_unit_rows();
        for (const auto& [ijk, f] : products)
            A.add_product(ijk[0], ijk[1], ijk[2], f.eval(p));
        return A;
    }

    // Table of ∂μ/∂(param) at p; unit rows are zero.
    GradedAlgebra derivative(int var, const Point& p) const
    {
        GradedAlgebra A("d" + params.at(var) + " " + name, names, deg);
        for (const auto& [ijk, f] : products)
            A.add_product(ijk[0], ijk[1], ijk[2], f.derivative(var).eval(p));
        return A;
    }

    // ṁ = ∂m/∂(param) at p as a normalized 2-cochain.
    Cochain velocity(int var, const Point& p) const { return velocity_of(var, -1, p); }

    // ∂²m/∂(v1)∂(v2) at p.
    Cochain second_velocity(int v1, int v2, const Point& p) const { return velocity_of(v1, v2, p); }

    std::string point_str(const Point& p) const
    {
        std::string s = "(";
        for (int i = 0; i < nparams(); ++i)
            s += (i ? "," : "") + to_string(p[i]);
        return s + ")";
    }

private:
    Cochain velocity_of(int v1, int v2, const Point& p) const
    {
        Cochain m;
        for (const auto& [ijk, f] : products) {
            Poly g = f.derivative(v1);
            if (v2 >= 0)
                g = g.derivative(v2);
            m.add(Elem{{ijk[0], ijk[1]}, ijk[2]}, g.eval(p));
        }
        return m;
    }
};

struct FamilyReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Degrees, parameter count, and associativity as polynomial identities.
inline FamilyReport validate_family(const AlgebraFamily& F)
{
    FamilyReport r;
    const int n = F.dim();
    if (F.nparams() < 1 || F.nparams() > 2)
        r.problems.push_back("families need one or two parameters");
    if (n == 0 || F.deg.at(0) != 0)
        r.problems.push_back("unit (index 0) must exist and have degree 0");
    auto mu = [&](int i, int j) {
        std::map<int, Poly> out;
        if (i == 0)
            out[j] = Poly(1);
        else if (j == 0)
            out[i] = Poly(1);
        else
            for (const auto& [ijk, f] : F.products)
                if (ijk[0] == i && ijk[1] == j)
                    out[ijk[2]] += f;
        return out;
    };
    for (const auto& [ijk, f] : F.products) {
        if (ijk[0] <= 0 || ijk[1] <= 0)
            r.problems.push_back("products with the unit are fixed; entry (" + std::to_string(ijk[0]) + "," +
                                 std::to_string(ijk[1]) + ") is not allowed");
        else if (!f.is_zero() && F.deg[ijk[2]] != F.deg[ijk[0]] + F.deg[ijk[1]])
            r.problems.push_back("degree mismatch in product (" + std::to_string(ijk[0]) + "," +
                                 std::to_string(ijk[1]) + "," + std::to_string(ijk[2]) + ")");
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                std::map<int, Poly> lhs, rhs;
                for (const auto& [a, f] : mu(i, j))
                    for (const auto& [b, g] : mu(a, k))
                        lhs[b] += f * g;
                for (const auto& [a, f] : mu(j, k))
                    for (const auto& [b, g] : mu(i, a))
                        rhs[b] += f * g;
                for (int b = 0; b < n; ++b)
                    if (!(lhs[b] == rhs[b])) {
                        r.problems.push_back("associativity fails at (" + F.names[i] + "," + F.names[j] + "," +
                                             F.names[k] + ")");
                        b = n;
                    }
            }
    return r;
}

namespace families {

inline AlgebraFamily make(std::string name, std::vector<std::string> names, std::vector<int> degs,
                          std::vector<std::string> params,
                          std::vector<std::pair<std::array<int, 3>, Poly>> prods)
{
    AlgebraFamily F{std::move(name), std::move(names), std::move(degs), std::move(params), {}};
    for (auto& [ijk, f] : prods)
        F.products[ijk] += f;
    return F;
}

// ℚ[x]/(x² − t)
inline AlgebraFamily xx_minus_t()
{
    return make("Q[x]/(x^2-t)", {"1", "x"}, {0, 0}, {"t"}, {{{1, 1, 0}, Poly::monomial(1, 0)}});
}

// ℚ[x]/(x³ − t·x), basis 1, x, x²
inline AlgebraFamily cubic_tx()
{
    auto t = Poly::monomial(1, 0);
    return make("Q[x]/(x^3-tx)", {"1", "x", "x^2"}, {0, 0, 0}, {"t"},
                {{{1, 1, 2}, Poly(1)}, {{1, 2, 1}, t}, {{2, 1, 1}, t}, {{2, 2, 2}, t}});
}

// ℚ[x]/(x³ − s·x − t), basis 1, x, x²
inline AlgebraFamily cubic_st()
{
    auto s = Poly::monomial(1, 0), t = Poly::monomial(0, 1);
    return make("Q[x]/(x^3-sx-t)", {"1", "x", "x^2"}, {0, 0, 0}, {"s", "t"},
                {{{1, 1, 2}, Poly(1)},
                 {{1, 2, 1}, s},
                 {{1, 2, 0}, t},
                 {{2, 1, 1}, s},
                 {{2, 1, 0}, t},
                 {{2, 2, 2}, s},
                 {{2, 2, 1}, t}});
}

// ℚ[g]/(g² − 1 − t·g): the group algebra of ℤ/2 at t = 0.
inline AlgebraFamily group_z2_deformation()
{
    return make("Q[g]/(g^2-1-tg)", {"1", "g"}, {0, 0}, {"t"},
                {{{1, 1, 0}, Poly(1)}, {{1, 1, 1}, Poly::monomial(1, 0)}});
}

// A as a constant family over the t-line.
inline AlgebraFamily constant(const GradedAlgebra& A)
{
    AlgebraFamily F{A.name + " x A^1", A.names, A.deg, {"t"}, {}};
    for (int i = 1; i < A.dim(); ++i)
        for (int j = 1; j < A.dim(); ++j)
            for (const auto& [k, c] : A.prod(i, j))
                F.products[{i, j, k}] += Poly(c);
    return F;
}

// A constant family (the dual numbers over the t-line).
inline AlgebraFamily constant_dual()
{
    return make("Lambda x A^1", {"1", "x"}, {0, 0}, {"t"}, {});
}

} // namespace families

} // namespace hoch
