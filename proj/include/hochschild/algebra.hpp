#pragma once

#include "linear.hpp"

#include <array>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace hoch {

using Vec = Lin<int>;

struct Product {
    int i, j, k;
    Scalar c;
};

struct DiffEntry {
    int i, k;
    Scalar c;
};

// Finite-dimensional graded unital algebra on a homogeneous basis with the
// unit at index 0. Structure constants are kept as dense per-pair lists.
// A table with zeroed unit rows is also allowed (derivative of a family);
// validate() rejects it as an algebra.
class GradedAlgebra {
public:
    std::string name;
    std::vector<std::string> names;
    std::vector<int> deg;

    GradedAlgebra() = default;
    GradedAlgebra(std::string nm, std::vector<std::string> basis_names, std::vector<int> degrees)
        : name(std::move(nm)), names(std::move(basis_names)), deg(std::move(degrees))
    {
        if (names.size() != deg.size())
            throw std::invalid_argument("algebra '" + name + "': basis and degree lists differ in length");
        if (deg.empty())
            throw std::invalid_argument("algebra '" + name + "': empty basis");
        mul_.assign(deg.size() * deg.size(), {});
        diff_.assign(deg.size(), {});
    }

    int dim() const { return static_cast<int>(deg.size()); }
    int apar(int i) const { return (deg[i] + 1) & 1; }
    bool has_differential() const { return has_d_; }

    const std::vector<std::pair<int, Scalar>>& prod(int i, int j) const { return mul_[i * dim() + j]; }
    const std::vector<std::pair<int, Scalar>>& d(int i) const { return diff_[i]; }

    void add_product(int i, int j, int k, const Scalar& c)
    {
        check_index(i), check_index(j), check_index(k);
        add_entry(mul_[i * dim() + j], k, c);
    }
    void add_diff(int i, int k, const Scalar& c)
    {
        check_index(i), check_index(k);
        add_entry(diff_[i], k, c);
        has_d_ = true;
    }
    void clear_product(int i, int j) { mul_[i * dim() + j].clear(); }

    // Installs 1*e_i = e_i*1 = e_i for every basis element.
    void set_unit_rows()
    {
        for (int i = 0; i < dim(); ++i) {
            mul_[i].assign(1, {i, Scalar(1)});
            mul_[i * dim()].assign(1, {i, Scalar(1)});
        }
    }
    void zero_unit_rows()
    {
        for (int i = 0; i < dim(); ++i) {
            mul_[i].clear();
            mul_[i * dim()].clear();
        }
    }

    Vec mul(const Vec& x, const Vec& y) const
    {
        Vec r;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y)
                for (const auto& [k, c] : prod(i, j))
                    r.add(k, a * b * c);
        return r;
    }
    Vec mul_basis(int i, int j) const
    {
        Vec r;
        for (const auto& [k, c] : prod(i, j))
            r.add(k, c);
        return r;
    }
    Vec apply_d(const Vec& x) const
    {
        Vec r;
        for (const auto& [i, a] : x)
            for (const auto& [k, c] : d(i))
                r.add(k, a * c);
        return r;
    }

    std::string basis_name(int i) const { return names.at(i); }

private:
    std::vector<std::vector<std::pair<int, Scalar>>> mul_;
    std::vector<std::vector<std::pair<int, Scalar>>> diff_;
    bool has_d_ = false;

    void check_index(int i) const
    {
        if (i < 0 || i >= dim())
            throw std::out_of_range("algebra '" + name + "': basis index " + std::to_string(i) + " out of range");
    }
    static void add_entry(std::vector<std::pair<int, Scalar>>& v, int k, const Scalar& c)
    {
        for (auto it = v.begin(); it != v.end(); ++it)
            if (it->first == k) {
                it->second += c;
                if (it->second == 0)
                    v.erase(it);
                return;
            }
        if (c != 0)
            v.emplace_back(k, c);
    }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string s)
    {
        ok = false;
        if (violations.size() < 20)
            violations.push_back(std::move(s));
    }
};

inline std::string vec_str(const GradedAlgebra& A, const Vec& v)
{
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c) << "*" << A.basis_name(i);
    }
    return os.str();
}

// Checks homogeneity of the structure constants, the unit law, associativity,
// and for a differential: degree +1, d(1) = 0, d^2 = 0 and the graded Leibniz
// rule. Every failure carries the offending basis triple.
inline ValidationReport validate(const GradedAlgebra& A)
{
    ValidationReport rep;
    const int n = A.dim();
    auto nm = [&](int i) { return A.basis_name(i); };
    if (A.deg[0] != 0)
        rep.fail("unit " + nm(0) + " has nonzero degree " + std::to_string(A.deg[0]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : A.prod(i, j))
                if (A.deg[k] != A.deg[i] + A.deg[j])
                    rep.fail("product " + nm(i) + "*" + nm(j) + " has a component on " + nm(k) + " of the wrong degree");
    for (int i = 0; i < n; ++i) {
        Vec e(i);
        if (!(A.mul_basis(0, i) == e) || !(A.mul_basis(i, 0) == e))
            rep.fail("unit law fails on (" + nm(0) + ", " + nm(i) + ")");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec l = A.mul(A.mul_basis(i, j), Vec(k));
                Vec r = A.mul(Vec(i), A.mul_basis(j, k));
                if (!(l == r))
                    rep.fail("associativity fails on (" + nm(i) + ", " + nm(j) + ", " + nm(k) + "): " + vec_str(A, l) +
                             " vs " + vec_str(A, r));
            }
    if (A.has_differential()) {
        for (int i = 0; i < n; ++i)
            for (const auto& [k, c] : A.d(i))
                if (A.deg[k] != A.deg[i] + 1)
                    rep.fail("d(" + nm(i) + ") has a component on " + nm(k) + " of the wrong degree");
        if (!A.d(0).empty())
            rep.fail("d(" + nm(0) + ") is nonzero");
        for (int i = 0; i < n; ++i)
            if (!A.apply_d(A.apply_d(Vec(i))).empty())
                rep.fail("d^2(" + nm(i) + ") is nonzero");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec l = A.apply_d(A.mul_basis(i, j));
                Vec r = A.mul(A.apply_d(Vec(i)), Vec(j));
                r.add(A.mul(Vec(i), A.apply_d(Vec(j))), sign(A.deg[i]));
                if (!(l == r))
                    rep.fail("Leibniz rule fails on (" + nm(i) + ", " + nm(j) + ")");
            }
    }
    return rep;
}

inline void require_valid(const GradedAlgebra& A)
{
    auto rep = validate(A);
    if (!rep.ok) {
        std::string msg = "invalid algebra '" + A.name + "':";
        for (const auto& v : rep.violations)
            msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
}

inline GradedAlgebra make_algebra(std::string name, std::vector<std::string> names, std::vector<int> degs,
                                  const std::vector<Product>& prods, const std::vector<DiffEntry>& diff = {})
{
    GradedAlgebra A(std::move(name), std::move(names), std::move(degs));
    A.set_unit_rows();
    for (const auto& p : prods) {
        if (p.i == 0 || p.j == 0)
            continue;
        A.add_product(p.i, p.j, p.k, p.c);
    }
    for (const auto& e : diff)
        A.add_diff(e.i, e.k, e.c);
    return A;
}

namespace corpus {

inline GradedAlgebra rationals() { return make_algebra("Q", {"1"}, {0}, {}); }

// Q[x]/x^2
inline GradedAlgebra dual_numbers() { return make_algebra("Lambda", {"1", "x"}, {0, 0}, {}); }

// Q[x]/x^n, all in degree 0
inline GradedAlgebra truncated_poly(int n = 3)
{
    std::vector<std::string> nm{"1"};
    std::vector<int> dg{0};
    std::vector<Product> pr;
    for (int i = 1; i < n; ++i) {
        nm.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
        dg.push_back(0);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j < n; ++j)
            pr.push_back({i, j, i + j, 1});
    return make_algebra("Q[x]/x^" + std::to_string(n), nm, dg, pr);
}

namespace detail {
using M2 = std::array<std::array<int, 2>, 2>;
inline M2 mm(const M2& a, const M2& b)
{
    M2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}
} // namespace detail

// 2x2 matrices on the basis I, E11, E12, E21 (E22 = I - E11).
inline GradedAlgebra matrices2()
{
    using detail::M2;
    std::vector<M2> B{M2{{{1, 0}, {0, 1}}}, M2{{{1, 0}, {0, 0}}}, M2{{{0, 1}, {0, 0}}}, M2{{{0, 0}, {1, 0}}}};
    auto coords = [](const M2& a) {
        int c0 = a[1][1];
        return std::array<int, 4>{c0, a[0][0] - c0, a[0][1], a[1][0]};
    };
    std::vector<Product> pr;
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
            auto c = coords(detail::mm(B[i], B[j]));
            for (int k = 0; k < 4; ++k)
                if (c[k])
                    pr.push_back({i, j, k, c[k]});
        }
    return make_algebra("M2", {"I", "E11", "E12", "E21"}, {0, 0, 0, 0}, pr);
}

// Upper triangular 2x2 matrices on I, E11, E12.
inline GradedAlgebra upper_triangular2()
{
    return make_algebra("T2", {"I", "E11", "E12"}, {0, 0, 0}, {{1, 1, 1, 1}, {1, 2, 2, 1}});
}

// Q[Z/2] = Q[g]/(g^2 - 1)
inline GradedAlgebra group_algebra_z2() { return make_algebra("Q[Z/2]", {"1", "g"}, {0, 0}, {{1, 1, 0, 1}}); }

// Q[y]/y^2 with y in degree d (d odd gives an exterior algebra)
inline GradedAlgebra exterior1(int d = 1)
{
    return make_algebra("Q[y]/y^2 |y|=" + std::to_string(d), {"1", "y"}, {0, d}, {});
}

// Exterior algebra on two generators of degree d (d odd).
inline GradedAlgebra exterior2(int d = 1)
{
    return make_algebra("Ext(y1,y2) |y|=" + std::to_string(d), {"1", "y1", "y2", "y1y2"}, {0, d, d, 2 * d},
                        {{1, 2, 3, 1}, {2, 1, 3, -1}});
}

// Q[z]/z^3 with |z| = 2
inline GradedAlgebra poly_even() { return make_algebra("Q[z]/z^3 |z|=2", {"1", "z", "z^2"}, {0, 2, 4}, {{1, 1, 2, 1}}); }

// de Rham DGA of Q[x]/x^3: basis 1, x, x^2, dx, x dx with d x = dx, d x^2 = 2 x dx.
inline GradedAlgebra de_rham_trunc3()
{
    return make_algebra("Omega(Q[x]/x^3)", {"1", "x", "x^2", "dx", "xdx"}, {0, 0, 0, 1, 1},
                        {{1, 1, 2, 1}, {1, 3, 4, 1}, {3, 1, 4, 1}}, {{1, 3, 1}, {2, 4, 2}});
}

// The ungraded corpus used for acceptance runs.
inline std::vector<GradedAlgebra> ungraded()
{
    return {rationals(), dual_numbers(), truncated_poly(3), matrices2(), upper_triangular2(), group_algebra_z2()};
}

inline std::vector<GradedAlgebra> graded()
{
    return {exterior1(1), exterior1(-1), exterior2(1), poly_even()};
}

inline std::vector<GradedAlgebra> all()
{
    auto v = ungraded();
    for (auto& a : graded())
        v.push_back(std::move(a));
    return v;
}

} // namespace corpus

} // namespace hoch
