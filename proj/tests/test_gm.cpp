#include "test_support.hpp"

#include <hochschild/gm.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

TEST_CASE("polynomial scalars", "[family]")
{
    auto s = Poly::monomial(1, 0), t = Poly::monomial(0, 1);
    Poly f = s * s * t + Poly(3);
    CHECK(f.eval(Point{2, 5}) == 23);
    CHECK(f.derivative(0) == Poly::monomial(1, 1, 2));
    CHECK(f.derivative(1) == s * s);
    CHECK(Poly(3).derivative(0).is_zero());
    CHECK((f - f).is_zero());
}

TEST_CASE("family validation and velocities", "[family]")
{
    for (const auto& F : {families::xx_minus_t(), families::cubic_tx(), families::cubic_st(), families::constant_dual()}) {
        INFO(F.name);
        CHECK(validate_family(F).ok());
        for (const Point& p : {Point{0, 0}, Point{2, Scalar(-1, 3)}}) {
            auto A = F.at(p);
            CHECK(hoch::validate(A).ok);
            for (int v = 0; v < F.nparams(); ++v)
                CHECK(delta(A, F.velocity(v, p)).empty());
        }
    }
    CHECK(families::xx_minus_t().velocity(0, Point{7, 0}) == elem({1, 1}, 0));
    CHECK(families::constant_dual().velocity(0, Point{1, 0}).empty());
    // ∂/∂s of x³ = s·x + t: ṁ_s(x, x²) = ṁ_s(x², x) = x, ṁ_s(x², x²) = x²
    Cochain ms = elem({1, 2}, 1) + elem({2, 1}, 1) + elem({2, 2}, 2);
    CHECK(families::cubic_st().velocity(0, Point{0, 0}) == ms);

    auto bad = families::cubic_tx();
    bad.products[{1, 1, 2}] = Poly(2);
    bad.products[{2, 1, 1}] = Poly::monomial(2, 0);
    CHECK_FALSE(validate_family(bad).ok());
}

TEST_CASE("nabla on simple sections", "[gm]")
{
    const auto F = families::xx_minus_t();
    const Point p{Scalar(5), 0};
    CHECK(nabla_at(F, 0, constant_section(single(Chain{0})), p).empty());

    // ∇(1⊗x⊗x) = σ u^{-1} (ṁ(x,x) + u S_ṁ(1⊗x⊗x))
    auto nx = nabla_at(F, 0, constant_section(single(Chain{0, 1, 1})), p);
    CHECK(nx.coeff(-1) == ChainVec(Chain{0}, -1));

    // a constant family has ∇ = ∂
    const auto C = families::constant_dual();
    auto t = Poly::monomial(1, 0);
    FamilySection s = scale(t * t, constant_section(single(Chain{1, 1})));
    CHECK(equal_upto(nabla_at(C, 0, s, Point{3, 0}), single(Chain{1, 1}, 0, 6)));
}

TEST_CASE("nabla satisfies the Leibniz rule over polynomial scalars", "[gm]")
{
    testing::Gen g(31);
    for (const auto& F : {families::xx_minus_t(), families::cubic_tx()}) {
        INFO(F.name);
        const auto A = F.at(Point{0, 0});
        for (int trial = 0; trial < 20; ++trial) {
            Poly f = Poly::monomial(g.uniform(0, 3), 0, g.small_rational()) + Poly(g.small_rational());
            FamilySection s = constant_section(single(g.chain(A, 3), g.uniform(0, 1)));
            s[Mono{1, 0}] = single(g.chain(A, 3));
            const Point p{g.small_rational(), 0};
            CyclicChain lhs = nabla_at(F, 0, scale(f, s), p);
            CyclicChain rhs = section_at(s, p);
            rhs *= f.derivative(0).eval(p);
            rhs.add(nabla_at(F, 0, s, p), f.eval(p));
            CHECK(equal_upto(lhs, rhs));
        }
    }
}

TEST_CASE("Gauss-Manin connection commutes with the cyclic differential", "[gm]")
{
    for (const auto& F : {families::xx_minus_t(), families::cubic_tx(), families::constant_dual()})
        for (const Point& p : {Point{0, 0}, Point{3, 0}, Point{Scalar(-1, 2), 0}}) {
            INFO(F.name << " at " << F.point_str(p));
            auto r = check_gm_chain_map(F, 0, p, 3, -1, 2, -1);
            CHECK(r.checked > 0);
            CHECK(r.ok());
        }
    // σ is not a convention-free sign: the opposite choice breaks the chain map
    CHECK_FALSE(check_gm_chain_map(families::xx_minus_t(), 0, Point{1, 0}, 3, -1, 2, +1).ok());
    CHECK_FALSE(check_gm_chain_map(families::cubic_tx(), 0, Point{1, 0}, 2, -1, 2, +1).ok());
}

TEST_CASE("curvature vanishes on homology", "[gm]")
{
    const auto F = families::cubic_st();
    auto rep = curvature_on_homology(F, {Point{0, 0}, Point{1, 2}, Point{Scalar(-1, 2), 3}}, 1, 1, 6);
    CHECK(rep.certificates.size() > 0);
    CHECK(rep.nonzero() > 0);
    CHECK(rep.failures() == 0);

    // a one-parameter family viewed over a plane has zero curvature
    auto G = families::cubic_tx();
    G.params = {"t", "s"};
    for (const auto& z : cyclic_cycles(G.at(Point{1, 0}), 1, 1))
        CHECK(curvature_at(G, Point{1, 0}, z).empty());
}

TEST_CASE("cyclic cycles and primitives", "[homology]")
{
    const auto A = corpus::dual_numbers();
    for (const auto& z : cyclic_cycles(A, 1, 1))
        CHECK(cyclic_d(A, z).empty());
    auto y = cyclic_primitive(A, cyclic_d(A, single(Chain{0, 1, 1})), 2, 0, 1, 4);
    REQUIRE(y);
    CHECK(equal_upto(cyclic_d(A, *y), cyclic_d(A, single(Chain{0, 1, 1}))));
    CHECK_FALSE(cyclic_primitive(A, single(Chain{0}), 1, 0, 2, 4));
}
