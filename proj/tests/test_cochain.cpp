#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

namespace {

// Λ = ℚ[x]/x², φ: x ↦ 1, ψ: x ↦ x.
const Cochain phi = elem({1}, 0);
const Cochain psi = elem({1}, 1);

std::vector<GradedAlgebra> algebras()
{
    return {corpus::dual_numbers(), corpus::matrices2(), corpus::truncated_poly(3), corpus::exterior2(1),
            corpus::poly_even(), corpus::de_rham_trunc3()};
}

} // namespace

TEST_CASE("hand examples on the dual numbers", "[cochain]")
{
    const auto A = corpus::dual_numbers();
    CHECK(evaluate(cup(A, phi, phi), {1, 1}) == Vec(0, -1));
    CHECK(evaluate(cup(A, psi, psi), {1, 1}).empty());
    CHECK(cup(A, phi, Cochain()).empty());
    CHECK(evaluate(circ(A, phi, psi), {1}) == Vec(0, 1));
    CHECK(circ(A, psi, phi).empty());
    CHECK(evaluate(gbracket(A, phi, psi), {1}) == Vec(0, 1));
    CHECK(delta(A, Cochain(unit_elem())).empty());
    CHECK(evaluate(delta(A, psi), {1, 1}).empty());
    CHECK(brace(A, phi, {}) == phi);
    CHECK(lift(A, phi, {}) == phi);
    CHECK(lift(A, phi, {psi}) == phi);

    const auto M = corpus::matrices2();
    // basis I, E11, E12, E21
    CHECK(evaluate(delta(M, elem({}, 1)), {2}) == Vec(2, 1));
}

TEST_CASE("delta squares to zero", "[cochain]")
{
    for (const auto& A : algebras()) {
        INFO(A.name);
        testing::Gen g(11);
        for (int t = 0; t < 100; ++t)
            CHECK(delta(A, delta(A, g.cochain(A, 3))).empty());
    }
}

TEST_CASE("graded Leibniz rules and Jacobi", "[cochain]")
{
    for (const auto& A : algebras()) {
        INFO(A.name);
        testing::Gen g(12);
        for (int t = 0; t < 100; ++t) {
            Cochain D = g.cochain(A, 2), E = g.cochain(A, 2), F = g.cochain(A, 2);
            const int d = hdeg_or(A, D), e = hdeg_or(A, E), f = hdeg_or(A, F);

            Cochain lc = delta(A, cup(A, D, E));
            lc.add(cup(A, delta(A, D), E), -1);
            lc.add(cup(A, D, delta(A, E)), -sign(d));
            CHECK(lc.empty());

            Cochain lb = delta(A, gbracket(A, D, E));
            lb.add(gbracket(A, delta(A, D), E), -1);
            lb.add(gbracket(A, D, delta(A, E)), -sign(d + 1));
            CHECK(lb.empty());

            Cochain jac = gbracket(A, D, gbracket(A, E, F));
            jac.add(gbracket(A, gbracket(A, D, E), F), -1);
            jac.add(gbracket(A, E, gbracket(A, D, F)), -sign((d + 1) * (e + 1)));
            CHECK(jac.empty());
            (void)f;
        }
    }
}

TEST_CASE("brace composition identity", "[cochain]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2(), corpus::exterior2(1)}) {
        INFO(A.name);
        testing::Gen g(13);
        int nonzero = 0;
        for (int t = 0; t < 100; ++t) {
            Cochain D = g.cochain(A, 3, 2);
            std::vector<Cochain> Es, Fs;
            int k = g.uniform(1, 2), l = g.uniform(1, 2);
            for (int i = 0; i < k; ++i)
                Es.push_back(g.cochain(A, 2, 1));
            for (int i = 0; i < l; ++i)
                Fs.push_back(g.cochain(A, 1, 1));
            Cochain lhs = brace(A, brace(A, D, Es), Fs);
            nonzero += lhs.empty() ? 0 : 1;
            CHECK(lhs == brace_composition_rhs(A, D, Es, Fs));
        }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("lift is a morphism of DGAs", "[cochain]")
{
    {
        // exhaustive on Λ up to arity 2
        const auto A = corpus::dual_numbers();
        std::vector<Cochain> all;
        for (int a = 0; a <= 2; ++a)
            for (const auto& e : elementary_cochains(A, a))
                all.push_back(Cochain(e));
        std::vector<std::pair<Cochain, Cochain>> de;
        for (const auto& D : all)
            for (const auto& E : all)
                de.push_back({D, E});
        std::vector<std::vector<Cochain>> args{{}};
        for (const auto& X : all) {
            args.push_back({X});
            for (const auto& Y : all)
                args.push_back({X, Y});
        }
        auto rep = check_etoee(A, de, args);
        CHECK(rep.checked == static_cast<int>(de.size() * args.size()));
        CHECK(rep.ok());
    }
    for (const auto& A : algebras()) {
        INFO(A.name);
        testing::Gen g(14);
        std::vector<std::pair<Cochain, Cochain>> de;
        std::vector<std::vector<Cochain>> args;
        for (int i = 0; i < 10; ++i)
            de.push_back({g.cochain(A, 2, 2), g.cochain(A, 2, 2)});
        for (int i = 0; i < 10; ++i) {
            std::vector<Cochain> xs;
            for (int j = g.uniform(0, 3); j > 0; --j)
                xs.push_back(g.cochain(A, 1, 2));
            args.push_back(xs);
        }
        CHECK(check_etoee(A, de, args).ok());
    }
}
