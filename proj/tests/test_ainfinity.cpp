#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

namespace {

CCSeries as_series(const CCChain& v, int u = 0)
{
    CCSeries s;
    s.add(u, v);
    return s;
}

} // namespace

TEST_CASE("A-infinity relations up to arity 4", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1), corpus::truncated_poly(3)}) {
        INFO(A.name);
        testing::Gen g(21);
        for (int n = 1; n <= 4; ++n) {
            int trials = n <= 2 ? 40 : (n == 3 ? 15 : 4);
            for (int t = 0; t < trials; ++t) {
                std::vector<CCWord> ws;
                for (int i = 0; i < n; ++i)
                    ws.push_back(testing::ccword(g, A, n <= 2 ? 2 : 1, 1));
                CHECK(is_zero_upto(ainf_relation(A, ws, 2)));
            }
        }
    }
}

TEST_CASE("A-infinity relations on a DGA", "[ainfinity]")
{
    auto A = corpus::de_rham_trunc3();
    testing::Gen g(22);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 12; ++t) {
            std::vector<CCWord> ws;
            for (int i = 0; i < n; ++i)
                ws.push_back(testing::ccword(g, A, 1, 1));
            CHECK(is_zero_upto(ainf_relation(A, ws, 2)));
        }
}

TEST_CASE("A-infinity relations on M2", "[ainfinity]")
{
    const auto A = corpus::matrices2();
    testing::Gen g(23);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < (n == 3 ? 3 : 8); ++t) {
            std::vector<CCWord> ws;
            for (int i = 0; i < n; ++i)
                ws.push_back(testing::ccword(g, A, n <= 2 ? 2 : 1, 1));
            CHECK(is_zero_upto(ainf_relation(A, ws, 2)));
        }
}

TEST_CASE("module relations for mu", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(24);
        const bool big = A.dim() > 2;
        for (int n = 1; n <= (big ? 3 : 4); ++n)
            for (int t = 0; t < (n <= 2 ? 10 : 3); ++t) {
                Chain x = g.chain(A, n <= 2 ? 2 : 1);
                std::vector<CCWord> cs;
                for (int j = 1; j < n; ++j)
                    cs.push_back(testing::ccword(g, A, n <= 2 ? 2 : 1, 1));
                CHECK(is_zero_upto(module_relation(A, x, cs, 2), 2));
            }
    }
}

TEST_CASE("m_2 bullets", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2(), corpus::exterior2(1)}) {
        INFO(A.name);
        auto elems = elementary_cochains(A, 0);
        for (auto e : elementary_cochains(A, 1))
            elems.push_back(e);
        for (const auto& D : elems)
            for (const auto& E : elems) {
                int dD = edeg(A, D), dE = edeg(A, E);
                auto m2 = m_words(A, {{D}, {E}});
                CCChain cupw;
                for (const auto& [e, c] : cup(A, Cochain(D), Cochain(E)))
                    cupw.add(CCWord{e}, c);
                CHECK(sign(dD) * m2.coeff(0) == cupw);
                CCChain u1;
                if (!is_unit(D) && !is_unit(E))
                    u1.add(CCWord{unit_elem(), D, E}, 1);
                CHECK(m2.coeff(1) == u1);

                if (is_unit(D) || is_unit(E))
                    continue;
                Cochain br = gbracket(A, Cochain(D), Cochain(E));
                CCSeries lhs = m_words(A, {{unit_elem(), D}, {unit_elem(), E}});
                lhs.add(m_words(A, {{unit_elem(), E}, {unit_elem(), D}}), sign(dD * dE));
                CCChain rhs;
                for (const auto& [e, c] : br)
                    if (!is_unit(e))
                        rhs.add(CCWord{unit_elem(), e}, c * sign(dD));
                CHECK(equal_upto(lhs, as_series(rhs)));

                CCSeries lhs2 = m_words(A, {{D}, {unit_elem(), E}});
                lhs2.add(m_words(A, {{unit_elem(), E}, {D}}), sign((dD + 1) * dE));
                CCChain rhs2;
                for (const auto& [e, c] : br)
                    rhs2.add(CCWord{e}, c * sign(dD + 1));
                CHECK(equal_upto(lhs2, as_series(rhs2)));
            }
    }
}

TEST_CASE("mu_2 reproduces the pairings", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2(), corpus::exterior1(1), corpus::poly_even()}) {
        INFO(A.name);
        auto chains = chains_upto(A, A.dim() > 3 ? 2 : 3);
        testing::Gen g(23);
        for (int t = 0; t < 8; ++t) {
            Elem D = g.elem(A, 2);
            if (is_unit(D))
                continue;
            int dD = edeg(A, D);
            for (const auto& a : chains) {
                int da = chain_deg(A, a);
                CyclicChain exp(0, iota(A, Cochain(D), a));
                exp.add(1, ess(A, Cochain(D), a));
                CyclicChain got = mu_words(A, a, {{D}});
                CyclicChain scaled;
                scaled.add(got, sign(da * dD + da));
                CHECK(equal_upto(scaled, exp));
                CyclicChain got2 = mu_words(A, a, {{unit_elem(), D}});
                CyclicChain exp2(0, lie(A, Cochain(D), a));
                CyclicChain scaled2;
                scaled2.add(got2, sign(da * dD));
                CHECK(equal_upto(scaled2, exp2));
            }
        }
    }
}

TEST_CASE("mu_2 on commutative algebras is the shuffle product", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::truncated_poly(3), corpus::exterior1(1), corpus::exterior2(1),
                          corpus::poly_even()}) {
        INFO(A.name);
        auto chains = chains_upto(A, 2);
        for (const auto& x : chains)
            for (const auto& y : chains) {
                CyclicChain got;
                got.add(mu_words(A, x, {to_ccword(y)}), sign(chain_deg(A, x)));
                CHECK(equal_upto(got, shuffle_u(A, x, y)));
            }
    }
}

TEST_CASE("shuffle product is compatible with the cyclic differential", "[chain]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1), corpus::truncated_poly(3)}) {
        INFO(A.name);
        auto chains = chains_upto(A, 2);
        for (const auto& x : chains)
            for (const auto& y : chains) {
                auto lhs = cyclic_d(A, shuffle_u(A, x, y));
                CyclicChain rhs;
                for (const auto& [u, v] : cyclic_d(A, single(x)).at)
                    for (const auto& [c, k] : v)
                        rhs.add(shuffle_u(A, c, y), k, u);
                for (const auto& [u, v] : cyclic_d(A, single(y)).at)
                    for (const auto& [c, k] : v)
                        rhs.add(shuffle_u(A, x, c), k * sign(chain_deg(A, x)), u);
                CHECK(equal_upto(lhs, rhs, 1));
            }
    }
}

TEST_CASE("products with a leading-unit argument vanish for k >= 3", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(24);
        for (int t = 0; t < 20; ++t) {
            int k = g.uniform(3, 4);
            std::vector<CCWord> ws;
            for (int i = 0; i < k; ++i)
                ws.push_back(testing::ccword(g, A, k == 3 ? 2 : 1, 1));
            int i = g.uniform(0, k - 2);
            ws[i] = testing::ccword(g, A, k == 3 ? 2 : 1, 1, true);
            CHECK(m_words(A, ws).empty());
            Chain x = g.chain(A, 2);
            std::vector<CCWord> cs(ws.begin() + 1, ws.end());
            if (i > 0)
                CHECK(mu_words(A, x, cs).empty());
        }
    }
}

TEST_CASE("bullet products of leading-unit words", "[ainfinity]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2(), corpus::exterior1(1)}) {
        INFO(A.name);
        testing::Gen g(25);
        for (int N = 2; N <= 3; ++N)
            for (int t = 0; t < 12; ++t) {
                std::vector<Cochain> Ds;
                CCSeries X;
                for (int i = 0; i < N; ++i) {
                    Elem e = g.elem(A, 1);
                    while (is_unit(e))
                        e = g.elem(A, 1);
                    Ds.push_back(Cochain(e));
                    CCSeries f = cc_single({unit_elem(), e});
                    X = i == 0 ? f : bullet(A, X, f);
                }
                CHECK(equal_upto(X, bullet_product_formula(A, Ds)));
            }
    }
}
