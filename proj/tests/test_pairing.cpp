#include "test_support.hpp"

#include <hochschild/pairing.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

namespace {

ChainOp plain(std::function<ChainVec(const Chain&)> f) { return at_u(std::move(f)); }

std::vector<GradedAlgebra> pairing_algebras()
{
    return {corpus::dual_numbers(), corpus::matrices2(), corpus::truncated_poly(3), corpus::group_algebra_z2(),
            corpus::exterior1(1), corpus::exterior2(1), corpus::poly_even()};
}

int chain_bound(const GradedAlgebra& A) { return A.dim() >= 4 ? 2 : 3; }

} // namespace

TEST_CASE("i_D is a chain map up to δD and composes by cup", "[pairing]")
{
    testing::Gen g(11);
    for (const auto& A : pairing_algebras()) {
        INFO(A.name);
        auto chains = chains_upto(A, chain_bound(A));
        auto b = plain([&](const Chain& c) { return b_op(A, c); });
        for (int t = 0; t < 6; ++t) {
            Cochain D = g.cochain(A, 2), E = g.cochain(A, 2);
            int dD = hdeg_or(A, D), dE = hdeg_or(A, E);
            auto iD = plain([&](const Chain& c) { return iota(A, D, c); });
            auto iE = plain([&](const Chain& c) { return iota(A, E, c); });
            Cochain dlt = delta(A, D);
            CHECK(ops_equal(op_comm(b, 1, iD, dD), plain([&](const Chain& c) { return iota(A, dlt, c); }), chains));
            Cochain ed = cup(A, E, D);
            auto rhs = plain([&](const Chain& c) { return sign(dD * dE) * iota(A, ed, c); });
            CHECK(ops_equal(op_compose(iD, iE), rhs, chains));
        }
    }
}

TEST_CASE("L identities and the b = -L_m' anchor", "[pairing]")
{
    testing::Gen g(12);
    for (const auto& A : pairing_algebras()) {
        INFO(A.name);
        auto chains = chains_upto(A, chain_bound(A));
        auto b = plain([&](const Chain& c) { return b_op(A, c); });
        auto B = plain([&](const Chain& c) { return B_op(A, c); });
        Cochain m = full_multiplication(A);
        CHECK(ops_equal(b, plain([&](const Chain& c) { return Scalar(-1) * lie(A, m, c); }), chains));
        for (int t = 0; t < 6; ++t) {
            Cochain D = g.cochain(A, 2), E = g.cochain(A, 2);
            int pD = (hdeg_or(A, D) + 1) & 1, pE = (hdeg_or(A, E) + 1) & 1;
            auto LD = plain([&](const Chain& c) { return lie(A, D, c); });
            auto LE = plain([&](const Chain& c) { return lie(A, E, c); });
            Cochain br = gbracket(A, D, E);
            CHECK(ops_equal(op_comm(LD, pD, LE, pE), plain([&](const Chain& c) { return lie(A, br, c); }), chains));
            Cochain dlt = delta(A, D);
            auto lhs = op_sum({{op_comm(b, 1, LD, pD), 1}, {plain([&](const Chain& c) { return lie(A, dlt, c); }), 1}});
            CHECK(ops_equal(lhs, plain([](const Chain&) { return ChainVec{}; }), chains));
            CHECK(ops_equal(op_comm(LD, pD, B, 1), plain([](const Chain&) { return ChainVec{}; }), chains));
        }
    }
}

TEST_CASE("Cartan identity with the factor u", "[pairing]")
{
    testing::Gen g(13);
    for (const auto& A : pairing_algebras()) {
        INFO(A.name);
        auto chains = chains_upto(A, chain_bound(A));
        auto d = cyclic_d_op(A);
        for (int t = 0; t < 6; ++t) {
            Cochain D = g.cochain(A, 2);
            int dD = hdeg_or(A, D);
            Cochain dlt = delta(A, D);
            auto lhs = op_sum({{op_comm(d, 1, iota_u(A, D), dD), 1}, {iota_u(A, dlt), -1}});
            auto rhs = at_u([&](const Chain& c) { return lie(A, D, c); }, 1);
            CHECK(ops_equal(lhs, rhs, chains));
        }
    }
}

TEST_CASE("GDT homotopy identity", "[pairing]")
{
    testing::Gen g(14);
    for (const auto& A : pairing_algebras()) {
        INFO(A.name);
        auto chains = chains_upto(A, chain_bound(A));
        auto d = cyclic_d_op(A);
        for (int t = 0; t < 5; ++t) {
            Cochain D = g.cochain(A, 2), E = g.cochain(A, 2);
            int dD = hdeg_or(A, D), dE = hdeg_or(A, E);
            auto T = [&](Cochain X, Cochain Y) {
                return at_u([&A, X, Y](const Chain& c) { return X.empty() || Y.empty() ? ChainVec{} : tee(A, X, {Y}, c); });
            };
            auto lhs = op_sum({{op_comm(d, 1, T(D, E), (dD + dE) & 1), 1},
                               {T(delta(A, D), E), -1},
                               {T(D, delta(A, E)), -sign(dD)}});
            auto LD = at_u([&](const Chain& c) { return lie(A, D, c); });
            Cochain br = gbracket(A, D, E);
            auto rhs = op_sum({{op_comm(LD, (dD + 1) & 1, iota_u(A, E), dE), 1}, {iota_u(A, br), -sign(dD + 1)}});
            CHECK(ops_equal(lhs, rhs, chains));
        }
    }
}

TEST_CASE("Y-operators reduce to i and S on singletons", "[pairing]")
{
    testing::Gen g(15);
    for (const auto& A : pairing_algebras()) {
        auto chains = chains_upto(A, chain_bound(A));
        for (int t = 0; t < 4; ++t) {
            Cochain D = g.cochain(A, 2);
            for (const auto& c : chains) {
                CHECK(iota_Y(A, {D}, c) == iota(A, D, c));
                CHECK(ess_Y(A, {D}, c) == ess(A, D, c));
            }
        }
    }
}
