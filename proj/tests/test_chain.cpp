#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

TEST_CASE("b and B square to zero and anticommute", "[chain]")
{
    auto algs = corpus::all();
    algs.push_back(corpus::de_rham_trunc3());
    for (const auto& A : algs) {
        INFO(A.name);
        for (const auto& c : chains_upto(A, A.dim() > 3 ? 3 : 4)) {
            ChainVec v(c);
            auto bv = apply_chain(v, [&](const Chain& x) { return b_total(A, x); });
            auto Bv = apply_chain(v, [&](const Chain& x) { return B_op(A, x); });
            CHECK(apply_chain(bv, [&](const Chain& x) { return b_total(A, x); }).empty());
            CHECK(apply_chain(Bv, [&](const Chain& x) { return B_op(A, x); }).empty());
            auto anti = apply_chain(bv, [&](const Chain& x) { return B_op(A, x); });
            anti += apply_chain(Bv, [&](const Chain& x) { return b_total(A, x); });
            CHECK(anti.empty());
        }
    }
}
