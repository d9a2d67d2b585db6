#include "test_support.hpp"

#include <hochschild/bar.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

namespace {

Letter random_letter(testing::Gen& g, const GradedAlgebra& A, int nfac, int max_arity, int force_eps = -1)
{
    for (;;) {
        std::vector<Factor> fs;
        for (int i = 0; i < nfac; ++i) {
            Elem e = g.elem(A, max_arity);
            while (is_unit(e))
                e = g.elem(A, max_arity);
            int eps = force_eps >= 0 ? force_eps : g.uniform(0, 1);
            fs.push_back(Factor{e, eps});
        }
        if (auto l = make_letter(A, fs))
            return *l;
    }
}

} // namespace

TEST_CASE("bar differentials square to zero", "[bar]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(41);
        for (auto kind : {BarKind::untwisted, BarKind::twisted})
            for (int t = 0; t < 25; ++t) {
                BarWord w;
                int nl = g.uniform(1, 2);
                for (int i = 0; i < nl; ++i)
                    w.push_back(random_letter(g, A, g.uniform(1, nl == 1 ? 3 : 2), 2));
                BarElem x;
                x.add(0, w, 1);
                CHECK(is_zero_upto(d_bar(A, d_bar(A, x, kind), kind), 2));
            }
    }
}

TEST_CASE("closed-form action agrees with the A-infinity route", "[bar]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior2(1), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(42);
        auto chains = chains_upto(A, A.dim() > 2 ? 2 : 3);
        int nonzero = 0;
        for (int t = 0; t < 30; ++t) {
            int ne = g.uniform(1, 2), nd = g.uniform(0, 1);
            std::vector<Factor> fs;
            for (int i = 0; i < ne; ++i)
                fs.push_back(random_letter(g, A, 1, 2, 1)[0]);
            for (int i = 0; i < nd; ++i)
                fs.push_back(random_letter(g, A, 1, 2, 0)[0]);
            auto l = make_letter(A, fs);
            if (!l)
                continue;
            for (const auto& x : chains) {
                auto a = act_letter(A, x, *l), b = act_letter_mu(A, x, *l);
                nonzero += a.empty() ? 0 : 1;
                CHECK(equal_upto(a, b));
            }
        }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("module axiom for the twisted bar construction", "[bar]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1)}) {
        INFO(A.name);
        testing::Gen g(43);
        auto chains = chains_upto(A, 2);
        for (int t = 0; t < 12; ++t) {
            BarWord w{random_letter(g, A, g.uniform(1, 3), 1)};
            if (g.uniform(0, 3) == 0)
                w.push_back(random_letter(g, A, 1, 1));
            for (const auto& x : chains)
                CHECK(is_zero_upto(module_axiom_defect(A, x, w, BarKind::twisted, 2)));
        }
    }
}

TEST_CASE("symmetrization into U is a chain map", "[bar]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior1(1), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(44);
        for (int t = 0; t < 25; ++t) {
            BarWord w{random_letter(g, A, g.uniform(1, 3), 2)};
            BarElem x;
            x.add(0, w, 1);
            CHECK(is_zero_upto(symmetrization_defect(A, x)));
        }
    }
}

TEST_CASE("symmetrization normalization is a single inverse factorial", "[bar]")
{
    const auto A = corpus::dual_numbers();
    testing::Gen g(46);
    int rejected = 0;
    for (int t = 0; t < 10; ++t) {
        BarWord w{random_letter(g, A, 2, 2, 1)};
        BarElem x;
        x.add(0, w, 1);
        CHECK(is_zero_upto(symmetrization_defect(A, x, 1)));
        rejected += is_zero_upto(symmetrization_defect(A, x, 2)) ? 0 : 1;
    }
    CHECK(rejected > 0);
}

TEST_CASE("Ybar intertwines ad and delta", "[bar]")
{
    for (const auto& A : {corpus::dual_numbers(), corpus::exterior2(1), corpus::matrices2()}) {
        INFO(A.name);
        testing::Gen g(45);
        for (int t = 0; t < 20; ++t) {
            int n = g.uniform(1, 3);
            SMonomial Y;
            for (int i = 0; i < n; ++i)
                Y.push_back(g.cochain(A, 2, 1));
            Cochain D = g.cochain(A, 2, 2);
            CHECK(ybar_ad_defect(A, D, Y, 0).empty());
            CHECK(ybar_delta_defect(A, Y).empty());
        }
    }
}
