#include "test_support.hpp"

#include <hochschild/homology.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

TEST_CASE("rank and kernel of small matrices", "[homology]")
{
    ExactMatrix Z(3, 3);
    CHECK(rank(Z) == 0);
    CHECK(kernel_basis(Z).size() == 3);
    CHECK(rank(ExactMatrix::identity(4)) == 0 + 4);
    CHECK(kernel_basis(ExactMatrix::identity(4)).empty());

    // b : C_2 -> C_1 on Λ, columns 1⊗x⊗x, x⊗x⊗x, rows 1⊗x, x⊗x
    auto M = ExactMatrix::dense({{0, 0}, {2, 0}});
    CHECK(rank(M) == 1);
    auto K = kernel_basis(M);
    REQUIRE(K.size() == 1);
    CHECK(K[0] == Vec(1, 1));

    CHECK(is_boundary(M, Vec(1, 2)) == Vec(0, 1));
    Vec residual;
    CHECK_FALSE(is_boundary(M, Vec(0, 1), &residual));
    CHECK_FALSE(residual.empty());
    CHECK(is_boundary(M, Vec()) == Vec());
}

TEST_CASE("rank-nullity on random matrices", "[homology]")
{
    testing::Gen g(21);
    for (int t = 0; t < 60; ++t) {
        int r = g.uniform(1, 7), c = g.uniform(1, 7);
        std::vector<std::vector<Scalar>> m(r, std::vector<Scalar>(c));
        for (auto& row : m)
            for (auto& x : row)
                x = g.uniform(0, 2) ? Scalar(0) : g.small_rational();
        auto M = ExactMatrix::dense(m);
        auto e = eliminate(M);
        CHECK(e.red.rank() + static_cast<int>(e.kernel.size()) == c);
        for (const auto& k : e.kernel) {
            Vec img;
            for (const auto& [j, x] : k)
                img.add(M.columns[j], x);
            CHECK(img.empty());
        }
        // transposed rank agrees
        std::vector<std::vector<Scalar>> mt(c, std::vector<Scalar>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                mt[j][i] = m[i][j];
        CHECK(rank(ExactMatrix::dense(mt)) == e.red.rank());
    }
}

TEST_CASE("Hochschild homology of the corpus", "[homology]")
{
    using V = std::vector<int>;
    CHECK(hh_dims(corpus::dual_numbers(), 3) == V{2, 1, 1, 1});
    CHECK(hh_dims(corpus::dual_numbers(), 3, false, 200000) == V{2, 1, 1, 1});
    CHECK(hh_dims(corpus::matrices2(), 2) == V{1, 0, 0});
    CHECK(hh_dims(corpus::matrices2(), 2, false, 200000) == V{1, 0, 0});
    CHECK(hh_dims(corpus::rationals(), 2) == V{1, 0, 0});
    CHECK(hh_dims(corpus::rationals(), 2, false) == V{1, 0, 0});
    // ℚ[Z/2] is semisimple: HH_0 = 2, higher vanish
    CHECK(hh_dims(corpus::group_algebra_z2(), 2) == V{2, 0, 0});
    CHECK(hh_dims(corpus::group_algebra_z2(), 2, false) == V{2, 0, 0});
}

TEST_CASE("homology dims do not depend on the basis order", "[homology]")
{
    auto W = hochschild_window(corpus::truncated_poly(3), 3, true);
    auto base = homology_dims(W);
    // reverse the basis of every slot
    for (auto& m : W.d) {
        ExactMatrix R(m.rows, m.cols);
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [i, c] : m.columns[j])
                R.columns[m.cols - 1 - j].add(m.rows - 1 - i, c);
        m = std::move(R);
    }
    CHECK(homology_dims(W) == base);
    CHECK(base == hh_dims(corpus::truncated_poly(3), 2, false, 200000));
}
