#include "test_support.hpp"

#include <hochschild/trees.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

TEST_CASE("tree parsing and printing", "[trees]")
{
    std::vector<std::string> names;
    auto t = parse_tree("m(D, E(F))", names);
    CHECK(names == std::vector<std::string>{"D", "E", "F"});
    CHECK(tree_to_string(t, names) == "m(D, E(F))");
    CHECK(tree_size(t) == 4);
    CHECK_THROWS(parse_tree("m(D)", names));
    CHECK_THROWS(parse_tree("m", names));
    CHECK_THROWS(parse_tree("D(E", names));
}

TEST_CASE("tree operations are nested braces", "[trees]")
{
    auto A = corpus::dual_numbers();
    Cochain phi = elem({1}, 0), psi = elem({1}, 1);
    std::vector<std::string> names;
    auto t1 = parse_tree("D(E)", names);
    CHECK(tree_op(A, t1, {phi, psi}) == circ(A, phi, psi));
    names.clear();
    auto t2 = parse_tree("m(D, E)", names);
    CHECK(tree_op(A, t2, {phi, psi}) == sign(hdeg_or(A, phi)) * cup(A, phi, psi));
}

TEST_CASE("tree boundary formula", "[trees]")
{
    const char* shapes[] = {"D", "D(E)", "D(E, F)", "D(E(F))", "m(D, E)", "D(m(E, F))", "m(D(E), F)", "D(E, F, G)"};
    for (const auto& A : {corpus::dual_numbers(), corpus::matrices2(), corpus::exterior2(1), corpus::truncated_poly(3)}) {
        INFO(A.name);
        testing::Gen g(31);
        int nontrivial = 0;
        for (const char* s : shapes) {
            INFO(s);
            std::vector<std::string> names;
            auto T = parse_tree(s, names);
            for (int t = 0; t < 4; ++t) {
                std::vector<Cochain> labels;
                for (std::size_t i = 0; i < names.size(); ++i)
                    labels.push_back(g.cochain(A, A.dim() > 3 ? 2 : 3));
                CHECK(tree_boundary_defect(A, T, labels).empty());
                std::vector<int> lp;
                for (const auto& D : labels)
                    lp.push_back(lie_parity(A, D));
                Cochain bsum;
                for (const auto& bt : tree_boundary(T, lp))
                    bsum.add(tree_op(A, bt.tree, labels), sign(bt.parity));
                if (!bsum.empty())
                    ++nontrivial;
            }
        }
        CHECK(nontrivial > 5);
    }
}
