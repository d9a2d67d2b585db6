#include <hochschild/io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hoch;

namespace {

using Row = std::vector<std::pair<int, Scalar>>;

AlgebraDoc parse(const char* src) { return algebra_from_json(json::parse(src), "test"); }

bool same_products(const GradedAlgebra& A, const GradedAlgebra& B)
{
    if (A.dim() != B.dim())
        return false;
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (!(A.prod(i, j) == B.prod(i, j)))
                return false;
    return true;
}

} // namespace

TEST_CASE("dual numbers with named cochains", "[io]")
{
    auto d = parse(R"({"name": "Lambda", "basis": ["1", "x"], "degrees": [0, 0],
        "cochains": {"phi": {"arity": 1, "values": [[[1], ["1", "0"]]]},
                     "half": {"arity": 2, "map_degree": 0, "values": [[[1, 1], ["0", "1/2"]]]}}})");
    CHECK(same_products(d.algebra, corpus::dual_numbers()));
    CHECK(d.cochains.at("phi") == Cochain(Elem{{1}, 0}));
    CHECK(d.cochains.at("half") == Cochain(Elem{{1, 1}, 1}, Scalar(1, 2)));
    CHECK(validate(d.algebra).ok);
}

TEST_CASE("unit_index moves the unit to slot 0", "[io]")
{
    auto d = parse(R"({"basis": ["E11", "E12", "I"], "degrees": [0, 0, 0], "unit_index": 2,
        "products": [[0, 0, 0, 1], [0, 1, 1, 1]],
        "cochains": {"D": {"arity": 1, "values": [[[1], [0, 1, 0]]]}}})");
    CHECK(d.algebra.names == std::vector<std::string>{"I", "E12", "E11"});
    // E11 E11 = E11, E11 E12 = E12
    CHECK(d.algebra.prod(2, 2) == Row{{2, Scalar(1)}});
    CHECK(d.algebra.prod(2, 1) == Row{{1, Scalar(1)}});
    CHECK(d.algebra.prod(1, 2).empty());
    CHECK(validate(d.algebra).ok);
    CHECK(d.cochains.at("D") == Cochain(Elem{{1}, 1}));
}

TEST_CASE("a listed unit row overrides the unit law", "[io]")
{
    auto d = parse(R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[0, 1, 1, 2]]})");
    auto rep = validate(d.algebra);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("families parse with polynomial coefficients", "[io]")
{
    auto F = family_from_json(json::parse(R"({"basis": ["1", "x", "x^2"], "degrees": [0, 0, 0],
        "parameters": ["s", "t"],
        "products": [[1, 1, 2, 1], [1, 2, 1, [[1, 0, 1]]], [1, 2, 0, [[0, 1, 1]]], [2, 1, 1, [[1, 0, 1]]],
                     [2, 1, 0, [[0, 1, 1]]], [2, 2, 2, [[1, 0, 1]]], [2, 2, 1, [[0, 1, 1]]]]})"));
    const auto G = families::cubic_st();
    CHECK(F.products == G.products);
    CHECK(validate_family(F).ok());

    auto H = family_from_json(json::parse(R"({"basis": ["1", "x"], "degrees": [0, 0], "parameters": ["t"],
        "products": [[1, 1, 0, ["0", "1"]]]})"));
    CHECK(H.products == families::xx_minus_t().products);
}

TEST_CASE("malformed input is rejected with a location", "[io]")
{
    const char* bad[] = {
        R"([1, 2])",
        R"({"basis": ["1", "x"]})",
        R"({"basis": ["1", "x"], "degrees": [0]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[1, 1, 0, 0.5]]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[1, 1, 0, "1/0"]]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[1, 1, 0, "one"]]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[1, 5, 0, 1]]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "products": [[1, 1, 0]]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "unit_index": 3})",
        R"({"basis": ["1", "x"], "degrees": [0, 0], "parameters": ["t"]})",
        R"({"basis": ["1", "x"], "degrees": [0, 0],
            "cochains": {"D": {"arity": 2, "values": [[[1], [0, 1]]]}}})",
        R"({"basis": ["1", "x"], "degrees": [0, 0],
            "cochains": {"D": {"arity": 1, "values": [[[0], [0, 1]]]}}})",
        R"({"basis": ["1", "x"], "degrees": [0, 0],
            "cochains": {"D": {"arity": 1, "values": [[[1], [0, 1, 0]]]}}})",
        R"({"basis": ["1", "e"], "degrees": [0, 1],
            "cochains": {"D": {"arity": 1, "map_degree": 0, "values": [[[1], [1, 0]]]}}})",
        R"({"basis": ["1", "e"], "degrees": [0, 1],
            "cochains": {"D": {"arity": 1, "values": [[[1], [1, 1]]]}}})",
    };
    for (const char* src : bad) {
        INFO(src);
        CHECK_THROWS_AS(parse(src), ParseError);
    }
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"basis": ["1"], "degrees": [0]})")), ParseError);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"basis": ["1", "x"], "degrees": [0, 0],
        "parameters": ["t"], "products": [[0, 1, 1, 1]]})")),
                    ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/algebra.json"), ParseError);
}

TEST_CASE("cochain JSON round trip", "[io]")
{
    const auto A = corpus::matrices2();
    Cochain D;
    D.add(Elem{{1, 2}, 2}, Scalar(3, 4));
    D.add(Elem{{1, 2}, 0}, -1);
    D.add(Elem{{3, 3}, 1}, 5);
    const json j = cochain_to_json(A, D);
    CHECK(j["arity"] == 2);
    CHECK(j["map_degree"] == 0);
    io::Header h{A.name, A.names, A.deg, {0, 1, 2, 3}};
    CHECK(io::cochain(A, h, j, "rt") == D);
}
