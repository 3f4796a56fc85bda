#include <catch2/catch.hpp>

#include "ffdyn/textio.hpp"
#include "helpers.hpp"

using namespace ffdyn;

TEST_CASE("polynomial rendering", "[textio]") {
    FieldCtx f3(3, 1);
    CHECK(render_poly(f3, poly_from_ints(f3, {2, 0, 0, 1, 1})) == "y^4+y^3+2");
    CHECK(render_poly(f3, poly_from_ints(f3, {2, 1})) == "y+2");
    CHECK(render_poly(f3, poly_from_ints(f3, {0, 2})) == "2*y");
    CHECK(render_poly(f3, poly_zero()) == "0");
    CHECK(render_poly(f3, poly_one(f3)) == "1");
}

TEST_CASE("polynomial parsing", "[textio]") {
    FieldCtx f3(3, 1);
    CHECK(parse_poly(f3, "y^4+y^3+2") == poly_from_ints(f3, {2, 0, 0, 1, 1}));
    CHECK(parse_poly(f3, "2+y^3+y^4") == poly_from_ints(f3, {2, 0, 0, 1, 1}));  // any order
    CHECK(parse_poly(f3, "2*y^2+1") == poly_from_ints(f3, {1, 0, 2}));
    CHECK(parse_poly(f3, "y") == poly_from_ints(f3, {0, 1}));
    CHECK(parse_poly(f3, "0") == poly_zero());
    CHECK_THROWS_AS(parse_poly(f3, "y+y"), std::invalid_argument);       // duplicate degree
    CHECK_THROWS_AS(parse_poly(f3, "3*y"), std::invalid_argument);       // coefficient >= q
    CHECK_THROWS_AS(parse_poly(f3, "y^2+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f3, "zebra"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f3, ""), std::invalid_argument);
}

TEST_CASE("parse/render round trip on random polynomials", "[textio][property]") {
    for (std::uint64_t q : {2ull, 3ull, 5ull, 9ull}) {
        auto [p, d] = factor_prime_power(q);
        FieldCtx F(p, d);
        detail::SplitMix64 rng(q * 3 + 1);
        for (int t = 0; t < 100; ++t) {
            Poly a = test_helpers::random_poly(F, 1 + rng.below(9), rng);
            CHECK(parse_poly(F, render_poly(F, a)) == a);
        }
    }
}

TEST_CASE("decomposition rendering in both orders", "[textio]") {
    FieldCtx f3(3, 1);
    CycPoly d12 = CycPoly::reduce(f3, 12, poly_sub(f3, poly_y(f3), poly_one(f3)), Convention::row);
    GraphDecomposition g = decompose(f3, d12);
    CHECK(render_decomposition(g, TermOrder::ascending)
          == "3(O_1*T_27)+8(O_3*T_27)+3(O_8*T_27)+818(O_24*T_27)");
    CHECK(render_decomposition(g, TermOrder::descending)
          == "818(O_24*T_27)+3(O_8*T_27)+8(O_3*T_27)+3(O_1*T_27)");
    CHECK(g.cycles.component_count() == 3 + 8 + 3 + 818);
}

TEST_CASE("table rows match the golden columns", "[textio]") {
    FieldCtx f2(2, 1), f3(3, 1);
    CHECK(render_table_row(f2, 23) == "23 2050 2049(O_2047*T_2)+(O_1*T_2)");
    CHECK(render_table_row(f2, 29) == "29 566 565(O_475107*T_2)+(O_1*T_2)");
    CHECK(render_table_row(f3, 17) == "17 194 193(O_223040*T_3)+(O_1*T_3)");
    CHECK(render_table_row(f3, 41)
          == "41 1853302661441610 1853302661441604(O_6560*T_3)+5(O_1312*T_3)+(O_1*T_3)");
}

TEST_CASE("JSON round trip reproduces the text rendering", "[textio][property]") {
    for (std::uint64_t q : {2ull, 3ull}) {
        FieldCtx F(q, 1);
        detail::SplitMix64 rng(q * 77);
        for (unsigned n : {1u, 4u, 7u, 12u}) {
            CycPoly op(n, test_helpers::random_poly(F, n, rng), Convention::row);
            GraphDecomposition g = decompose(F, op);
            ordered_json j = decomposition_to_json(g, render_poly(F, op.poly()));
            GraphDecomposition back = decomposition_from_json(ordered_json::parse(j.dump()));
            CHECK(render_decomposition(back, TermOrder::ascending)
                  == render_decomposition(g, TermOrder::ascending));
            CHECK(render_decomposition(back, TermOrder::descending)
                  == render_decomposition(g, TermOrder::descending));
        }
    }
}

TEST_CASE("order tower rendering for the worked example", "[textio]") {
    FieldCtx f3(3, 1);
    CycPoly d12 = CycPoly::reduce(f3, 12, poly_sub(f3, poly_y(f3), poly_one(f3)), Convention::row);
    auto lines = render_orders(f3, d12, factor_xn_minus_1(f3, 12));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "orders (y+1): 1,3,3");
    CHECK(lines[1] == "orders (y^2+1): 8,24,24");
}

TEST_CASE("rendering is deterministic", "[textio]") {
    FieldCtx f3(3, 1);
    CycPoly d12 = CycPoly::reduce(f3, 12, poly_sub(f3, poly_y(f3), poly_one(f3)), Convention::row);
    GraphDecomposition g1 = decompose(f3, d12);
    GraphDecomposition g2 = decompose(f3, d12);
    CHECK(render_decomposition(g1) == render_decomposition(g2));
    CHECK(decomposition_to_json(g1, "y+2").dump() == decomposition_to_json(g2, "y+2").dump());
}
