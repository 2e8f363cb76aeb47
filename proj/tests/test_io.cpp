#include <catch2/catch_amalgamated.hpp>

#include <coexpand/bundled.hpp>
#include <coexpand/io.hpp>

using namespace coexpand;

TEST_CASE("rational strings") {
    REQUIRE(to_string(Rational(1, 2)) == "1/2");
    REQUIRE(to_string(Rational(-3)) == "-3");
    REQUIRE(parse_rational("7/4") == Rational(7, 4));
    REQUIRE(parse_rational("-5") == Rational(-5));
    REQUIRE(parse_rational("2/4") == Rational(1, 2)); // canonicalized
    REQUIRE_THROWS_AS(parse_rational("1/0"), FormatError);
    REQUIRE_THROWS_AS(parse_rational("x"), FormatError);
}

TEST_CASE("matrix text format") {
    auto m = parse_matrix_text("2 3\n1 -2 3\n0 5 -6\n");
    REQUIRE(m.rows() == 2);
    REQUIRE(m(1, 2) == -6);
    REQUIRE(parse_matrix_text(format_matrix_text(m)) == m);
    REQUIRE_THROWS_AS(parse_matrix_text("2 2\n1 2 3"), FormatError);
    REQUIRE_THROWS_AS(parse_matrix_text("2 2\n1 2 3 4 5"), FormatError);
    REQUIRE_THROWS_AS(parse_matrix_text("x"), FormatError);
}

TEST_CASE("matrix json format") {
    json j = {{"rows", 1}, {"cols", 2}, {"data", {1, 2}}};
    auto m = matrix_from_json(j);
    REQUIRE(m == IntMatrix{{1, 2}});
    REQUIRE(matrix_from_json(to_json(m)) == m);
    // sniffing picks json by the leading brace
    REQUIRE(parse_matrix_any("  {\"rows\":1,\"cols\":1,\"data\":[4]}")(0, 0) == 4);
    REQUIRE(parse_matrix_any("1 1\n4")(0, 0) == 4);
}

TEST_CASE("complex json round trip") {
    auto X = bundled::rp2_6();
    auto j = to_json(X);
    REQUIRE(j["counts"] == json({6, 15, 10}));
    auto Y = complex_from_json(j);
    for (int k = 0; k <= 2; ++k) REQUIRE(Y.num_simplices(k) == X.num_simplices(k));
    REQUIRE(boundary_matrix(Y, 2) == boundary_matrix(X, 2));
    REQUIRE_THROWS_AS(complex_from_json(json{{"facets", json::array()}}), FormatError);
    SECTION("string labels survive") {
        auto Z = complex_from_json(json::parse(R"({"facets": [["a","b"],["b","c"]]})"));
        REQUIRE(Z.num_simplices(0) == 3);
        REQUIRE(label_str(Z.vertex_label(0)) == "a");
    }
}

TEST_CASE("voltage json") {
    auto X = bundled::cycle3();
    auto j = json::parse(R"({"degree":3,"tree":[[0,1],[0,2]],"voltages":{"1-2":[1,2,0]}})");
    auto va = voltage_from_json(j, X);
    REQUIRE(va.degree == 3);
    REQUIRE(va.voltages.at({1, 2}) == std::vector<std::size_t>{1, 2, 0});
    SECTION("reversed key stores the inverse") {
        auto j2 = json::parse(R"({"degree":3,"tree":[[0,1],[0,2]],"voltages":{"2-1":[1,2,0]}})");
        auto va2 = voltage_from_json(j2, X);
        REQUIRE(va2.voltages.at({1, 2}) == std::vector<std::size_t>{2, 0, 1});
    }
    SECTION("unknown labels are rejected") {
        auto j3 = json::parse(R"({"degree":2,"tree":[[0,9]]})");
        REQUIRE_THROWS_AS(voltage_from_json(j3, X), FormatError);
    }
}

TEST_CASE("bounds box json") {
    auto j = json::parse(R"({"b":[0,"-inf"],"b_prime":[2,"inf"],"c":[1],"c_prime":["inf"]})");
    auto box = bounds_box_from_json(j);
    REQUIRE(box.var_lo[0].finite());
    REQUIRE(box.var_lo[0].value == 0);
    REQUIRE(box.var_lo[1].kind == Bound::Kind::neg_inf);
    REQUIRE(box.var_hi[1].kind == Bound::Kind::pos_inf);
    REQUIRE(box.row_hi[0].kind == Bound::Kind::pos_inf);
    REQUIRE_THROWS_AS(bounds_box_from_json(json::parse(R"({"b":[0]})")), FormatError);
}

TEST_CASE("expansion result json uses exact rational strings") {
    auto r = l1_min_real({IntMatrix{{1, 2}}, IntVec{Integer(1)}});
    auto j = to_json(r);
    REQUIRE(j["value"] == "1/2");
    REQUIRE(j["minimizer"][1] == "1/2");
    REQUIRE(j["ring"] == "real");
    REQUIRE(j["certificate"]["kind"] == "lp_dual");
}
