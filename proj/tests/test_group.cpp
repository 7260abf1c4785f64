#include "doctest.h"

#include <cmath>

#include "frobdet/builtin_groups.hpp"
#include "frobdet/characters.hpp"
#include "frobdet/group.hpp"
#include "frobdet/json_io.hpp"

using namespace frobdet;

TEST_CASE("z2 parses and validates") {
    auto g = parse_group(R"({"n":2,"names":["e","a"],"table":[[0,1],[1,0]]})");
    CHECK(g.n == 2);
    CHECK(g.exponent == 2);
    CHECK(g.is_abelian());
    CHECK(g.inv(1) == 1);
}

TEST_CASE("validation failures carry stable codes") {
    auto code_of = [](const char* text) {
        try {
            parse_group(text);
        } catch (const Error& e) {
            return std::string(e.code());
        }
        return std::string("none");
    };
    CHECK(code_of(R"({"n":2,"table":[[0,0],[1,0]]})") == "NonLatinSquare");
    CHECK(code_of(R"({"n":2,"table":[[1,0],[0,1]]})") == "NoIdentity");
    CHECK(code_of(R"({"n":2,"table":[[0,1]]})") == "BadFormat");
    // order-3 magma with identity and Latin-square rows but broken associativity
    CHECK(code_of(R"({"n":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})") ==
          "NonAssociative");
}

TEST_CASE("conjugacy classes of builtin groups") {
    auto s3 = builtin_group("s3");
    auto cc = conjugacy_classes(s3);
    CHECK(cc.r == 3);
    // sizes 1, 2, 3
    CHECK(cc.classes[0].size() == 1);
    CHECK(cc.classes[1].size() == 2);
    CHECK(cc.classes[2].size() == 3);

    CHECK(conjugacy_classes(builtin_group("d4")).r == 5);
    CHECK(conjugacy_classes(builtin_group("q8")).r == 5);
    CHECK(conjugacy_classes(builtin_group("z6")).r == 6);
}

TEST_CASE("abelian character table is exact and multiplicative") {
    for (const char* name : {"z2", "z3", "z4", "z6", "klein"}) {
        auto g = builtin_group(name);
        auto t = abelian_characters(g);
        REQUIRE(static_cast<int>(t.values.size()) == g.n);
        // multiplicativity and orthogonality at double precision
        for (int i = 0; i < g.n; ++i) {
            for (int a = 0; a < g.n; ++a)
                for (int b = 0; b < g.n; ++b) {
                    CD lhs = t.value_at(i, g.mul(a, b));
                    CD rhs = t.value_at(i, a) * t.value_at(i, b);
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            for (int j = 0; j < g.n; ++j) {
                CD dot{0.0, 0.0};
                for (int a = 0; a < g.n; ++a)
                    dot += t.value_at(i, a) * std::conj(t.value_at(j, a));
                CHECK(std::abs(dot - (i == j ? CD(g.n, 0.0) : CD(0.0, 0.0))) < 1e-10);
            }
        }
    }
}

TEST_CASE("numeric character tables: degrees") {
    auto check_degrees = [](const char* name, std::vector<int> expect) {
        auto g = builtin_group(name);
        auto t = character_table_numeric(g, 42);
        std::vector<int> d = t.degrees;
        std::sort(d.begin(), d.end());
        CHECK(d == expect);
    };
    check_degrees("s3", {1, 1, 2});
    check_degrees("d4", {1, 1, 1, 1, 2});
    check_degrees("q8", {1, 1, 1, 1, 2});
}

TEST_CASE("numeric character table rows are orthogonal with class weights") {
    auto g = builtin_group("s3");
    auto t = character_table_numeric(g, 42);
    auto& cc = t.classes;
    for (std::size_t i = 0; i < t.values.size(); ++i)
        for (std::size_t j = 0; j < t.values.size(); ++j) {
            CD dot{0.0, 0.0};
            for (std::size_t c = 0; c < cc.classes.size(); ++c)
                dot += static_cast<double>(cc.classes[c].size()) * t.values[i][c] *
                       std::conj(t.values[j][c]);
            CD expect = (i == j) ? CD(g.n, 0.0) : CD(0.0, 0.0);
            CHECK(std::abs(dot - expect) < 1e-8);
        }
}

TEST_CASE("character table ingestion validates orthogonality") {
    auto g = builtin_group("z2");
    // valid table
    auto t = parse_character_table(
        g, R"({"classes":[[0],[1]],"degrees":[1,1],
               "values":[[{"re":1,"im":0},{"re":1,"im":0}],
                         [{"re":1,"im":0},{"re":-1,"im":0}]]})");
    CHECK(t.degrees == std::vector<int>{1, 1});
    // broken table rejected
    CHECK_THROWS_AS(parse_character_table(
                        g, R"({"classes":[[0],[1]],"degrees":[1,1],
               "values":[[{"re":1,"im":0},{"re":1,"im":0}],
                         [{"re":1,"im":0},{"re":1,"im":0}]]})"),
                    Error);
}

TEST_CASE("element orders and exponent") {
    auto q8 = builtin_group("q8");
    CHECK(q8.exponent == 4);
    CHECK(q8.element_order(0) == 1);
    int order4 = 0;
    for (int i = 0; i < 8; ++i)
        if (q8.element_order(i) == 4) ++order4;
    CHECK(order4 == 6); // +-i, +-j, +-k
}
