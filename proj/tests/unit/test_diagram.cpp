#include "doctest.h"

#include "mulink/diagram.hpp"
#include "mulink/errors.hpp"

using namespace mulink;

TEST_CASE("braid closure of v1 S1") {
    Diagram d = close_braid(parse_braid("v1 S1", 2));
    CHECK(render_gauss(d) == "O1- | U1-");
    CHECK(linking_number(d, 0, 1) == -1);
    CHECK(linking_number(d, 1, 0) == 0);
}

TEST_CASE("braid closure of s1 s1 s1 v1") {
    Diagram d = close_braid(parse_braid("s1 s1 s1 v1", 2));
    CHECK(render_gauss(d) == "O1+ U2+ O3+ | U1+ O2+ U3+");
    CHECK(linking_number(d, 0, 1) == 2);
    CHECK(linking_number(d, 1, 0) == 1);

    auto table = crossing_table(d);
    REQUIRE(table.size() == 3);
    CHECK(table[0].id == 1);
    CHECK(table[0].sign == 1);
    CHECK(table[0].over_comp == 0);
    CHECK(table[0].under_comp == 1);
    CHECK(table[1].over_comp == 1);
    CHECK(!table[0].flat);
}

TEST_CASE("braid parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_braid("s1 s3", 2), ParseError);
    CHECK_THROWS_AS(parse_braid("s1 q2", 2), ParseError);
    CHECK_THROWS_AS(parse_braid("s0", 2), ParseError);
    try {
        parse_braid("s1 s9", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("gauss code round trip") {
    Diagram d = parse_gauss("O1+ U2- F3 | U1+ O2- F3");
    validate(d);
    CHECK(render_gauss(d) == "O1+ U2- F3 | U1+ O2- F3");
    CHECK(d.components.size() == 2);
    CHECK(d.components[0][2].kind == PassKind::Flat);
    CHECK(d.components[0][2].sign == 0);

    Diagram empty = parse_gauss("");
    CHECK(empty.components.size() == 1);
    CHECK(empty.components[0].empty());
    CHECK(render_gauss(empty) == "");
}

TEST_CASE("validation rejects broken pairings") {
    CHECK_THROWS_AS(validate(parse_gauss("O1+ U1-")), ValidationError);
    CHECK_THROWS_AS(validate(parse_gauss("O1+ O1+")), ValidationError);
    CHECK_THROWS_AS(validate(parse_gauss("O1+")), ValidationError);
    CHECK_THROWS_AS(validate(parse_gauss("O1+ U1+ O1+")), ValidationError);
    CHECK_THROWS_AS(validate(parse_gauss("F1 O1+")), ValidationError);
    CHECK_THROWS_AS(parse_gauss("O1 U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss("F1+ F1"), ParseError);
}

TEST_CASE("flatten erases crossing information") {
    Diagram d = flatten(close_braid(parse_braid("s1 S1 v1", 2)));
    for (const auto& comp : d.components)
        for (const Passage& p : comp) {
            CHECK(p.kind == PassKind::Flat);
            CHECK(p.sign == 0);
        }
    validate(d);
    CHECK(linking_number(d, 0, 1) == 0);
}
