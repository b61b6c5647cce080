#include <catch2/catch.hpp>

#include "fgq/io.hpp"
#include "fgq/suciu.hpp"

#include "test_util.hpp"

using namespace fgq;
using testutil::W;

TEST_CASE("endo interchange format") {
    jsonval j = jsonval::parse(R"({"rank": 2, "images": ["a^2 b a^-2", "a b a^-2"]})");
    Endo e = endo_from_json(j);
    REQUIRE(e == suciu::make_fk(2));
    REQUIRE(endo_to_json(e) == j);
    REQUIRE(endo_from_json(endo_to_json(suciu::make_fk_inverse(3))) ==
            suciu::make_fk_inverse(3));

    REQUIRE_THROWS_AS(endo_from_json(jsonval::parse(R"({"rank": 2, "images": ["a"]})")), error);
    REQUIRE_THROWS_AS(endo_from_json(jsonval::parse(R"({"rank": 1, "images": ["b"]})")),
                      parse_error);
}

TEST_CASE("quandle table format") {
    jsonval j = jsonval::parse(R"({"n": 3, "table": [[0,2,1],[2,1,0],[1,0,2]]})");
    FiniteQuandle q = quandle_from_json(j);
    REQUIRE(q.size() == 3);
    REQUIRE(q.type() == 2);
    REQUIRE(quandle_to_json(q) == j);
    REQUIRE_THROWS_AS(quandle_from_json(jsonval::parse(R"({"n": 2, "table": [[0,1],[1,0],[0,1]]})")),
                      error);
}

TEST_CASE("group format") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup back = group_from_json(group_to_json(s3));
    REQUIRE(back == s3);

    // optional fields may be omitted
    jsonval j = jsonval::parse(R"({"mul": [[0,1],[1,0]]})");
    REQUIRE(group_from_json(j).identity() == 0);

    // declared fields must agree with the table
    jsonval bad = group_to_json(FiniteGroup::cyclic(3));
    bad["id"] = 1;
    REQUIRE_THROWS_AS(group_from_json(bad), error);
    jsonval bad2 = group_to_json(FiniteGroup::cyclic(3));
    bad2["inv"][1] = 1;
    REQUIRE_THROWS_AS(group_from_json(bad2), error);
    REQUIRE_THROWS_AS(group_from_json(jsonval::parse(R"({"mul": [[0,0],[1,1]]})")), error);
}
