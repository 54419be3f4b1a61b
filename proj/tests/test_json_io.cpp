#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fjd/json_io.hpp"
#include "test_support.hpp"

#include "fjd/errors.hpp"
using namespace fjd;
using nlohmann::json;

TEST_CASE("lattice json round trip") {
    EvenLattice hex(fjd_test::hex_gram());
    json j = lattice_to_json(hex);
    CHECK(j["n"] == 2);
    EvenLattice back = lattice_from_json(j);
    CHECK(back.gram() == hex.gram());
    CHECK(back.level() == 3);
}

TEST_CASE("lattice json rejects malformed input") {
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [[2,-1],[-1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [[2,-1,0],[-1,2,0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [[2.5,0],[0,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [["2",0],[0,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"n": 3, "gram": [[2,0],[0,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"rows": 2})")), std::invalid_argument);
    // structurally fine but not an even lattice
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"gram": [[1,0],[0,2]]})")), fjd::NotEven);
}

TEST_CASE("table json round trip") {
    EvenLattice s2(fjd_test::rank1_gram(1));
    FJCoefficientTable table(s2, 5, 10);
    table.set(Int(-100), {Int(0)}, Rat(1));
    table.set(Int(-4), {Int(4)}, Rat(3, 7));
    table.set(Int(-4), {Int(6)}, Rat(-2));
    json j = table_to_json(table);
    CHECK(j["index"] == 5);
    CHECK(j["weight"] == 10);
    FJCoefficientTable back = table_from_json(j);
    CHECK(back.entries() == table.entries());
    CHECK(back.at(Int(-4), {Int(4)}) == Rat(3, 7));
}

TEST_CASE("table json rejects malformed entries") {
    json base = json::parse(
        R"({"lattice": {"n":1, "gram": [[2]]}, "index": 5, "weight": 10,
            "entries": [{"D": -4, "r": [4], "value": "1/3"}]})");
    CHECK_NOTHROW(table_from_json(base));
    json bad = base;
    bad["entries"][0]["value"] = "0.5";
    CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
    bad = base;
    bad["entries"][0]["r"] = json::array({1, 2});
    CHECK_THROWS_AS(table_from_json(bad), std::invalid_argument);
    bad = base;
    bad["entries"][0]["D"] = -3;  // violates the support congruence mod qN
    CHECK_THROWS_AS(table_from_json(bad), fjd::KeyOutsideSupport);
}

TEST_CASE("rational strings") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_to_string(Rat(-2, 6)) == "-1/3");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}
