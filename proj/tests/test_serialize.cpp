#include <doctest.h>

#include <stdexcept>

#include <random>

#include "pcx/serialize.hpp"
#include "pcx/witnesses.hpp"

using namespace pcx;

TEST_CASE("serialization uses the fixed field order") {
    const Dfa d = witness({WitnessFamily::Regular, 3});
    CHECK(serialize_dfa(d) ==
          R"({"states":3,"alphabet":["a","b","c"],"initial":0,"finals":[2],)"
          R"("transitions":{"a":[1,2,0],"b":[1,0,2],"c":[0,0,2]}})");
}

TEST_CASE("parse rejects malformed documents with field-specific messages") {
    CHECK_THROWS_WITH_AS(parse_dfa("{"), doctest::Contains("malformed JSON"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_dfa(R"({"states":3,"alphabet":["a"],"initial":0,"finals":[],)"
                  R"("transitions":{"a":[0,5,1]}})"),
        doctest::Contains("transition target out of range"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_dfa(R"({"states":2,"alphabet":["a","a"],"initial":0,"finals":[],)"
                  R"("transitions":{"a":[0,1]}})"),
        doctest::Contains("duplicate letter"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_dfa(R"({"states":2,"alphabet":["a"],"initial":5,"finals":[],)"
                  R"("transitions":{"a":[0,1]}})"),
        doctest::Contains("initial"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_dfa(R"({"states":2,"alphabet":["a"],"initial":0,"finals":[],)"
                  R"("transitions":{"a":[0]}})"),
        doctest::Contains("length != state count"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_dfa(R"({"states":2,"alphabet":["a"],"initial":0,"finals":[9],)"
                  R"("transitions":{"a":[0,1]}})"),
        doctest::Contains("finals"), std::invalid_argument);
}

TEST_CASE("round trip is the identity on canonical DFAs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Dfa d;
        d.state_count = 2 + (int)(rng() % 5);
        d.alphabet = {"a", "b"};
        d.transitions.assign(2, std::vector<int>(d.state_count));
        for (auto& row : d.transitions)
            for (auto& t : row) t = (int)(rng() % d.state_count);
        d.finals.resize(d.state_count);
        for (int q = 0; q < d.state_count; ++q) d.finals[q] = rng() % 2 == 0;
        const Dfa canon = minimize(d);
        const std::string text = serialize_dfa(canon);
        REQUIRE(parse_dfa(text) == canon);
        REQUIRE(serialize_dfa(parse_dfa(text)) == text);
    }
}
