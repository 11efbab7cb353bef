#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "gqc/partitions.hpp"

using namespace gqc;

TEST_CASE("bipartition counts match the piecewise formula and 2^{n-1}-1") {
    CHECK(bipartition_count(2) == 1);
    CHECK(bipartition_count(3) == 3);
    CHECK(bipartition_count(4) == 7);
    CHECK(bipartition_count(5) == 15);
    for (int n = 2; n <= 14; ++n) {
        auto expected = (std::uint64_t{1} << (n - 1)) - 1;
        CHECK(bipartition_count(n) == expected);
        CHECK(enumerate_bipartitions(n).size() == expected);
    }
}

TEST_CASE("n=3 enumeration order is the documented one") {
    auto cuts = enumerate_bipartitions(3);
    REQUIRE(cuts.size() == 3);
    CHECK(cuts[0].to_string() == "0|1,2");
    CHECK(cuts[1].to_string() == "0,1|2");
    CHECK(cuts[2].to_string() == "0,2|1");
}

TEST_CASE("n=4 golden enumeration") {
    std::string joined;
    for (const auto& c : enumerate_bipartitions(4)) joined += c.to_string() + ";";
    CHECK(joined == "0|1,2,3;0,1|2,3;0,2|1,3;0,3|1,2;0,1,2|3;0,1,3|2;0,2,3|1;");
}

TEST_CASE("no duplicate unordered splits and every party reachable") {
    for (int n = 3; n <= 8; ++n) {
        auto cuts = enumerate_bipartitions(n);
        std::set<std::uint32_t> masks;
        std::set<int> seen;
        for (const auto& c : cuts) {
            CHECK(c.contains(0));
            masks.insert(c.mask());
            for (int p : c.block()) seen.insert(p);
        }
        CHECK(masks.size() == cuts.size());
        CHECK(static_cast<int>(seen.size()) == n);  // every party shows up in some block
    }
}

TEST_CASE("enumeration order is stable across calls") {
    auto a = enumerate_bipartitions(6);
    auto b = enumerate_bipartitions(6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("domain and resource errors") {
    CHECK_THROWS_AS(enumerate_bipartitions(1), domain_error);
    CHECK_THROWS_AS(bipartition_count(1), domain_error);
    CHECK_THROWS_AS(enumerate_bipartitions(17), resource_error);
    CHECK_THROWS_AS(enumerate_bipartitions(15, 14), resource_error);
    CHECK_THROWS_AS(Bipartition({1}, 3), partition_error);       // party 0 missing
    CHECK_THROWS_AS(Bipartition({0, 1, 2}, 3), partition_error); // full set
    CHECK_THROWS_AS(Bipartition({0, 5}, 3), partition_error);    // out of range
}
