#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "nilorb/errors.hpp"
#include "nilorb/root_system.hpp"

using namespace nilorb;

namespace {

std::vector<Coeffs> read_golden(Kind k) {
    std::ifstream in(std::string(NILORB_TEST_DATA_DIR) + "/" + std::string(kind_name(k)) + ".roots");
    REQUIRE(in);
    std::vector<Coeffs> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Coeffs c;
        int v;
        while (ls >> v) c.push_back(v);
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("positive roots match the stored tables in order") {
    const std::size_t expected[] = {6, 24, 36, 63, 120};
    std::size_t i = 0;
    for (Kind k : all_kinds) {
        CAPTURE(kind_name(k));
        const RootSystem rs = build_root_system(k);
        const auto golden = read_golden(k);
        REQUIRE(rs.num_positive() == expected[i++]);
        REQUIRE(golden.size() == rs.num_positive());
        for (std::size_t r = 0; r < golden.size(); ++r) {
            CAPTURE(r + 1);
            CHECK(rs.to_display(rs.positive_roots()[r]) == golden[r]);
            CHECK(rs.from_display(golden[r]) == rs.positive_roots()[r]);
        }
    }
}

TEST_CASE("highest root and norms") {
    const RootSystem e8 = build_root_system(Kind::E8);
    CHECK(e8.to_display(e8.positive_root(120)) == Coeffs{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(e8.height(120) == 29);
    const RootSystem g2 = build_root_system(Kind::G2);
    CHECK(g2.norm(1) == 2);
    CHECK(g2.norm(2) == 6);
    CHECK(g2.is_long(-6));
    CHECK_FALSE(g2.simply_laced());
    const RootSystem f4 = build_root_system(Kind::F4);
    int longs = 0;
    for (int r = 1; r <= 24; ++r) longs += f4.is_long(r);
    CHECK(longs == 12);
}

TEST_CASE("find handles negatives and non-roots") {
    const RootSystem rs = build_root_system(Kind::G2);
    CHECK(rs.find({1, 0}) == 1);
    CHECK(rs.find({-1, 0}) == -1);
    CHECK_FALSE(rs.find({0, 0}).has_value());
    CHECK(rs.find({2, 1}) == 4);
    CHECK_FALSE(rs.find({1, 2}).has_value());
    CHECK(rs.find({3, 2}) == 6);
}

TEST_CASE("dominant chamber") {
    const RootSystem rs = build_root_system(Kind::E6);
    std::vector<Rational> labels{-2, 0, 2, 0, 0, 0};
    const auto dom = dominant_chamber(rs, labels);
    for (const auto& v : dom) CHECK(v >= 0);
    // Dominant labels are already fixed.
    std::vector<Rational> fixed{0, 1, 0, 0, 0, 0};
    CHECK(dominant_chamber(rs, fixed) == fixed);
}

TEST_CASE("parse_kind") {
    CHECK(parse_kind("e7") == Kind::E7);
    CHECK_THROWS_AS(parse_kind("B3"), InputError);
}
