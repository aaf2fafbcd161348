#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "nilorb/errors.hpp"
#include "nilorb/tables.hpp"

using namespace nilorb;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("nilorb_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

template <class Rows>
auto& row(Rows& rs, const std::string& label) {
    for (auto& r : rs)
        if (r.label == label) return r;
    throw std::runtime_error("no row " + label);
}

}  // namespace

TEST_CASE("orbit tables load with the expected rows") {
    const auto g2 = load_tables(Kind::G2);
    REQUIRE(g2.size() == 4);
    CHECK(row(g2, "A1").rep_roots == std::vector<int>{6});
    CHECK(row(g2, "A1").display_diagram == std::vector<int>{1, 0});
    CHECK(row(g2, "Ã1").rep_roots == std::vector<int>{4});
    CHECK(row(g2, "A1+Ã1").rep_roots == std::vector<int>{2, 4});
    CHECK(row(g2, "G2").rep_roots == std::vector<int>{1, 2});
    CHECK(row(g2, "G2").edges.size() == 1);
    CHECK(row(g2, "G2").edges[0].lines == 3);

    const auto f4 = load_tables(Kind::F4);
    REQUIRE(f4.size() == 15);
    CHECK(row(f4, "B4").rep_roots == std::vector<int>{5, 4, 2, 10});
    CHECK(row(f4, "B4").display_diagram == std::vector<int>{2, 2, 0, 2});

    const auto e6 = load_tables(Kind::E6);
    REQUIRE(e6.size() == 20);
    CHECK(row(e6, "2A2").rep_roots == std::vector<int>{17, 21, 18, 20});
    const auto& d5a1 = row(e6, "D5(a1)");
    bool dotted = false;
    for (const auto& e : d5a1.edges) dotted = dotted || (e.dotted && e.a == 7 && e.b == 12);
    CHECK(dotted);

    CHECK_THROWS_AS(load_tables(Kind::E7), InputError);
    CHECK_THROWS_AS(load_tables(Kind::E8), InputError);
}

TEST_CASE("table rows are distinct and have integral gradings") {
    for (Kind k : {Kind::G2, Kind::F4, Kind::E6}) {
        const LieAlgebra& L = algebra_for(k);
        std::set<WeightedDiagram> diagrams;
        std::set<std::string> labels;
        for (const auto& r : load_tables(k)) {
            diagrams.insert(r.diagram);
            labels.insert(r.label);
            const Grading g = grade(L, h_from_diagram(L, r.diagram));
            std::size_t total = 0;
            for (const auto& [deg, comp] : g.components) total += comp.size();
            CHECK(total == L.dim());
            CHECK(g.component(0).size() >= L.rank());
        }
        CHECK(diagrams.size() == load_tables(k).size());
        CHECK(labels.size() == load_tables(k).size());
    }
}

TEST_CASE("verify_tables passes every row") {
    for (Kind k : {Kind::G2, Kind::F4, Kind::E6}) {
        const auto report = verify_tables(load_tables(k), algebra_for(k));
        for (const auto& r : report.rows) {
            INFO(kind_name(k) << " " << r.label << ": " << r.detail);
            CHECK(r.ok());
        }
        CHECK(report.passed() == report.rows.size());
    }
}

TEST_CASE("verify_tables reports broken rows") {
    auto f4 = load_tables(Kind::F4);
    auto& b4 = row(f4, "B4");
    b4.rep_roots[0] = 24;  // highest root: eta != 2
    auto& a1 = row(f4, "A1");
    a1.nodes[0].is_long = false;  // wrong decoration
    const auto report = verify_tables(f4, algebra_for(Kind::F4));
    CHECK(report.passed() == 13);
    for (const auto& r : report.rows) {
        if (r.label == "B4") CHECK_FALSE(r.grading);
        if (r.label == "A1") {
            CHECK_FALSE(r.decorations);
            CHECK(r.sl2);
        }
    }
}

TEST_CASE("table_label finds rows by diagram") {
    const auto e6 = load_tables(Kind::E6);
    const RootSystem& rs = algebra_for(Kind::E6).roots();
    const std::vector<int> disp{2, 2, 2, 0, 2, 2};
    CHECK(table_label(e6, from_display(rs, disp)) == std::optional<std::string>("E6(a1)"));
    const std::vector<int> bad{1, 1, 1, 1, 1, 1};
    CHECK_FALSE(table_label(e6, from_display(rs, bad)).has_value());
}

TEST_CASE("data directory overrides the built-in tables") {
    const auto dir = scratch_dir("override");
    {
        std::ofstream f(dir / "G2.orbits");
        f << "# two rows only\nA1 | 1 0 | 6 | 6L |\nG2 | 2 2 | 1 2 | 1S 2L | 1-2:3\n";
    }
    CHECK(load_tables(Kind::G2, dir).size() == 2);
    CHECK(load_tables(Kind::F4, dir).size() == 15);  // falls back to the built-in file
    {
        std::ofstream f(dir / "G2.orbits");
        f << "A1 | 1 0 | 6\n";
    }
    CHECK_THROWS_AS(load_tables(Kind::G2, dir), InputError);
    {
        std::ofstream f(dir / "G2.orbits");
        f << "A1 | 1 0 | 99 | 99L |\n";
    }
    CHECK_THROWS_AS(load_tables(Kind::G2, dir), InputError);
    {
        std::ofstream f(dir / "G2.orbits");
        f << "A1 | 1 0 | 6 | 6X |\n";
    }
    CHECK_THROWS_AS(load_tables(Kind::G2, dir), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("root tables agree with generated roots") {
    for (Kind k : all_kinds) {
        const RootSystem& rs = algebra_for(k).roots();
        const auto table = load_root_table(k);
        REQUIRE(table.size() == rs.num_positive());
        for (std::size_t i = 0; i < table.size(); ++i)
            CHECK(table[i] == rs.to_display(rs.coeffs(static_cast<int>(i + 1))));
    }
}
