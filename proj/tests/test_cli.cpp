#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = nilorb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t data_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++n;
    return n;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

void write(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_CASE("cli roots") {
    auto r = run({"roots", "G2"});
    CHECK(r.code == 0);
    CHECK(data_lines(r.out) == 6);
    CHECK(run({"roots", "E7"}).out.find("63  gap") != std::string::npos);
    CHECK(data_lines(run({"roots", "e7"}).out) == 63);
    const auto j = nlohmann::json::parse(run({"roots", "F4", "--json"}).out);
    CHECK(j["roots"].size() == 24);
    CHECK(j["roots"][23]["display"] == nlohmann::json({2, 3, 4, 2}));
    CHECK(run({"roots", "B3"}).code == 3);
}

TEST_CASE("cli orbits") {
    auto f4 = run({"orbits", "F4", "--seed", "3"});
    CHECK(f4.code == 0);
    CHECK(data_lines(f4.out) == 15);
    CHECK(f4.out.rfind("# orbits F4 seed=3", 0) == 0);
    const auto j = nlohmann::json::parse(run({"orbits", "G2", "--json", "--seed", "3"}).out);
    CHECK(j["count"] == 4);
    CHECK(j["seed"] == 3);
    for (const auto& o : j["orbits"]) {
        CHECK(o["index_certified"] == true);
        CHECK(o["label"].is_string());
    }
}

TEST_CASE("cli output does not depend on the thread count") {
    const auto a = run({"doublecen", "F4", "--json", "--seed", "17", "--threads", "1"});
    const auto b = run({"doublecen", "F4", "--json", "--seed", "17", "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"index", "E6", "--json", "--seed", "17", "--threads", "2"}).out ==
          run({"index", "E6", "--json", "--seed", "17"}).out);
}

TEST_CASE("cli rep") {
    auto a1 = run({"rep", "G2", "1,0", "--seed", "1", "--json"});
    REQUIRE(a1.code == 0);
    const auto j = nlohmann::json::parse(a1.out);
    CHECK(j["label"] == "A1");
    CHECK(j["triple_verified"] == true);
    // GAP order reverses the G2 display order
    CHECK(nlohmann::json::parse(run({"rep", "G2", "0,1", "--gap-order", "--json", "--seed", "1"}).out)["label"] == "A1");

    CHECK(run({"rep", "G2", "0,0"}).code == 3);
    CHECK(run({"rep", "G2", "1,x"}).code == 3);
    CHECK(run({"rep", "G2", "1,0,0"}).code == 3);
    CHECK(run({"rep", "G2"}).code == 3);
    auto bad = run({"rep", "G2", "1,1", "--seed", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("25 trials") != std::string::npos);
    CHECK(run({"rep", "G2", "1,1", "--exact"}).code == 2);
    CHECK(run({"rep", "F4", "2,0,0,0", "--exact", "--max-terms", "50"}).code == 4);

    auto sub = run({"rep", "E6", "--subsystem", "2A2", "--json", "--seed", "1"});
    REQUIRE(sub.code == 0);
    CHECK(nlohmann::json::parse(sub.out)["label"] == "2A2");
}

TEST_CASE("cli index and recheck") {
    const auto path = temp_file("nilorb_index_f4.json");
    auto r = run({"index", "F4", "--seed", "5", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("15/15 certified") != std::string::npos);
    auto ok = run({"recheck", path.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("15/15 index records recheck") != std::string::npos);
    CHECK(run({"--recheck", path.string()}).code == 0);

    auto doc = nlohmann::ordered_json::parse(std::ifstream(path));
    doc["certificates"][3]["point"] = std::vector<long>(doc["certificates"][3]["point"].size(), 0);
    write(path, doc.dump());
    auto tampered = run({"recheck", path.string()});
    CHECK(tampered.code == 1);
    CHECK(tampered.out.find("14/15") != std::string::npos);

    write(path, "{not json");
    CHECK(run({"recheck", path.string()}).code == 3);
    CHECK(run({"recheck", "/nonexistent/file.json"}).code == 3);
    std::filesystem::remove(path);
}

TEST_CASE("cli doublecen") {
    auto g2 = run({"doublecen", "G2", "--seed", "4", "--json"});
    REQUIRE(g2.code == 0);
    const auto j = nlohmann::json::parse(g2.out);
    CHECK(j["exceptional"] == 1);
    for (const auto& row : j["rows"]) {
        if (row["exceptional"] == true) {
            CHECK(row["label"] == "A1+Ã1");
            CHECK(row["min_dim"] == 3);
            CHECK(row["mode"] == "exact-symbolic");
            CHECK(row["abelian"] == true);
        } else {
            CHECK(row["min_dim"] == 2);
        }
    }
    const auto path = temp_file("nilorb_doublecen_g2.json");
    write(path, g2.out);
    CHECK(run({"recheck", path.string()}).code == 0);
    std::filesystem::remove(path);
    CHECK(run({"doublecen", "G2", "--exact"}).code == 0);

    auto deg = nlohmann::json::parse(run({"doublecen", "G2", "--degree", "2", "--json", "--seed", "1"}).out);
    CHECK(deg["degree"] == 2);
    for (const auto& row : deg["rows"])
        if (row["label"] == "A1+Ã1") CHECK(row["min_dim"] == 3);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"orbits"}).code == 3);
    CHECK(run({"orbits", "G2", "--omega", "0"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}
