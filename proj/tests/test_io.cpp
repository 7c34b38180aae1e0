#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entagg/io.hpp"
#include "entagg/selftest.hpp"

using Catch::Approx;
using namespace entagg;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = "entagg_io_test_" + std::to_string(counter++) + ".tmp";
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("reads JSON array distribution files") {
    TempFile f("[0.2, 0.5, 0.3]");
    const ProbDist p = load_dist_file(f.path);
    REQUIRE(p.probs() == std::vector<double>{0.5, 0.3, 0.2});
}

TEST_CASE("reads whitespace-separated distribution files") {
    TempFile f("0.1 0.4\n0.3\t0.2\n");
    const ProbDist p = load_dist_file(f.path);
    REQUIRE(p.probs() == std::vector<double>{0.4, 0.3, 0.2, 0.1});
}

TEST_CASE("file errors map to the right types") {
    REQUIRE_THROWS_AS(load_dist_file("definitely_missing_file.json"), IoError);
    TempFile bad("[0.5, \"x\"]");
    REQUIRE_THROWS_AS(load_dist_file(bad.path), ValidationError);
    TempFile garbage("0.5 pancake 0.5");
    REQUIRE_THROWS_AS(load_dist_file(garbage.path), ValidationError);
    TempFile short_sum("0.4 0.4");
    REQUIRE_THROWS_AS(load_dist_file(short_sum.path), SumError);
    REQUIRE_NOTHROW(load_dist_file(short_sum.path, true));  // --normalize path
}

TEST_CASE("reads integer files for the reduction") {
    TempFile f("20 26 29\n21 24 30\n");
    REQUIRE(read_integers_file(f.path) ==
            std::vector<std::uint64_t>{20, 26, 29, 21, 24, 30});
}

TEST_CASE("fmt_double round-trips at 17 significant digits") {
    Rng rng(71);
    for (int c = 0; c < 500; ++c) {
        const double x = rng.uniform01();
        REQUIRE(std::stod(fmt_double(x, 17)) == x);
    }
    REQUIRE(fmt_double(0.5, 17) == "0.5");
    REQUIRE(fmt_double(1.0 / 3.0, 6) == "0.333333");
}

TEST_CASE("JsonWriter emits parsable, ordered output") {
    JsonWriter w(17);
    w.begin_object();
    w.kv("name", "demo");
    w.kv("count", static_cast<std::int64_t>(3));
    w.key("values").number_array(std::vector<double>{0.25, 0.5, 0.125});
    w.key("nested").begin_object();
    w.kv("flag", true);
    w.key("none").null();
    w.end_object();
    w.key("rows").begin_array();
    w.number_array(std::vector<double>{1.0, 0.0});
    w.number_array(std::vector<double>{0.0, 1.0});
    w.end_array();
    w.end_object();

    const nlohmann::json parsed = nlohmann::json::parse(w.str());
    REQUIRE(parsed["name"] == "demo");
    REQUIRE(parsed["count"] == 3);
    REQUIRE(parsed["values"][2] == Approx(0.125));
    REQUIRE(parsed["nested"]["flag"] == true);
    REQUIRE(parsed["nested"]["none"].is_null());
    REQUIRE(parsed["rows"].size() == 2);
    REQUIRE(parsed["rows"][1][1] == Approx(1.0));
}
