#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "ddlab/curves.hpp"
#include "ddlab/io.hpp"

using namespace ddlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ddlab_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void put(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("point set round trip") {
    TempDir tmp;
    std::vector<Point2> pts{{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(7, 5)}};
    write_point_set(tmp.file("p.json"), pts);
    CHECK(read_point_set(tmp.file("p.json")) == pts);
}

TEST_CASE("exact mode rejects floating point literals") {
    TempDir tmp;
    put(tmp.file("bad.json"), R"({"points": [[0.5, "1/2"]]})");
    CHECK_THROWS_AS(read_point_set(tmp.file("bad.json")), std::invalid_argument);
    // approx mode converts the exact binary value of the double
    auto pts = read_point_set(tmp.file("bad.json"), Mode::Approx);
    CHECK(pts.at(0).x1 == Rational(1, 2));

    put(tmp.file("int.json"), R"({"points": [[2, "1/2"]]})");
    CHECK(read_point_set(tmp.file("int.json")).at(0).x1 == Rational(2));

    put(tmp.file("schema.json"), R"({"points": [[1, 2, 3]]})");
    CHECK_THROWS(read_point_set(tmp.file("schema.json")));
    put(tmp.file("noparse.json"), "{");
    CHECK_THROWS_AS(read_point_set(tmp.file("noparse.json")), std::runtime_error);
    CHECK_THROWS_AS(read_point_set(tmp.file("missing.json")), std::runtime_error);
}

TEST_CASE("curve file round trip") {
    TempDir tmp;
    BivarPoly F = build_F({Rational(2), Rational(0)}, {Rational(7, 5), Rational(1, 5)});
    write_curve(tmp.file("f.json"), F);
    CHECK(read_curve(tmp.file("f.json")) == F);
}

TEST_CASE("flat file parsing") {
    TempDir tmp;
    put(tmp.file("flat.json"), R"({"hyperplanes": [
        {"normal": ["2", "0", "-7/5", "-1/5"], "offset": "1"},
        {"normal": ["0", "1", "0", "0"], "offset": "4/5"}]})");
    TwoFlat K = read_flat(tmp.file("flat.json"));
    CHECK(K.h1().offset == Rational(1));
    CHECK(K.h2().normal[1] == Rational(1));

    put(tmp.file("dep.json"), R"({"hyperplanes": [
        {"normal": ["1", "0", "0", "0"], "offset": "0"},
        {"normal": ["2", "0", "0", "0"], "offset": "1"}]})");
    CHECK_THROWS_AS(read_flat(tmp.file("dep.json")), std::invalid_argument);

    put(tmp.file("one.json"), R"({"hyperplanes": [
        {"normal": ["1", "0", "0", "0"], "offset": "0"}]})");
    CHECK_THROWS_AS(read_flat(tmp.file("one.json")), std::invalid_argument);
}

TEST_CASE("concentric config parsing") {
    TempDir tmp;
    put(tmp.file("cfg.json"),
        R"({"r1": "1", "r2": "3/2", "s_params": ["0", "1", "1/2"], "p_params": ["2/3"]})");
    ConcentricConfig cfg = read_concentric_config(tmp.file("cfg.json"));
    CHECK(cfg.r2 == Rational(3, 2));
    CHECK(cfg.s_params.size() == 3);

    put(tmp.file("dup.json"),
        R"({"r1": "1", "r2": "2", "s_params": ["0", "0"], "p_params": ["1"]})");
    CHECK_THROWS_AS(read_concentric_config(tmp.file("dup.json")), std::invalid_argument);
}

TEST_CASE("experiment config parsing") {
    TempDir tmp;
    put(tmp.file("exp.json"),
        R"({"generator": "random", "sizes": [8, 16], "seed": 42, "mode": "exact",
            "out": "report.csv", "epsilon": 0.01})");
    ExperimentConfig cfg = read_experiment_config(tmp.file("exp.json"));
    CHECK(cfg.sizes == std::vector<std::size_t>{8, 16});
    CHECK(cfg.seed == 42);
    CHECK(cfg.out == "report.csv");

    put(tmp.file("badeps.json"), R"({"sizes": [4], "epsilon": 0.5})");
    CHECK_THROWS_AS(read_experiment_config(tmp.file("badeps.json")), std::invalid_argument);
}

TEST_CASE("argument parsing helpers") {
    Point2 p = parse_point_arg("2,0");
    CHECK(p == Point2{Rational(2), Rational(0)});
    auto [a, b] = parse_pair_arg("2,0;7/5,1/5");
    CHECK(a == Point2{Rational(2), Rational(0)});
    CHECK(b == Point2{Rational(7, 5), Rational(1, 5)});
    CHECK_THROWS_AS(parse_point_arg("2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pair_arg("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_arg("0.5,1"), std::invalid_argument);
}
