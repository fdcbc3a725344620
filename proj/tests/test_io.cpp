#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "schurlab/constructions.hpp"
#include "schurlab/io.hpp"

using namespace schurlab;

namespace {

SweepConfig small_config() {
    SweepConfig c;
    c.n = 40;
    c.base = "dense0:40,3";
    c.p_grid = std::vector<double>{0.01, 0.05, 0.2, 0.6};
    c.trials = 12;
    c.seed = 77;
    c.budget = 100000;
    return c;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(1e-7) == "1e-07");
    CHECK(format_number(12) == "12");
}

TEST_CASE("constants round-trip and reject unknown keys") {
    ModelConstants c;
    c.zeta = 0.25;
    const Json j = to_json(c);
    CHECK(j["xi"].is_null());
    CHECK(constants_from_json(j) == c);
    CHECK(constants_from_json(to_json(ModelConstants{})) == ModelConstants{});
    Json extra = j;
    extra["bogus"] = 1;
    CHECK_THROWS_AS(constants_from_json(extra), ConfigError);
    Json bad = j;
    bad["classifier_delta"] = 1.5;
    CHECK_THROWS_AS(constants_from_json(bad), ConfigError);
}

TEST_CASE("sweep config parsing") {
    const Json j = Json::parse(R"({"n": 40, "base": "dense0:40,3", "p_grid": [0.01, 0.05, 0.2, 0.6],
                                   "trials": 12, "seed": 77, "budget": 100000})");
    CHECK(parse_sweep_config(j) == small_config());
    CHECK(parse_sweep_config(to_json(small_config())) == small_config());
    CHECK(parse_sweep_config(j, 77).seed == 77);
    CHECK_THROWS_AS(parse_sweep_config(j, 78), ConfigError);

    Json no_seed = j;
    no_seed.erase("seed");
    CHECK(parse_sweep_config(no_seed, 5).seed == 5);
    CHECK_THROWS_AS(parse_sweep_config(no_seed), ConfigError);

    Json auto_grid = j;
    auto_grid["p_grid"] = "auto";
    const SweepConfig a = parse_sweep_config(auto_grid);
    CHECK_FALSE(a.p_grid.has_value());
    CHECK(resolved_grid(a) == default_grid(grid_centre_for(a.base, a.n)));

    for (const char* broken : {R"({"base": "odd", "trials": 3, "seed": 1})",
                               R"({"n": 10, "base": "odd", "trials": 3, "seed": 1, "colour": 2})",
                               R"({"n": 10, "base": "odd", "trials": 0, "seed": 1})",
                               R"({"n": 10, "base": "nope", "trials": 3, "seed": 1})",
                               R"({"n": 10, "base": "odd", "trials": 3, "seed": 1, "p_grid": [0.5, 0.1]})",
                               R"({"n": 10, "base": "odd", "trials": 3, "seed": 1, "p_grid": [2.0]})",
                               R"({"n": 10, "base": "odd", "trials": "x", "seed": 1})", R"([1, 2])"}) {
        INFO(broken);
        CHECK_THROWS_AS(parse_sweep_config(Json::parse(broken)), ConfigError);
    }
}

TEST_CASE("sweep records round-trip") {
    const SweepRecord r = run_sweep(small_config(), ModelConstants{}, 2);
    const std::string text = dump_json(to_json(r));
    CHECK(text.back() == '\n');
    const SweepRecord back = sweep_record_from_json(parse_json_text(text, "memory"));
    CHECK(back == r);
    CHECK(dump_json(to_json(back)) == text);
    CHECK(back.curve == r.curve);
    CHECK(to_json(r)["command"] == "sweep");

    SweepRecord no_threshold = r;
    no_threshold.threshold.reset();
    CHECK(sweep_record_from_json(to_json(no_threshold)) == no_threshold);

    Json tampered = to_json(r);
    tampered["curve"]["points"][0]["schur"] = 999;
    CHECK_THROWS_AS(sweep_record_from_json(tampered), ConfigError);
    CHECK_THROWS_AS(parse_json_text("{not json", "x.json"), ConfigError);
}

TEST_CASE("csv and plot data") {
    SweepCurve empty;
    empty.n = 10;
    CHECK(sweep_csv(empty) == "p,trials,schur,not_schur,unknown,mean_sample_size\n");
    CHECK(plot_data(empty).empty());

    SweepCurve c;
    c.n = 10;
    c.trials_per_point = 10;
    for (double p : {0.1, 0.2, 0.4}) {
        SweepPoint pt;
        pt.p = p;
        pt.trials = 10;
        pt.schur = 5;
        pt.not_schur = 4;
        pt.unknown = 1;
        pt.total_sample_size = 20;
        c.points.push_back(pt);
    }
    const std::string plot = plot_data(c);
    CHECK(std::count(plot.begin(), plot.end(), '\n') == 3);
    CHECK(plot.rfind("0.1 0.555555555556 ", 0) == 0);
    const std::string csv = sweep_csv(c);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("\n0.2,10,5,4,1,2\n") != std::string::npos);
}

TEST_CASE("Wilson half width") {
    CHECK(wilson_half_width(0, 0) == 0.0);
    // 50 of 100: centre 0.5, half width z sqrt(0.25/100 + z^2/40000) / (1 + z^2/100)
    const double z = 1.959963984540054;
    const double expect = z * std::sqrt(0.25 / 100 + z * z / 40000) / (1 + z * z / 100);
    CHECK(wilson_half_width(50, 100) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(wilson_half_width(0, 10) > 0.0);
    CHECK(wilson_half_width(10, 10) == doctest::Approx(wilson_half_width(0, 10)));
}

TEST_CASE("file helpers report the path") {
    const auto dir = std::filesystem::temp_directory_path() / "schurlab_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "a.txt").string();
    write_text_file(path, "hello\n");
    CHECK(read_text_file(path) == "hello\n");
    std::filesystem::remove_all(dir);
    try {
        read_text_file("/nonexistent/dir/file.json");
        FAIL("expected a throw");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/file.json") != std::string::npos);
    }
    CHECK_THROWS(write_text_file("/nonexistent/dir/out.json", "x"));
}

TEST_CASE("set literals and containers") {
    CHECK(parse_set_literal("1-3,7") == IntSet::of(7, {1, 2, 3, 7}));
    CHECK(parse_set_literal("1-3,7", 10).ground() == 10);
    CHECK(parse_set_literal("{}", 5) == IntSet(5));
    CHECK(parse_set_literal("construct:mod5", 10) == mod5_construction(10).set);
    CHECK(parse_set_literal("construct:empty", 6) == IntSet(6));
    CHECK_THROWS(parse_set_literal("mod5", 10));
    CHECK_THROWS(parse_set_literal("construct:mod5"));

    const ContainerLike c = container_from_json(Json::parse(R"({"n": 6, "red": "1-3", "blue": "3,6"})"));
    CHECK(c.n == 6);
    CHECK(c.red == IntSet::of(6, {1, 2, 3}));
    CHECK(c.blue == IntSet::of(6, {3, 6}));
    CHECK(container_from_json(Json::parse(R"({"red": "1-3", "blue": "5"})")).n == 5);
    CHECK_THROWS(container_from_json(Json::parse(R"({"n": 2, "red": "1-3", "blue": ""})")));
    CHECK_THROWS(container_from_json(Json::parse(R"({"red": "1"})")));

    const Json col = colouring_to_json(mod5_construction(10).colouring);
    CHECK(col["red"] == "1,4,6,9");
    CHECK(col["blue"] == "2-3,7-8");
}
