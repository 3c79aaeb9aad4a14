#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "stereo/evaluation.hpp"
#include "testutil.hpp"

using namespace stereo;

namespace {

testutil::StereoPair small_test_pair(unsigned seed) {
    std::mt19937 rng(seed);
    auto pair = testutil::shifted_pair(48, 36, 3, rng);
    testutil::add_noise(pair.right, 2, rng);
    return pair;
}

}  // namespace

TEST_CASE("the canonical comparison yields five well-formed records") {
    const auto pair = small_test_pair(61);
    const auto configs = canonical_configs();
    REQUIRE(configs.size() == 5);

    const auto records = run_benchmark(pair.left, pair.right, configs, 1.0);
    REQUIRE(records.size() == 5);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].label == configs[i].label);
        CHECK(records[i].seconds > 0.0);
        CHECK(records[i].r_d_unfiltered > 0.0);
        CHECK(records[i].r_d_filtered >= records[i].r_d_unfiltered);
        CHECK(records[i].retained_fraction >= 0.0);
        CHECK(records[i].retained_fraction <= 1.0);
        CHECK(!records[i].bad_pixel_rate.has_value());
    }
}

TEST_CASE("reliability results are deterministic across reruns") {
    const auto pair = small_test_pair(62);
    const std::vector<BenchConfig> config{{"global_1x1", Algorithm::Global, {1, 1}, 8, 2, 60.0}};
    const auto first = run_benchmark(pair.left, pair.right, config, 1.0);
    const auto second = run_benchmark(pair.left, pair.right, config, 1.0);
    CHECK(first[0].r_d_unfiltered == second[0].r_d_unfiltered);
    CHECK(first[0].r_d_filtered == second[0].r_d_filtered);
    CHECK(first[0].retained_fraction == second[0].retained_fraction);
}

TEST_CASE("an empty config list is rejected") {
    const auto pair = small_test_pair(63);
    CHECK_THROWS_AS(run_benchmark(pair.left, pair.right, {}, 1.0), std::invalid_argument);
}

TEST_CASE("bad_pixel_rate on exact, shifted and mixed maps") {
    GrayMap truth(10, 4, 6.0);
    DisparityMap d(10, 4, 6);
    CHECK(bad_pixel_rate(d, truth, 1.0, 1.0) == 0.0);

    for (auto& v : d.values) v = 6 + 2;  // off by 2x threshold
    CHECK(bad_pixel_rate(d, truth, 1.0, 1.0) == 1.0);

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 10; ++j) d.at(i, j) = j < 5 ? 6 : 8;
    CHECK(bad_pixel_rate(d, truth, 1.0, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("bad_pixel_rate honors the truth scale and skips ne pixels") {
    GrayMap truth(6, 2, 24.0);  // encoded at 4x
    DisparityMap d(6, 2, 6);
    d.at(0, 0) = kNoEstimate;
    CHECK(bad_pixel_rate(d, truth, 0.5, 4.0) == 0.0);
    CHECK_THROWS_AS(bad_pixel_rate(d, GrayMap(5, 2), 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bad_pixel_rate(d, truth, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("ground truth scoring lands in the records") {
    const auto pair = small_test_pair(64);
    GrayMap truth(48, 36, 3.0);  // the synthetic pair's true shift
    const std::vector<BenchConfig> config{{"global_1x1", Algorithm::Global, {1, 1}, 8, 2, 60.0}};
    const auto records =
        run_benchmark(pair.left, pair.right, config, 1.0, {&truth, 1.0, 1.0});
    REQUIRE(records[0].bad_pixel_rate.has_value());
    CHECK(*records[0].bad_pixel_rate >= 0.0);
    CHECK(*records[0].bad_pixel_rate <= 1.0);
}

TEST_CASE("CSV report has a header and one row per config") {
    const auto pair = small_test_pair(65);
    const std::vector<BenchConfig> configs{
        {"global_1x1", Algorithm::Global, {1, 1}, 6, 1, 60.0},
        {"linegrow_vlg60", Algorithm::LineGrow, {1, 5}, 6, 1, 60.0},
    };
    const auto records = run_benchmark(pair.left, pair.right, configs, 1.0);
    const std::string csv = bench_csv(records);

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == bench_csv_header());
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.find(',') != std::string::npos);
    }
    CHECK(rows == 2);

    const std::string table = bench_table(records);
    CHECK(table.find("global_1x1") != std::string::npos);
    CHECK(table.find("linegrow_vlg60") != std::string::npos);
}
