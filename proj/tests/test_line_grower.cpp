#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stereo/line_grower.hpp"
#include "testutil.hpp"

using namespace stereo;

namespace {

double mean_length(const std::vector<int>& lengths) {
    if (lengths.empty()) return 0.0;
    return std::accumulate(lengths.begin(), lengths.end(), 0.0) / lengths.size();
}

}  // namespace

TEST_CASE("identical images grow every row from a single root") {
    std::mt19937 rng(31);
    const ColorImage img = testutil::random_color(12, 6, rng);
    const GrowConfig cfg{{1, 1}, 5, 60.0};
    const auto [d, status] = line_grow_match(img, img, cfg);

    CHECK(status.count(PointStatus::Idle) == 0);
    CHECK(status.count(PointStatus::NotProcessed) == 0);
    CHECK(status.count(PointStatus::Root) == std::size_t(img.height));
    for (int i = 0; i < img.height; ++i) {
        CHECK(status.at(i, 0) == PointStatus::Root);
        for (int j = 0; j < img.width; ++j) {
            CHECK(d.at(i, j) == 0);
            if (j > 0) CHECK(status.at(i, j) == PointStatus::Region);
        }
    }
}

TEST_CASE("window margins become idle pixels with ne disparity") {
    std::mt19937 rng(32);
    const ColorImage img = testutil::random_color(12, 4, rng);
    const GrowConfig cfg{{1, 5}, 5, 60.0};
    const auto [d, status] = line_grow_match(img, img, cfg);
    for (int i = 0; i < img.height; ++i) {
        for (int j = 0; j < img.width; ++j) {
            if (j + 5 <= img.width) {
                CHECK(d.at(i, j) == 0);
            } else {
                CHECK(status.at(i, j) == PointStatus::Idle);
                CHECK(d.at(i, j) == kNoEstimate);
            }
        }
    }
}

TEST_CASE("v_lg = 0 accepts only exact-zero energies") {
    std::mt19937 rng(33);
    auto pair = testutil::shifted_pair(20, 8, 2, rng);
    testutil::add_noise(pair.right, 6, rng);

    const GrowConfig strict{{1, 3}, 5, 0.0};
    const GrowConfig loose{{1, 3}, 5, 25.0};
    const auto strict_run = line_grow_match(pair.left, pair.right, strict);
    const auto loose_run = line_grow_match(pair.left, pair.right, loose);

    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 20; ++j) {
            if (!strict_run.disparity.has(i, j)) continue;
            const double e = oracle::energy_at(pair.left, pair.right, i, j,
                                               strict_run.disparity.at(i, j), 1, 3);
            CHECK(e == 0.0);
        }
    }
    CHECK(strict_run.status.count(PointStatus::Idle) >=
          loose_run.status.count(PointStatus::Idle));
}

TEST_CASE("every accepted pixel satisfies the growing threshold") {
    std::mt19937 rng(34);
    auto pair = testutil::shifted_pair(24, 10, 3, rng);
    testutil::add_noise(pair.left, 10, rng);

    const GrowConfig cfg{{1, 5}, 8, 40.0};
    const auto [d, status] = line_grow_match(pair.left, pair.right, cfg);
    for (int i = 0; i < d.height; ++i) {
        for (int j = 0; j < d.width; ++j) {
            if (!d.has(i, j)) continue;
            const double e = oracle::energy_at(pair.left, pair.right, i, j, d.at(i, j), 1, 5);
            CHECK(e <= 40.0);
        }
    }
}

TEST_CASE("a higher threshold never has more idle pixels") {
    std::mt19937 rng(35);
    auto pair = testutil::shifted_pair(32, 12, 3, rng);
    testutil::add_noise(pair.right, 12, rng);

    const auto tight = line_grow_match(pair.left, pair.right, {{1, 5}, 8, 10.0});
    const auto loose = line_grow_match(pair.left, pair.right, {{1, 5}, 8, 60.0});
    CHECK(tight.status.count(PointStatus::Idle) >= loose.status.count(PointStatus::Idle));
}

TEST_CASE("rows are independent") {
    std::mt19937 rng(36);
    auto pair = testutil::shifted_pair(18, 6, 2, rng);
    testutil::add_noise(pair.right, 8, rng);
    const GrowConfig cfg{{1, 3}, 5, 30.0};
    const auto base = line_grow_match(pair.left, pair.right, cfg);

    // Swap two rows in both images; the outputs must swap identically.
    auto swap_rows = [](ColorImage& img, int a, int b) {
        for (int j = 0; j < img.width; ++j)
            for (int k = 0; k < 3; ++k) std::swap(img.at(a, j, k), img.at(b, j, k));
    };
    swap_rows(pair.left, 1, 4);
    swap_rows(pair.right, 1, 4);
    const auto swapped = line_grow_match(pair.left, pair.right, cfg);

    for (int j = 0; j < 18; ++j) {
        CHECK(swapped.disparity.at(1, j) == base.disparity.at(4, j));
        CHECK(swapped.disparity.at(4, j) == base.disparity.at(1, j));
        CHECK(swapped.disparity.at(0, j) == base.disparity.at(0, j));
    }
}

TEST_CASE("region points always follow a root in the same row") {
    std::mt19937 rng(37);
    auto pair = testutil::shifted_pair(26, 9, 2, rng);
    testutil::add_noise(pair.left, 15, rng);
    const auto [d, status] = line_grow_match(pair.left, pair.right, {{1, 4}, 6, 35.0});

    CHECK(status.count(PointStatus::NotProcessed) == 0);
    for (int i = 0; i < status.height; ++i) {
        bool in_region = false;  // saw a root with no idle since
        for (int j = 0; j < status.width; ++j) {
            switch (status.at(i, j)) {
                case PointStatus::Root: in_region = true; break;
                case PointStatus::Region: CHECK(in_region); break;
                case PointStatus::Idle: in_region = false; break;
                case PointStatus::NotProcessed: break;
            }
        }
    }
}

TEST_CASE("line grower validates its configuration") {
    std::mt19937 rng(38);
    const ColorImage img = testutil::random_color(8, 4, rng);
    const ColorImage tall = testutil::random_color(8, 5, rng);
    CHECK_THROWS_AS(line_grow_match(img, tall, GrowConfig{}), std::invalid_argument);
    CHECK_THROWS_AS(line_grow_match(img, img, {{2, 3}, 5, 10.0}), std::invalid_argument);
    CHECK_THROWS_AS(line_grow_match(img, img, {{1, 3}, 5, -1.0}), std::invalid_argument);
}

TEST_CASE("segment_lengths summarizes grown runs") {
    PointStatusMap all_idle(6, 2);
    for (auto& s : all_idle.statuses) s = PointStatus::Idle;
    CHECK(segment_lengths(all_idle).empty());

    PointStatusMap one_row(6, 1);
    one_row.at(0, 0) = PointStatus::Idle;
    one_row.at(0, 1) = PointStatus::Root;
    for (int j = 2; j < 6; ++j) one_row.at(0, j) = PointStatus::Region;
    const auto lengths = segment_lengths(one_row);
    REQUIRE(lengths.size() == 1);
    CHECK(lengths[0] == 5);
}

TEST_CASE("looser thresholds grow lines at least as long on average") {
    std::mt19937 rng(39);
    auto pair = testutil::shifted_pair(40, 16, 3, rng);
    testutil::add_noise(pair.right, 10, rng);

    const auto loose = line_grow_match(pair.left, pair.right, {{1, 5}, 8, 60.0});
    const auto tight = line_grow_match(pair.left, pair.right, {{1, 5}, 8, 10.0});
    CHECK(mean_length(segment_lengths(loose.status)) >=
          mean_length(segment_lengths(tight.status)));
}
