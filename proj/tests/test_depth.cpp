#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "stereo/depth.hpp"
#include "testutil.hpp"

using namespace stereo;

TEST_CASE("depth follows Z = f T / d") {
    DisparityMap d(3, 1);
    d.values = {10, kNoEstimate, 0};
    const DepthMap depth = depth_from_disparity(d, {30.0, 20.0});
    CHECK(depth.at(0, 0) == doctest::Approx(60.0));
    CHECK(is_no_depth(depth.at(0, 1)));  // ne propagates
    CHECK(is_no_depth(depth.at(0, 2)));  // zero disparity has no finite depth
}

TEST_CASE("depth is finite for every disparity in the search range") {
    DisparityMap d(40, 1);
    for (int j = 0; j < 40; ++j) d.at(0, j) = j + 1;
    const DepthMap depth = depth_from_disparity(d, {30.0, 20.0});
    for (int j = 0; j < 40; ++j) {
        CHECK(std::isfinite(depth.at(0, j)));
        CHECK(depth.at(0, j) > 0.0);
    }
}

TEST_CASE("Z * d recovers f * T at every estimated pixel") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> disp(1, 40);
    DisparityMap d(16, 12);
    for (auto& v : d.values) v = disp(rng);
    const CameraRig rig{30.0, 20.0};
    const DepthMap depth = depth_from_disparity(d, rig);
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        const double product = depth.z[i] * d.values[i];
        CHECK(std::abs(product - rig.f * rig.t) <= 1e-9 * rig.f * rig.t);
    }
}

TEST_CASE("rig parameters are validated") {
    const DisparityMap d(2, 2, 1);
    CHECK_THROWS_AS(depth_from_disparity(d, {0.0, 20.0}), std::invalid_argument);
    CHECK_THROWS_AS(depth_from_disparity(d, {30.0, -1.0}), std::invalid_argument);
}

TEST_CASE("projection reproduces the worked coordinates") {
    const CameraRig rig{30.0, 20.0};
    DepthMap depth(8, 8);
    depth.at(4, 6) = 60.0;   // (Z - f)/f = 1
    depth.at(0, 0) = 90.0;   // row = col = 0 pins X = Y = 0
    depth.at(2, 3) = 30.0;   // Z = f pins X = Y = 0

    ColorImage colors(8, 8);
    colors.at(4, 6, 0) = 200;
    colors.at(4, 6, 2) = 50;

    const PointCloud cloud = project_xyz(depth, rig, colors);
    REQUIRE(cloud.points.size() == 3);

    bool found_worked = false, found_origin = false, found_zf = false;
    for (const CloudPoint& p : cloud.points) {
        if (p.z == doctest::Approx(60.0)) {
            CHECK(p.x == doctest::Approx(4.0));
            CHECK(p.y == doctest::Approx(6.0));
            CHECK(p.r == 200);
            CHECK(p.g == 0);
            CHECK(p.b == 50);
            found_worked = true;
        } else if (p.z == doctest::Approx(90.0)) {
            CHECK(p.x == doctest::Approx(0.0));
            CHECK(p.y == doctest::Approx(0.0));
            found_origin = true;
        } else if (p.z == doctest::Approx(30.0)) {
            CHECK(p.x == doctest::Approx(0.0));
            CHECK(p.y == doctest::Approx(0.0));
            found_zf = true;
        }
    }
    CHECK(found_worked);
    CHECK(found_origin);
    CHECK(found_zf);
}

TEST_CASE("median filter leaves constant maps unchanged and is idempotent") {
    DisparityMap d(9, 9, 7);
    const DisparityMap once = median_filter(d, 5);
    CHECK(once.values == d.values);
    CHECK(median_filter(once, 5).values == once.values);
}

TEST_CASE("median filter removes a single outlier") {
    DisparityMap d(9, 9, 5);
    d.at(4, 4) = 40;
    const DisparityMap out = median_filter(d, 5);
    for (int v : out.values) CHECK(v == 5);
}

TEST_CASE("median filter keeps all-ne maps ne") {
    const DisparityMap d(5, 4);
    const DisparityMap out = median_filter(d, 5);
    for (int v : out.values) CHECK(v == kNoEstimate);
}

TEST_CASE("median takes the lower middle value on even counts") {
    // 2x2 map with window 3: every window sees all four values {1,2,3,9},
    // whose lower middle is 2.
    DisparityMap d(2, 2);
    d.values = {1, 2, 3, 9};
    const DisparityMap out = median_filter(d, 3);
    for (int v : out.values) CHECK(v == 2);
}

TEST_CASE("median output values come from the input value set") {
    std::mt19937 rng(52);
    std::uniform_int_distribution<int> disp(0, 9);
    DisparityMap d(12, 10);
    std::set<int> values;
    for (auto& v : d.values) {
        v = disp(rng) < 2 ? kNoEstimate : disp(rng);
        if (v != kNoEstimate) values.insert(v);
    }
    const DisparityMap out = median_filter(d, 3);
    for (int v : out.values)
        if (v != kNoEstimate) CHECK(values.count(v) == 1);
}

TEST_CASE("median filter rejects even or nonpositive windows") {
    const DisparityMap d(4, 4, 1);
    CHECK_THROWS_AS(median_filter(d, 4), std::invalid_argument);
    CHECK_THROWS_AS(median_filter(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(median_filter(d, -3), std::invalid_argument);
}

TEST_CASE("PLY export writes a parseable vertex list") {
    const auto dir = testutil::scratch_dir("ply");

    PointCloud empty;
    export_ply(empty, (dir / "empty.ply").string());
    {
        std::ifstream in(dir / "empty.ply");
        std::string line;
        std::getline(in, line);
        CHECK(line == "ply");
        bool saw_count = false;
        while (std::getline(in, line))
            if (line == "element vertex 0") saw_count = true;
        CHECK(saw_count);
    }

    PointCloud one;
    one.points.push_back({1.5, -2.0, 60.0, 10, 20, 30});
    export_ply(one, (dir / "one.ply").string());
    {
        std::ifstream in(dir / "one.ply");
        std::string line;
        while (std::getline(in, line) && line != "end_header") {
        }
        REQUIRE(std::getline(in, line));
        std::istringstream vertex(line);
        double x, y, z;
        int r, g, b;
        vertex >> x >> y >> z >> r >> g >> b;
        CHECK(x == doctest::Approx(1.5));
        CHECK(y == doctest::Approx(-2.0));
        CHECK(z == doctest::Approx(60.0));
        CHECK(r == 10);
        CHECK(g == 20);
        CHECK(b == 30);
    }
    std::filesystem::remove_all(dir);
}
