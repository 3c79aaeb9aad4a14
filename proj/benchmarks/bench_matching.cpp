#include <benchmark/benchmark.h>

#include <random>

#include "stereo/energy.hpp"
#include "stereo/global_matcher.hpp"
#include "stereo/line_grower.hpp"

using namespace stereo;

namespace {

ColorImage random_image(int width, int height, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    ColorImage img(width, height);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(dist(rng));
    return img;
}

struct Pair {
    ColorImage left;
    ColorImage right;
};

Pair shifted(int width, int height, int shift, unsigned seed) {
    Pair pair{ColorImage(width, height), random_image(width, height, seed)};
    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<int> dist(0, 255);
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j)
            for (int k = 0; k < 3; ++k)
                pair.left.at(i, j, k) = j >= shift ? pair.right.at(i, j - shift, k)
                                                   : static_cast<std::uint8_t>(dist(rng));
    return pair;
}

}  // namespace

static void EnergyVolume(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const Pair pair = shifted(side, side, 3, 7);
    for (auto _ : state) {
        auto volume = compute_energy_volume(pair.left, pair.right, {3, 3}, 16);
        benchmark::DoNotOptimize(volume.slices.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EnergyVolume)->RangeMultiplier(2)->Range(32, 128)->Complexity();

static void BoxSmoothIteration(benchmark::State& state) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 100.0);
    GrayMap slice(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto& v : slice.data) v = dist(rng);
    for (auto _ : state) {
        auto out = box_smooth(slice, {3, 3}, 1);
        benchmark::DoNotOptimize(out.data.data());
    }
}
BENCHMARK(BoxSmoothIteration)->RangeMultiplier(2)->Range(64, 256);

static void GlobalMatch(benchmark::State& state) {
    const Pair pair = shifted(96, 72, 3, 13);
    for (auto _ : state) {
        auto result = global_match(pair.left, pair.right, {1, 1}, 16, 10);
        benchmark::DoNotOptimize(result.disparity.values.data());
    }
}
BENCHMARK(GlobalMatch);

static void LineGrowMatch(benchmark::State& state) {
    const Pair pair = shifted(96, 72, 3, 13);
    for (auto _ : state) {
        auto result = line_grow_match(pair.left, pair.right, {{1, 5}, 16, 60.0});
        benchmark::DoNotOptimize(result.disparity.values.data());
    }
}
BENCHMARK(LineGrowMatch);

BENCHMARK_MAIN();
