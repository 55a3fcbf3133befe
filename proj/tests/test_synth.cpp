#include <numeric>

#include "doctest.h"
#include "mstruct/synth.hpp"
#include "test_helpers.hpp"

using namespace mstruct;
using namespace mstruct::synth;

namespace {

std::int64_t count_ones(const VoxelVolume& vol) {
  return std::accumulate(vol.data.begin(), vol.data.end(), std::int64_t{0});
}

}  // namespace

TEST_CASE("bernoulli extremes are forced") {
  CHECK(count_ones(generate({BernoulliSpec{0.0}, {4, 4, 4}}, 9)) == 0);
  CHECK(count_ones(generate({BernoulliSpec{1.0}, {4, 4, 4}}, 9)) == 64);
}

TEST_CASE("same spec and seed reproduce the same volume") {
  const FixtureSpec spec{BernoulliSpec{0.5}, {8, 8, 8}};
  CHECK(generate(spec, 42).data == generate(spec, 42).data);
  CHECK(generate(spec, 42).data != generate(spec, 43).data);
}

TEST_CASE("sphere voxel count matches the exhaustive distance scan") {
  const FixtureSpec spec{SphereSpec{{3, 3, 3}, 2.0}, {7, 7, 7}};
  const VoxelVolume vol = generate(spec, 0);

  std::int64_t expected = 0;
  for (int z = 0; z < 7; ++z)
    for (int y = 0; y < 7; ++y)
      for (int x = 0; x < 7; ++x) {
        const double d2 = (x - 3.0) * (x - 3.0) + (y - 3.0) * (y - 3.0) +
                          (z - 3.0) * (z - 3.0);
        expected += d2 <= 4.0;
      }
  CHECK(count_ones(vol) == expected);
  CHECK(expected == 33);  // lattice points within distance 2
}

TEST_CASE("laminate layers follow floor(k/thickness) mod 2") {
  const VoxelVolume vol = generate({LaminateSpec{Axis::Y, 2}, {3, 8, 3}}, 0);
  for (int y = 0; y < 8; ++y) {
    const std::uint8_t want = static_cast<std::uint8_t>((y / 2) % 2);
    for (int z = 0; z < 3; ++z)
      for (int x = 0; x < 3; ++x) CHECK(vol.at(x, y, z) == want);
  }
}

TEST_CASE("laminate with dim divisible by 2t splits phases exactly in half") {
  const VoxelVolume vol = generate({LaminateSpec{Axis::Z, 2}, {4, 4, 8}}, 0);
  CHECK(count_ones(vol) == static_cast<std::int64_t>(vol.voxel_count()) / 2);
}

TEST_CASE("channels hit the rounded column count exactly") {
  for (double fraction : {0.0, 0.25, 0.3, 0.5, 1.0}) {
    const VoxelVolume vol = generate({ChannelsSpec{Axis::Z, fraction}, {8, 8, 4}}, 5);
    const std::int64_t want_columns =
        std::llround(fraction * 64.0);
    CHECK(count_ones(vol) == want_columns * 4);
    // Columns span the full axis: every z layer holds the same pattern.
    for (int z = 1; z < 4; ++z)
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) CHECK(vol.at(x, y, z) == vol.at(x, y, 0));
  }
}

TEST_CASE("half split marks the lower half along the axis") {
  const VoxelVolume vol = generate({HalfSplitSpec{Axis::X}, {4, 2, 2}}, 0);
  for (int x = 0; x < 4; ++x) {
    const std::uint8_t want = x < 2 ? 1 : 0;
    for (int z = 0; z < 2; ++z)
      for (int y = 0; y < 2; ++y) CHECK(vol.at(x, y, z) == want);
  }
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_WITH_AS(generate({BernoulliSpec{1.5}, {4, 4, 4}}, 0),
                       doctest::Contains("BadSpec"), Error);
  CHECK_THROWS_WITH_AS(generate({LaminateSpec{Axis::Z, 0}, {4, 4, 4}}, 0),
                       doctest::Contains("BadSpec"), Error);
  CHECK_THROWS_WITH_AS(generate({ChannelsSpec{Axis::Z, -0.1}, {4, 4, 4}}, 0),
                       doctest::Contains("BadSpec"), Error);
  CHECK_THROWS_WITH_AS(generate({SphereSpec{{0, 0, 0}, -1}, {4, 4, 4}}, 0),
                       doctest::Contains("BadSpec"), Error);
  CHECK_THROWS_WITH_AS(generate({BernoulliSpec{0.5}, {0, 4, 4}}, 0),
                       doctest::Contains("BadSpec"), Error);
}

TEST_CASE("complement swaps the binary labels") {
  const VoxelVolume zeros = generate({BernoulliSpec{0.0}, {3, 3, 3}}, 0);
  CHECK(count_ones(complement(zeros)) == 27);

  const VoxelVolume vol = helpers::bernoulli({6, 6, 6}, 0.3, 11);
  CHECK(complement(complement(vol)).data == vol.data);

  const VoxelVolume half = generate({HalfSplitSpec{Axis::Z}, {4, 4, 4}}, 0);
  CHECK(count_ones(half) + count_ones(complement(half)) ==
        static_cast<std::int64_t>(half.voxel_count()));
}

TEST_CASE("complement requires a binary phase volume") {
  auto tri = helpers::phase_volume({2, 1, 1}, {0, 2}, 3);
  CHECK_THROWS_WITH_AS(complement(tri), doctest::Contains("NotBinary"), Error);
}
