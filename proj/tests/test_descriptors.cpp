#include <cmath>

#include "doctest.h"
#include "mstruct/descriptors.hpp"
#include "mstruct/synth.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace mstruct;
using namespace mstruct::descriptors;

namespace {

const auto kAxes = {Axis::X, Axis::Y, Axis::Z};

}  // namespace

TEST_CASE("two-point correlation on the line fixture, periodic") {
  const auto vol = helpers::line_fixture();
  const auto p = two_point_correlation(vol, 1, Direction::X, 3, BoundaryMode::Periodic);
  const std::vector<double> expected{0.75, 0.5, 0.5, 0.5};
  CHECK(p.values == expected);
  CHECK(p.n_samples == std::vector<std::int64_t>{4, 4, 4, 4});
  CHECK(p.n_hits == std::vector<std::int64_t>{3, 2, 2, 2});
}

TEST_CASE("two-point correlation on the line fixture, truncated") {
  const auto vol = helpers::line_fixture();
  const auto p = two_point_correlation(vol, 1, Direction::X, 1, BoundaryMode::Truncated);
  CHECK(p.values[0] == 0.75);
  CHECK(p.values[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(p.n_hits[1] == 1);
  CHECK(p.n_samples[1] == 3);
}

TEST_CASE("all-phase-1 volume has S2 = 1 everywhere") {
  const auto vol = synth::generate({synth::BernoulliSpec{1.0}, {4, 4, 4}}, 0);
  for (auto dir : {Direction::X, Direction::Y, Direction::Z, Direction::AxisAverage}) {
    const auto p = two_point_correlation(vol, 1, dir, 4, BoundaryMode::Periodic);
    for (double v : p.values) CHECK(v == 1.0);
  }
}

TEST_CASE("literal cluster variant equals S2 normalized by phi^2") {
  const auto vol = helpers::line_fixture();
  const auto c = two_point_cluster(vol, 1, Direction::X, 1, BoundaryMode::Periodic,
                                   ClusterVariant::LiteralS8, Connectivity::Face6);
  CHECK(c.values[1] == doctest::Approx(0.5 / 0.5625).epsilon(1e-15));
  CHECK(c.values[0] == doctest::Approx(1.0 / 0.75).epsilon(1e-15));
}

TEST_CASE("literal cluster variant rejects an empty phase") {
  const auto vol = synth::generate({synth::BernoulliSpec{0.0}, {4, 4, 4}}, 0);
  CHECK_THROWS_WITH_AS(
      two_point_cluster(vol, 1, Direction::X, 2, BoundaryMode::Periodic,
                        ClusterVariant::LiteralS8, Connectivity::Face6),
      doctest::Contains("EmptyPhase"), Error);
}

TEST_CASE("same-cluster variant on a single component is 1 everywhere") {
  const auto vol = synth::generate({synth::BernoulliSpec{1.0}, {4, 4, 4}}, 0);
  const auto c = two_point_cluster(vol, 1, Direction::Y, 4, BoundaryMode::Periodic,
                                   ClusterVariant::SameCluster, Connectivity::Face6);
  for (double v : c.values) CHECK(v == 1.0);
}

TEST_CASE("same-cluster variant separates the two singletons of [1,0,1,0]") {
  const auto vol = helpers::phase_volume({4, 1, 1}, {1, 0, 1, 0});
  const auto c = two_point_cluster(vol, 1, Direction::X, 2, BoundaryMode::Periodic,
                                   ClusterVariant::SameCluster, Connectivity::Face6);
  CHECK(c.values[2] == 0.0);
  CHECK(c.values[0] == 0.5);  // each origin pairs with itself
}

TEST_CASE("lineal path on the line fixture, periodic") {
  const auto vol = helpers::line_fixture();
  const auto p = lineal_path(vol, 1, Direction::X, 3, BoundaryMode::Periodic);
  CHECK(p.values == std::vector<double>{0.75, 0.5, 0.25, 0.0});
}

TEST_CASE("lineal path is 1 everywhere on a full volume") {
  const auto vol = synth::generate({synth::BernoulliSpec{1.0}, {3, 3, 3}}, 0);
  const auto p = lineal_path(vol, 1, Direction::Z, 3, BoundaryMode::Periodic);
  for (double v : p.values) CHECK(v == 1.0);
}

TEST_CASE("descriptors match the brute-force oracle exactly on 20 seeds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto vol = helpers::bernoulli({8, 8, 8}, 0.5, seed);
    for (BoundaryMode boundary : {BoundaryMode::Periodic, BoundaryMode::Truncated}) {
      const int r_max = boundary == BoundaryMode::Periodic ? 8 : 7;
      for (Axis axis : kAxes) {
        const auto dir = static_cast<Direction>(axis);

        const auto s2 = two_point_correlation(vol, 1, dir, r_max, boundary);
        const auto s2_ref = oracles::s2_counts(vol, 1, axis, r_max, boundary);
        REQUIRE(s2.n_hits == s2_ref.hits);
        REQUIRE(s2.n_samples == s2_ref.samples);

        const auto l = lineal_path(vol, 1, dir, r_max, boundary);
        const auto l_ref = oracles::lineal_counts(vol, 1, axis, r_max, boundary);
        REQUIRE(l.n_hits == l_ref.hits);
        REQUIRE(l.n_samples == l_ref.samples);

        const auto c2 = two_point_cluster(vol, 1, dir, r_max, boundary,
                                          ClusterVariant::SameCluster,
                                          Connectivity::Face6);
        const auto c2_ref =
            oracles::same_cluster_counts(vol, 1, axis, r_max, boundary, false);
        REQUIRE(c2.n_hits == c2_ref.hits);
        REQUIRE(c2.n_samples == c2_ref.samples);

        // Literal variant: S2 / phi^2 within one rounding unit.
        const auto lit = two_point_cluster(vol, 1, dir, r_max, boundary,
                                           ClusterVariant::LiteralS8,
                                           Connectivity::Face6);
        std::int64_t ones = 0;
        for (auto v : vol.data) ones += v;
        const double phi = static_cast<double>(ones) / 512.0;
        for (int r = 0; r <= r_max; ++r) {
          const double back = lit.values[r] * (phi * phi);
          REQUIRE(back == doctest::Approx(s2.values[r]).epsilon(1e-15));
        }
      }
    }
  }
}

TEST_CASE("descriptor identities hold on 20 seeds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto vol = helpers::bernoulli({8, 8, 8}, 0.4, seed);
    std::int64_t ones = 0;
    for (auto v : vol.data) ones += v;
    const double phi = static_cast<double>(ones) / 512.0;

    for (Axis axis : kAxes) {
      const auto dir = static_cast<Direction>(axis);
      const auto s2p = two_point_correlation(vol, 1, dir, 8, BoundaryMode::Periodic);
      const auto s2t = two_point_correlation(vol, 1, dir, 7, BoundaryMode::Truncated);
      const auto lp = lineal_path(vol, 1, dir, 8, BoundaryMode::Periodic);

      // S2(0) = phi exactly, both boundary modes.
      CHECK(s2p.values[0] == phi);
      CHECK(s2t.values[0] == phi);
      // L(0) = phi; joint probability bounded by the marginal.
      CHECK(lp.values[0] == phi);
      for (int r = 0; r <= 8; ++r) {
        CHECK(s2p.values[r] <= phi);
        CHECK(lp.values[r] <= s2p.values[r]);
        if (r > 0) CHECK(lp.values[r] <= lp.values[r - 1]);
        // Periodic symmetry S2(r) = S2(n - r), exact by pair bijection.
        CHECK(s2p.n_hits[r] == s2p.n_hits[8 - r]);
        CHECK(s2p.values[r] == s2p.values[8 - r]);
      }

      // Same-cluster C2 never exceeds S2.
      const auto c2 = two_point_cluster(vol, 1, dir, 8, BoundaryMode::Periodic,
                                        ClusterVariant::SameCluster,
                                        Connectivity::Face6);
      for (int r = 0; r <= 8; ++r) CHECK(c2.n_hits[r] <= s2p.n_hits[r]);
    }
  }
}

TEST_CASE("axis average is the unweighted mean of the per-axis profiles") {
  const auto vol = helpers::bernoulli({6, 6, 6}, 0.5, 3);
  const auto avg =
      two_point_correlation(vol, 1, Direction::AxisAverage, 3, BoundaryMode::Periodic);
  for (int r = 0; r <= 3; ++r) {
    double mean = 0;
    for (Axis axis : kAxes) {
      mean += two_point_correlation(vol, 1, static_cast<Direction>(axis), 3,
                                    BoundaryMode::Periodic)
                  .values[r];
    }
    CHECK(avg.values[r] == doctest::Approx(mean / 3.0).epsilon(1e-15));
  }
  CHECK(avg.direction == Direction::AxisAverage);
}

TEST_CASE("lag limits differ between periodic and truncated") {
  const auto vol = helpers::bernoulli({4, 4, 4}, 0.5, 0);
  CHECK_NOTHROW(two_point_correlation(vol, 1, Direction::X, 4, BoundaryMode::Periodic));
  CHECK_THROWS_WITH_AS(
      two_point_correlation(vol, 1, Direction::X, 5, BoundaryMode::Periodic),
      doctest::Contains("LagTooLarge"), Error);
  CHECK_NOTHROW(two_point_correlation(vol, 1, Direction::X, 3, BoundaryMode::Truncated));
  CHECK_THROWS_WITH_AS(
      two_point_correlation(vol, 1, Direction::X, 4, BoundaryMode::Truncated),
      doctest::Contains("LagTooLarge"), Error);
}

TEST_CASE("descriptors validate the phase label") {
  const auto vol = helpers::bernoulli({4, 4, 4}, 0.5, 0);
  CHECK_THROWS_WITH_AS(
      two_point_correlation(vol, 2, Direction::X, 2, BoundaryMode::Periodic),
      doctest::Contains("BadPhase"), Error);
  const auto gray = VoxelVolume::create({2, 2, 2}, VolumeKind::Gray, 0, 1.0,
                                        std::vector<std::uint8_t>(8, 7));
  CHECK_THROWS_WITH_AS(lineal_path(gray, 0, Direction::X, 1, BoundaryMode::Periodic),
                       doctest::Contains("BadPhase"), Error);
}

TEST_CASE("connected components: basics") {
  const auto full = synth::generate({synth::BernoulliSpec{1.0}, {4, 4, 4}}, 0);
  CHECK(connected_components(full, 1, Connectivity::Face6, BoundaryMode::Truncated)
            .count == 1);

  const auto alternating = helpers::phase_volume({4, 1, 1}, {1, 0, 1, 0});
  CHECK(connected_components(alternating, 1, Connectivity::Face6,
                             BoundaryMode::Truncated)
            .count == 2);
}

TEST_CASE("corner-touching voxels split under Face6 and join under Full26") {
  // Voxels (0,0,0) and (1,1,1) share only a corner.
  auto vol = helpers::phase_volume({2, 2, 2}, {1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(connected_components(vol, 1, Connectivity::Face6, BoundaryMode::Truncated)
            .count == 2);
  CHECK(connected_components(vol, 1, Connectivity::Full26, BoundaryMode::Truncated)
            .count == 1);
}

TEST_CASE("periodic boundary joins components across opposite faces") {
  const auto vol = helpers::phase_volume({4, 1, 1}, {1, 0, 0, 1});
  CHECK(connected_components(vol, 1, Connectivity::Face6, BoundaryMode::Truncated)
            .count == 2);
  CHECK(connected_components(vol, 1, Connectivity::Face6, BoundaryMode::Periodic)
            .count == 1);
}

TEST_CASE("component labelling matches the BFS oracle over seeds") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto vol = helpers::bernoulli({6, 6, 6}, 0.35, seed);
    for (bool full26 : {false, true}) {
      for (BoundaryMode boundary : {BoundaryMode::Truncated, BoundaryMode::Periodic}) {
        const auto conn = full26 ? Connectivity::Full26 : Connectivity::Face6;
        CHECK(connected_components(vol, 1, conn, boundary).count ==
              oracles::component_count(vol, 1, full26, boundary));
      }
    }
  }
}

TEST_CASE("local porosity on a uniform volume is a single point") {
  const auto vol = synth::generate({synth::BernoulliSpec{1.0}, {4, 4, 4}}, 0);
  const auto cdf = local_porosity_cdf(vol, 1, 2, 1);
  REQUIRE(cdf.points.size() == 1);
  CHECK(cdf.points[0] == std::pair<double, double>{1.0, 1.0});
}

TEST_CASE("local porosity on the half-split fixture") {
  const auto vol = synth::generate({synth::HalfSplitSpec{Axis::Z}, {4, 4, 4}}, 0);
  const auto cdf = local_porosity_cdf(vol, 1, 2, 2);
  REQUIRE(cdf.points.size() == 2);
  CHECK(cdf.points[0] == std::pair<double, double>{0.0, 0.5});
  CHECK(cdf.points[1] == std::pair<double, double>{1.0, 1.0});
}

TEST_CASE("local porosity rejects oversized windows") {
  const auto vol = helpers::bernoulli({4, 4, 4}, 0.5, 0);
  CHECK_THROWS_WITH_AS(local_porosity_cdf(vol, 1, 5, 1),
                       doctest::Contains("WindowTooLarge"), Error);
}

TEST_CASE("local porosity cdf is sorted with final fraction 1") {
  const auto vol = helpers::bernoulli({8, 8, 8}, 0.5, 12);
  const auto cdf = local_porosity_cdf(vol, 1, 3, 2);
  REQUIRE(!cdf.points.empty());
  for (std::size_t i = 1; i < cdf.points.size(); ++i) {
    CHECK(cdf.points[i].first > cdf.points[i - 1].first);
    CHECK(cdf.points[i].second >= cdf.points[i - 1].second);
  }
  CHECK(cdf.points.back().second == 1.0);
  for (const auto& [value, fraction] : cdf.points) {
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
  }
}

TEST_CASE("average_profiles") {
  const auto vol = helpers::line_fixture();
  const auto p = two_point_correlation(vol, 1, Direction::X, 3, BoundaryMode::Periodic);

  SUBCASE("averaging identical profiles is the identity") {
    const auto avg = average_profiles({p, p, p});
    CHECK(avg.values == p.values);
  }
  SUBCASE("plain arithmetic mean") {
    RadialProfile a = p, b = p;
    a.values = {1.0, 0.0, 0.0, 0.0};
    b.values = {0.0, 1.0, 0.0, 0.0};
    const auto avg = average_profiles({a, b});
    CHECK(avg.values[0] == 0.5);
    CHECK(avg.values[1] == 0.5);
  }
  SUBCASE("mismatched r_max is rejected") {
    auto shorter = two_point_correlation(vol, 1, Direction::X, 2, BoundaryMode::Periodic);
    CHECK_THROWS_WITH_AS(average_profiles({p, shorter}),
                         doctest::Contains("MixedShapes"), Error);
  }
}
