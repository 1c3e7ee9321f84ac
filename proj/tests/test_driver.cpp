#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "vispoly/corpus.hpp"
#include "vispoly/errors.hpp"
#include "vispoly/oracle.hpp"
#include "vispoly/visibility.hpp"

namespace vispoly {
namespace {

template <typename W>
concept Readable = requires(const W& w) { w.size(); } || requires(const W& w) { w.points(); } ||
                   requires(const W& w) { w[0]; } || requires(const W& w) { w.begin(); };

static_assert(!Readable<PointWriter>, "the algorithm-facing sink must not expose reads");

std::vector<PolygonInput> corpus(std::size_t randoms, std::uint64_t seed0) {
  std::vector<PolygonInput> out;
  for (auto& np : fixed_corpus()) out.push_back(np.polygon);
  for (std::uint64_t s = seed0; s < seed0 + randoms; ++s) out.push_back(random_simple_polygon(4 + s % 197, s));
  return out;
}

TEST(Driver, ConvexSquareIsCopiedFromTheStartVertex) {
  const PolygonInput p({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {1, 1});
  RunStats s;
  const auto out = constrained_visibility(p, {}, &s);
  EXPECT_EQ(out, (std::vector<Point>{{4, 4}, {0, 4}, {0, 0}, {4, 0}}));
  EXPECT_EQ(s.c, 0u);
  EXPECT_EQ(s.meter.flag_bits, 0u);
}

TEST(Driver, NotchedSquare) {
  const auto out = constrained_visibility(notched_square());
  const std::vector<Point> want{{2.5, 3}, {1.5, 3}, {1.25, 4}, {0, 4}, {0, 0}, {4, 0}, {4, 4}, {2.75, 4}};
  ASSERT_EQ(out.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(out[i].x, want[i].x, 1e-12);
    EXPECT_NEAR(out[i].y, want[i].y, 1e-12);
  }
  EXPECT_TRUE(compare_cyclic(out, want, 1e-9));
}

TEST(Driver, SingleEffectiveCritical) {
  const PolygonInput p = two_notch();
  RunStats s;
  const auto out = constrained_visibility(p, {}, &s);
  EXPECT_EQ(s.c, 2u);
  EXPECT_EQ(s.c_effective, 1u);
  EXPECT_TRUE(compare_cyclic(out, brute_force_visibility(p), 1e-9));
}

TEST(Driver, MatchesOracleOnRandomPolygons) {
  for (std::uint64_t s = 1; s <= 150; ++s) {
    const PolygonInput p = random_simple_polygon(4 + s % 197, 10000 + s);
    EXPECT_TRUE(compare_cyclic(constrained_visibility(p), brute_force_visibility(p), 1e-9)) << "seed " << 10000 + s;
  }
}

TEST(Driver, ValidatedModeReportsNoDiscrepancies) {
  for (const PolygonInput& p : corpus(50, 20000)) {
    RunStats s;
    constrained_visibility(p, {Mode::Validated, TurnConvention::ReflexBoth}, &s);
    EXPECT_EQ(s.mode, Mode::Validated);
    EXPECT_TRUE(s.discrepancies.empty());
  }
}

TEST(Driver, DegenerateViewpointAbortsWithPartialStats) {
  const PolygonInput p = testing::with_viewpoint(notched_square(), {1.5, 1});
  OutputSink sink;
  try {
    visibility_polygon(p, sink);
    FAIL();
  } catch (const RunError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePosition);
    EXPECT_TRUE(e.stats().partial_output);
    EXPECT_EQ(e.stats().n, p.size());
  }
}

TEST(Driver, OutputWritesCountTheSink) {
  const PolygonInput p = comb(6, 300);
  OutputSink sink;
  const RunStats s = visibility_polygon(p, sink);
  EXPECT_EQ(s.meter.output_writes, std::move(sink).take().size());
}

TEST(DriverProperty, OutputIsASimpleCcwPolygonAroundQ) {
  for (const PolygonInput& p : corpus(300, 30000)) {
    const auto out = constrained_visibility(p);
    EXPECT_TRUE(testing::simple_polygon(out));
    EXPECT_GT(testing::signed_area(out), 0.0);
    EXPECT_EQ(testing::winding(out, p.viewpoint()), 1);
    EXPECT_LE(testing::signed_area(out), testing::signed_area(testing::vertices_of(p)) * (1 + 1e-12));
  }
}

TEST(DriverProperty, VisibleVerticesAppearAndOutputLiesOnBoundary) {
  for (const PolygonInput& p : corpus(300, 40000)) {
    const auto out = constrained_visibility(p);
    const double tol = 1e-9 * diameter(testing::vertices_of(p));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!visible_from(p, p.vertex(i))) continue;
      bool found = false;
      for (const Point& x : out) found = found || x == p.vertex(i);
      EXPECT_TRUE(found) << i;
    }
    for (const Point& x : out) EXPECT_LE(testing::boundary_distance(p, x), tol);
  }
}

TEST(DriverProperty, WorkspaceBounds) {
  for (const PolygonInput& p : corpus(200, 50000)) {
    RunStats s;
    constrained_visibility(p, {}, &s);
    EXPECT_LE(s.meter.vertex_reads, 24 * p.size());
    EXPECT_LE(s.meter.scalar_slots_peak, 64u);
    EXPECT_EQ(s.meter.flag_bits, s.c);
    EXPECT_LE(s.c_effective, s.c);
    EXPECT_LT(s.c, s.n);
  }
}

TEST(DriverProperty, Idempotent) {
  for (const PolygonInput& p : corpus(50, 60000)) {
    RunStats s1, s2;
    const auto a = constrained_visibility(p, {}, &s1);
    const auto b = constrained_visibility(p, {}, &s2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(s1.meter.vertex_reads, s2.meter.vertex_reads);
  }
}

}  // namespace
}  // namespace vispoly
