#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "vispoly/chain_visibility.hpp"
#include "vispoly/corpus.hpp"
#include "vispoly/effective_critical.hpp"
#include "vispoly/errors.hpp"
#include "vispoly/oracle.hpp"

namespace vispoly {
namespace {

constexpr double kPi = std::numbers::pi;

Chain chain_between(const PolygonInput& p, std::size_t a, std::size_t b) {
  return {a, b, classify_vertex(p, a), classify_vertex(p, b)};
}

std::vector<Point> emit(const PolygonInput& p, const Chain& c, WorkspaceMeter* m = nullptr, EmitOptions o = {}) {
  OutputSink sink;
  emit_chain_visibility(PolygonView(p, m), c, sink, o);
  return std::move(sink).take();
}

void expect_points(const std::vector<Point>& got, const std::vector<Point>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].x, want[i].x, 1e-12) << i;
    EXPECT_NEAR(got[i].y, want[i].y, 1e-12) << i;
  }
}

// Chains between consecutive effective criticals, in the order the driver visits them.
std::vector<Chain> chains_of(const PolygonInput& p) {
  const auto idx = flagged_indices(p, compute_effective(PolygonView(p), Mode::StrictPaper));
  std::vector<Chain> out;
  if (idx.size() == 1) out.push_back(chain_between(p, idx[0], idx[0]));
  if (idx.size() < 2) return out;
  for (std::size_t k = 0; k < idx.size(); ++k) out.push_back(chain_between(p, idx[k], idx[(k + 1) % idx.size()]));
  return out;
}

std::size_t chain_length(const PolygonInput& p, const Chain& c) {
  const std::size_t n = p.size();
  return c.start == c.end ? n + 1 : (c.end + n - c.start) % n + 1;
}

// Angle of x measured counterclockwise from the ray q->from, in [0, 2pi).
double relative_angle(Point q, Point from, Point x) {
  double a = std::atan2(x.y - q.y, x.x - q.x) - std::atan2(from.y - q.y, from.x - q.x);
  while (a < 0) a += 2 * kPi;
  while (a >= 2 * kPi) a -= 2 * kPi;
  return a;
}

TEST(ChainWindow, NotchCeilingHasNoWindow) {
  const PolygonInput p = notched_square();
  const Chain c = chain_between(p, 4, 5);
  EXPECT_EQ(c.start_kind, CriticalKind::CriticalMin);
  EXPECT_EQ(c.end_kind, CriticalKind::CriticalMax);
  const ChainWindow w = chain_window(PolygonView(p), c);
  EXPECT_EQ(w.a, p.vertex(4));
  EXPECT_EQ(w.b, p.vertex(5));
}

TEST(ChainWindow, LongChainHitsTheTopEdge) {
  const PolygonInput p = notched_square();
  const ChainWindow w = chain_window(PolygonView(p), chain_between(p, 5, 4));
  EXPECT_NEAR(w.a.x, 1.25, 1e-12);
  EXPECT_NEAR(w.a.y, 4.0, 1e-12);
  EXPECT_NEAR(w.b.x, 2.75, 1e-12);
  EXPECT_NEAR(w.b.y, 4.0, 1e-12);
  EXPECT_GE(w.min1, distance(p.viewpoint(), p.vertex(5)));
  EXPECT_GE(w.min2, distance(p.viewpoint(), p.vertex(4)));
  EXPECT_NEAR(w.min1, std::hypot(0.75, 3.0), 1e-12);
  EXPECT_NEAR(w.min2, std::hypot(0.75, 3.0), 1e-12);
}

TEST(ChainWindow, NonCriticalEndpointsHaveNoWindow) {
  const PolygonInput p({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {1, 1});
  const ChainWindow w = chain_window(PolygonView(p), {0, 2, CriticalKind::NotCritical, CriticalKind::NotCritical});
  EXPECT_EQ(w.a, p.vertex(0));
  EXPECT_EQ(w.b, p.vertex(2));
}

TEST(ChainWindow, MissingWindowEdgeIsReported) {
  // Claim the ceiling chain starts at a maximum: nothing on the chain lies behind it.
  const PolygonInput p = notched_square();
  const Chain bogus{4, 5, CriticalKind::CriticalMax, CriticalKind::CriticalMax};
  try {
    chain_window(PolygonView(p), bogus);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowNotFound);
  }
}

TEST(EmitChain, NotchCeiling) {
  const PolygonInput p = notched_square();
  expect_points(emit(p, chain_between(p, 4, 5)), {{2.5, 3}, {1.5, 3}});
}

TEST(EmitChain, LongChain) {
  const PolygonInput p = notched_square();
  expect_points(emit(p, chain_between(p, 5, 4)),
                {{1.5, 3}, {1.25, 4}, {0, 4}, {0, 0}, {4, 0}, {4, 4}, {2.75, 4}, {2.5, 3}});
}

TEST(EmitChain, FullyVisibleChainIsCopied) {
  const PolygonInput p({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {1, 1});
  expect_points(emit(p, {1, 3, CriticalKind::NotCritical, CriticalKind::NotCritical}), {{4, 0}, {4, 4}, {0, 4}});
}

TEST(EmitChain, EndpointSuppression) {
  const PolygonInput p = notched_square();
  expect_points(emit(p, chain_between(p, 4, 5), nullptr, {false, true}), {{1.5, 3}});
  expect_points(emit(p, chain_between(p, 4, 5), nullptr, {true, false}), {{2.5, 3}});
}

TEST(EmitChain, SingleChainAroundTheCycle) {
  const PolygonInput p = two_notch();
  const auto chains = chains_of(p);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].start, chains[0].end);
  const auto out = emit(p, chains[0], nullptr, {true, false});
  EXPECT_TRUE(compare_cyclic(out, brute_force_visibility(p), 1e-9));
}

class ChainProperty : public ::testing::Test {
 protected:
  static std::vector<PolygonInput> corpus() {
    std::vector<PolygonInput> out;
    for (auto& np : fixed_corpus()) out.push_back(np.polygon);
    for (std::uint64_t s = 1; s <= 250; ++s) out.push_back(random_simple_polygon(4 + s % 150, 500 + s));
    return out;
  }
};

TEST_F(ChainProperty, EmittedPointsAreVisibleAndAngularlyOrdered) {
  for (const PolygonInput& p : corpus()) {
    const Point q = p.viewpoint();
    for (const Chain& c : chains_of(p)) {
      const auto out = emit(p, c);
      const double scale = diameter(testing::vertices_of(p));
      const double width = c.start == c.end ? 2 * kPi : relative_angle(q, p.vertex(c.start), p.vertex(c.end));
      long double swept = 0;
      for (std::size_t k = 0; k < out.size(); ++k) {
        EXPECT_TRUE(testing::sees(p, out[k], scale));
        if (k == 0) continue;
        const long double step = testing::sweep_angle(q, out[k - 1], out[k]);
        EXPECT_GE(step, -1e-9L);
        swept += step;
      }
      // Every step is under a half turn, so the steps add up to the wedge (a full turn for a
      // whole-cycle chain).
      EXPECT_NEAR(static_cast<double>(swept), width, 1e-9);
    }
  }
}

TEST_F(ChainProperty, ReadsAndSlotsPerChain) {
  for (const PolygonInput& p : corpus()) {
    for (const Chain& c : chains_of(p)) {
      WorkspaceMeter m;
      emit(p, c, &m);
      EXPECT_LE(m.vertex_reads, 2 * chain_length(p, c) + 8);
      EXPECT_LE(m.scalar_slots_peak, 16u);
    }
  }
}

TEST_F(ChainProperty, MatchesOracleInsideTheWedge) {
  for (const PolygonInput& p : corpus()) {
    const Point q = p.viewpoint();
    const auto oracle = brute_force_visibility(p);
    const double scale = diameter(testing::vertices_of(p));
    for (const Chain& c : chains_of(p)) {
      const auto out = emit(p, c);
      const double width = c.start == c.end ? 2 * kPi : relative_angle(q, p.vertex(c.start), p.vertex(c.end));
      auto near_any = [&](Point x, const std::vector<Point>& pts) {
        for (const Point& y : pts) {
          if (distance(x, y) <= 1e-9 * scale) return true;
        }
        return false;
      };
      // Oracle corners strictly inside the wedge are emitted by this chain.
      for (const Point& x : oracle) {
        const double a = relative_angle(q, p.vertex(c.start), x);
        if (a > 1e-9 && a < width - 1e-9) {
          EXPECT_TRUE(near_any(x, out));
        }
      }
      // Every emitted point lies on the oracle polygon's boundary.
      for (const Point& x : out) {
        double best = INFINITY;
        for (std::size_t k = 0; k < oracle.size(); ++k) {
          best = std::min(best, testing::point_segment_distance(x, oracle[k], oracle[(k + 1) % oracle.size()]));
        }
        EXPECT_LE(best, 1e-9 * scale);
      }
    }
  }
}

}  // namespace
}  // namespace vispoly
