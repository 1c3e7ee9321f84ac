#include "vispoly/effective_critical.hpp"

#include <algorithm>

#include "vispoly/errors.hpp"
#include "vispoly/oracle.hpp"

namespace vispoly {

namespace {

std::size_t next_index(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }

// Half-turn counter of the unwound angle of the walked vertex relative to a reference ray q->ref:
// turns == floor(psi / pi) where psi is the unwound angle minus the reference angle.
class HalfTurns {
 public:
  HalfTurns(Point q, Point ref) : q_(q) { reset(ref); }

  void reset(Point ref) {
    ref_ = ref;
    last_ = ref;
    last_parity_ = 0;
    turns_ = 0;
  }

  void move_to(Point x) {
    const int parity = parity_of(x);
    if (parity != last_parity_) {
      const int o = orient_sign(q_, last_, x);
      if (o == 0) throw GeometryError(ErrorKind::DegeneratePosition, "edge collinear with viewpoint");
      turns_ += o;
    }
    last_ = x;
    last_parity_ = parity;
  }

  long turns() const { return turns_; }

 private:
  int parity_of(Point x) const {
    const int s = orient_sign(q_, ref_, x);
    if (s != 0) return s > 0 ? 0 : 1;
    return dot_sign(q_, ref_, q_, x) > 0 ? 0 : 1;
  }

  Point q_, ref_, last_;
  int last_parity_ = 0;
  long turns_ = 0;
};

// Shared body of both sweeps. step = +1 keeps running maxima and anchors on critical-max vertices;
// step = -1 is the mirror image with minima and critical-min vertices.
void sweep(const PolygonView& view, EffectiveFlags& flags, std::size_t start, std::size_t bit, int step) {
  const std::size_t c = flags.size();
  if (c == 0) return;
  const std::size_t n = view.size();
  // c, n, start, bit, step, anchor kind, is_record, steps, limit, plus 8 words of HalfTurns.
  ScalarFrame frame(view.meter(), 17);
  const CriticalKind anchor_kind = step > 0 ? CriticalKind::CriticalMax : CriticalKind::CriticalMin;
  auto advance_bit = [&](std::size_t b) { return step > 0 ? (b + 1) % c : (b + c - 1) % c; };
  // A vertex beats the record when its angle moved past it in the sweep direction.
  auto beyond = [&](long turns) { return step > 0 ? turns >= 0 : turns <= -1; };

  CycleWalker w(view, start, step, flags.convention);
  HalfTurns record(view.viewpoint(), w.point());
  bool is_record = true;
  std::size_t steps = 0;
  while (steps < n) {
    if (w.critical()) {
      bit = advance_bit(bit);
      if (w.kind() == anchor_kind && is_record) {
        // Pocket behind the anchor: everything until the angle first returns past it is hidden.
        const std::size_t limit = steps + n;
        while (true) {
          w.advance();
          ++steps;
          if (steps > limit) throw GeometryError(ErrorKind::DegeneratePosition, "sweep failed to leave a pocket");
          record.move_to(w.point());
          if (beyond(record.turns())) break;
          if (w.critical()) {
            bit = advance_bit(bit);
            flags.clear(bit);
          }
        }
        record.reset(w.point());
        is_record = true;
        continue;
      }
    }
    w.advance();
    ++steps;
    record.move_to(w.point());
    is_record = beyond(record.turns());
    if (is_record) record.reset(w.point());
  }
}

// One refinement pass in the walking direction. A flagged critical vertex is cleared when an edge
// walked after it blocks the segment from q; returns whether any bit was cleared.
bool refine_pass(const PolygonView& view, EffectiveFlags& flags, int step) {
  // bit, two anchors of 4 words, one word of status bits, the walked edge start (3), here, s.
  ScalarFrame frame(view.meter(), 15);
  auto advance_bit = [&](std::size_t b) {
    return step > 0 ? (b + 1) % flags.size() : (b + flags.size() - 1) % flags.size();
  };

  CycleWalker w(view, flags.start_index, step, flags.convention);
  std::size_t bit = (step > 0 || w.critical()) ? 0 : flags.size() - 1;
  while (!(w.critical() && flags.test(bit))) {
    if (w.critical()) bit = advance_bit(bit);
    w.advance();
  }

  // Two anchors under test: the current flagged critical and the last one that survived.
  // Each is tested against every edge walked past it until it is decided.
  struct Anchor {
    Point point;
    std::size_t index = 0;
    std::size_t bit = 0;
    bool blocked = false;
    bool live = false;
  };
  Anchor current{w.point(), w.index(), bit, false, true};
  Anchor previous;
  bool killed = false;
  auto test = [&](Anchor& a, std::size_t from_index, Point from, Point to) {
    if (!a.live || a.blocked || from_index == a.index || w.index() == a.index) return;
    a.blocked = segment_blocks(view.viewpoint(), a.point, from, to);
  };
  auto kill = [&](const Anchor& a) {
    if (a.live && a.blocked && flags.test(a.bit)) {
      flags.clear(a.bit);
      killed = true;
    }
  };
  bit = advance_bit(bit);
  for (std::size_t s = 1; s <= view.size(); ++s) {
    const Point from = w.point();
    const std::size_t from_index = w.index();
    w.advance();
    test(current, from_index, from, w.point());
    test(previous, from_index, from, w.point());
    if (!w.critical()) continue;
    const std::size_t here = bit;
    bit = advance_bit(bit);
    if (!flags.test(here) && s != view.size()) continue;
    kill(previous);
    if (previous.blocked) previous.live = false;
    if (current.blocked) {
      kill(current);
    } else {
      previous = current;
    }
    current = {w.point(), w.index(), here, false, true};
  }
  kill(previous);
  return killed;
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::StrictPaper ? "strict-paper" : "validated"; }

std::size_t start_vertex(const PolygonView& view) {
  const std::size_t n = view.size();
  const Point q = view.viewpoint();
  ScalarFrame frame(view.meter(), 5);
  std::size_t best = 0;
  Point best_p = view.at(0);
  for (std::size_t i = 1; i < n; ++i) {
    const Point p = view.at(i);
    if (angle_less(q, p, best_p)) {
      best = i;
      best_p = p;
    } else if (!angle_less(q, best_p, p) && distance(q, p) < distance(q, best_p)) {
      best = i;
      best_p = p;
    }
  }
  return best;
}

EffectiveFlags make_flags(const PolygonView& view, TurnConvention conv) {
  EffectiveFlags flags;
  const std::size_t c = critical_count(view, conv);
  flags.bits = FlagArray(c);
  flags.count_effective = c;
  flags.convention = conv;
  flags.start_index = start_vertex(view);
  if (view.meter()) view.meter()->flag_bits = c;
  return flags;
}

SweepOrigin sweep_origin(const PolygonView& view, const EffectiveFlags& flags) {
  const std::size_t n = view.size();
  const Point q = view.viewpoint();
  ScalarFrame frame(view.meter(), 9);
  SweepOrigin origin;
  long double best = -1.0L;
  const Point first = view.at(0);
  Point a = first;
  for (std::size_t i = 0; i < n; ++i) {
    const Point b = i + 1 == n ? first : view.at(i + 1);
    const long double ex = static_cast<long double>(b.x) - a.x, ey = static_cast<long double>(b.y) - a.y;
    const long double wx = static_cast<long double>(q.x) - a.x, wy = static_cast<long double>(q.y) - a.y;
    long double t = (wx * ex + wy * ey) / (ex * ex + ey * ey);
    t = std::clamp(t, 0.0L, 1.0L);
    const long double dx = wx - t * ex, dy = wy - t * ey;
    const long double d2 = dx * dx + dy * dy;
    if (best < 0.0L || d2 < best) {
      best = d2;
      origin.edge = i;
    }
    a = b;
  }
  const std::size_t c = flags.size();
  if (c == 0) return origin;
  const std::size_t target = next_index(origin.edge, n);
  std::size_t count = 0;
  CycleWalker w(view, flags.start_index, +1, flags.convention);
  while (w.index() != target) {
    if (w.critical()) ++count;
    w.advance();
  }
  origin.first_bit = count % c;
  return origin;
}

void forward_sweep(const PolygonView& view, EffectiveFlags& flags, const SweepOrigin& origin) {
  const std::size_t n = view.size();
  // The sweep advances the bit counter before using it, so start one behind.
  const std::size_t c = flags.size();
  if (c == 0) return;
  sweep(view, flags, next_index(origin.edge, n), (origin.first_bit + c - 1) % c, +1);
}

void backward_sweep(const PolygonView& view, EffectiveFlags& flags, const SweepOrigin& origin) {
  const std::size_t c = flags.size();
  if (c == 0) return;
  sweep(view, flags, origin.edge, origin.first_bit, -1);
}

void merge_effective(const PolygonView& view, EffectiveFlags& flags) {
  flags.merge_rounds = 0;
  if (flags.count_effective == 0) return;
  ScalarFrame frame(view.meter(), 2);
  bool killed = true;
  while (killed) {
    ++flags.merge_rounds;
    killed = refine_pass(view, flags, +1);
    killed = refine_pass(view, flags, -1) || killed;
  }
}

EffectiveFlags compute_effective(const PolygonView& view, Mode mode, TurnConvention conv) {
  EffectiveFlags flags = make_flags(view, conv);
  if (flags.size() == 0) return flags;
  {
    ScalarFrame frame(view.meter(), 2);
    const SweepOrigin origin = sweep_origin(view, flags);
    forward_sweep(view, flags, origin);
    backward_sweep(view, flags, origin);
  }
  merge_effective(view, flags);
  if (mode == Mode::Validated) {
    const auto bad = find_discrepancies(view.input(), flags);
    if (!bad.empty()) {
      throw GeometryError(ErrorKind::PipelineDiscrepancy, "effective flags disagree with segment visibility", bad);
    }
  }
  return flags;
}

std::vector<std::size_t> find_discrepancies(const PolygonInput& input, const EffectiveFlags& flags) {
  std::vector<std::size_t> bad;
  if (flags.size() == 0) return bad;
  const PolygonView plain(input);
  CycleWalker w(plain, flags.start_index, +1, flags.convention);
  std::size_t bit = 0;
  for (std::size_t s = 0; s < input.size(); ++s, w.advance()) {
    if (!w.critical()) continue;
    if (visible_from(input, w.point()) != flags.test(bit)) bad.push_back(w.index());
    ++bit;
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

std::vector<std::size_t> flagged_indices(const PolygonInput& input, const EffectiveFlags& flags) {
  std::vector<std::size_t> out;
  if (flags.size() == 0) return out;
  const PolygonView plain(input);
  CycleWalker w(plain, flags.start_index, +1, flags.convention);
  std::size_t bit = 0;
  for (std::size_t s = 0; s < input.size(); ++s, w.advance()) {
    if (!w.critical()) continue;
    if (flags.test(bit)) out.push_back(w.index());
    ++bit;
  }
  return out;
}

}  // namespace vispoly
