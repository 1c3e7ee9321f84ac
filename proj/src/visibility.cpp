#include "vispoly/visibility.hpp"

namespace vispoly {

namespace {

class CountingWriter final : public PointWriter {
 public:
  CountingWriter(PointWriter& inner, WorkspaceMeter& meter) : inner_(inner), meter_(meter) {}
  void append(Point p) override {
    ++meter_.output_writes;
    inner_.append(p);
  }

 private:
  PointWriter& inner_;
  WorkspaceMeter& meter_;
};

void copy_boundary(const PolygonView& view, std::size_t start, PointWriter& sink) {
  const std::size_t n = view.size();
  ScalarFrame frame(view.meter(), 2);
  for (std::size_t k = 0; k < n; ++k) sink.append(view.at((start + k) % n));
}

void emit_chains(const PolygonView& view, const EffectiveFlags& flags, PointWriter& sink) {
  ScalarFrame frame(view.meter(), 7);
  CycleWalker w(view, flags.start_index, +1, flags.convention);
  std::size_t bit = 0;
  auto next_flagged = [&] {
    while (true) {
      if (w.critical()) {
        const bool set = flags.test(bit);
        ++bit;
        if (set) return;
      }
      w.advance();
    }
  };
  next_flagged();
  const std::size_t first = w.index();
  const CriticalKind first_kind = w.kind();
  if (flags.count_effective == 1) {
    emit_chain_visibility(view, {first, first, first_kind, first_kind}, sink, {true, false});
    return;
  }
  std::size_t cur = first;
  CriticalKind cur_kind = first_kind;
  for (std::size_t k = 1; k <= flags.count_effective; ++k) {
    std::size_t nxt = first;
    CriticalKind nxt_kind = first_kind;
    if (k < flags.count_effective) {
      w.advance();
      next_flagged();
      nxt = w.index();
      nxt_kind = w.kind();
    }
    emit_chain_visibility(view, {cur, nxt, cur_kind, nxt_kind}, sink, {k == 1, k < flags.count_effective});
    cur = nxt;
    cur_kind = nxt_kind;
  }
}

}  // namespace

RunStats visibility_polygon(const PolygonInput& input, PointWriter& target, RunOptions options) {
  RunStats stats;
  CountingWriter sink(target, stats.meter);
  stats.n = input.size();
  stats.mode = options.mode;
  const PolygonView view(input, &stats.meter);
  try {
    const EffectiveFlags flags = compute_effective(view, options.mode, options.convention);
    stats.c = flags.size();
    stats.c_effective = flags.count_effective;
    stats.merge_rounds = flags.merge_rounds;
    if (flags.count_effective == 0) {
      copy_boundary(view, flags.start_index, sink);
    } else {
      emit_chains(view, flags, sink);
    }
  } catch (const GeometryError& e) {
    stats.partial_output = true;
    if (e.kind() == ErrorKind::PipelineDiscrepancy) stats.discrepancies = e.indices();
    throw RunError(e, stats);
  }
  return stats;
}

std::vector<Point> constrained_visibility(const PolygonInput& input, RunOptions options, RunStats* stats) {
  OutputSink sink;
  RunStats s = visibility_polygon(input, sink, options);
  if (stats) *stats = s;
  return std::move(sink).take();
}

}  // namespace vispoly
