#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vispoly {

// Resource counters for one computation. Flag bits and word-sized scalars are tracked separately.
struct WorkspaceMeter {
  std::size_t flag_bits = 0;
  std::size_t scalar_slots = 0;
  std::size_t scalar_slots_peak = 0;
  std::uint64_t vertex_reads = 0;
  std::uint64_t output_writes = 0;
};

// Registers `slots` live word-sized scalars for the lifetime of a scope.
class ScalarFrame {
 public:
  ScalarFrame(WorkspaceMeter* meter, std::size_t slots) : meter_(meter), slots_(slots) {
    if (!meter_) return;
    meter_->scalar_slots += slots_;
    if (meter_->scalar_slots > meter_->scalar_slots_peak) meter_->scalar_slots_peak = meter_->scalar_slots;
  }
  ~ScalarFrame() {
    if (meter_) meter_->scalar_slots -= slots_;
  }
  ScalarFrame(const ScalarFrame&) = delete;
  ScalarFrame& operator=(const ScalarFrame&) = delete;

 private:
  WorkspaceMeter* meter_;
  std::size_t slots_;
};

// Fixed-size bit array that can only be cleared after construction.
class FlagArray {
 public:
  FlagArray() = default;
  explicit FlagArray(std::size_t size) : size_(size), words_((size + 63) / 64, ~std::uint64_t{0}) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  // Returns true when the bit was set before the call.
  bool clear(std::size_t k) {
    const std::uint64_t mask = std::uint64_t{1} << (k % 64);
    const bool was = words_[k / 64] & mask;
    words_[k / 64] &= ~mask;
    return was;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace vispoly
