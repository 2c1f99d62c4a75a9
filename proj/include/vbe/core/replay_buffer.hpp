#pragma once

#include <cstddef>
#include <vector>

#include "vbe/common/random.hpp"
#include "vbe/core/transition.hpp"

namespace vbe::core {

inline constexpr std::size_t kDefaultReplayCapacity = 50000;

/// Fixed-capacity FIFO of transitions with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity = kDefaultReplayCapacity);

  std::size_t size() const { return data_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return data_.empty(); }

  /// Evicts the oldest transition once full.
  void add(Transition t);

  /// i = 0 is the oldest stored transition.
  const Transition& operator[](std::size_t i) const;

  /// m draws with replacement. Pointers stay valid until the next add().
  /// Throws CannotSample on an empty buffer.
  std::vector<const Transition*> sample(std::size_t m, Rng& rng) const;

  /// Same draws as sample(), as logical indices.
  std::vector<std::size_t> sample_indices(std::size_t m, Rng& rng) const;

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // slot of the oldest entry once full
  std::vector<Transition> data_;
};

}  // namespace vbe::core
