#include "vbe/core/replay_buffer.hpp"

#include "vbe/common/errors.hpp"

namespace vbe::core {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw InvalidParameter("replay buffer: capacity must be positive");
  data_.reserve(std::min<std::size_t>(capacity_, 4096));
}

void ReplayBuffer::add(Transition t) {
  if (data_.size() < capacity_) {
    data_.push_back(std::move(t));
    return;
  }
  data_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

const Transition& ReplayBuffer::operator[](std::size_t i) const {
  if (i >= data_.size()) throw InvalidParameter("replay buffer: index out of range");
  return data_[(head_ + i) % data_.size()];
}

std::vector<std::size_t> ReplayBuffer::sample_indices(std::size_t m, Rng& rng) const {
  if (data_.empty()) throw CannotSample("replay buffer: cannot sample from an empty buffer");
  std::vector<std::size_t> out(m);
  const int hi = static_cast<int>(data_.size()) - 1;
  for (auto& i : out) i = static_cast<std::size_t>(uniform_int(rng, 0, hi));
  return out;
}

std::vector<const Transition*> ReplayBuffer::sample(std::size_t m, Rng& rng) const {
  std::vector<const Transition*> out;
  out.reserve(m);
  for (std::size_t i : sample_indices(m, rng)) out.push_back(&(*this)[i]);
  return out;
}

}  // namespace vbe::core
