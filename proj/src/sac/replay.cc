// Copyright 2026 The spnav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spnav/sac/replay.h"

#include "spnav/error.h"

namespace spnav::sac {

ReplayBuffer::ReplayBuffer(size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw Error(ErrorCode::kInvalidArgument, "replay capacity must be positive");
  items_.reserve(std::min<size_t>(capacity, 1 << 16));
}

void ReplayBuffer::Push(Transition t) {
  std::lock_guard lock(mu_);
  if (items_.size() < capacity_) {
    items_.push_back(std::move(t));
  } else {
    items_[next_] = std::move(t);
  }
  next_ = (next_ + 1) % capacity_;
}

std::vector<Transition> ReplayBuffer::Sample(size_t batch, Rng& rng) const {
  std::lock_guard lock(mu_);
  if (items_.empty()) throw Error(ErrorCode::kEmptyInput, "cannot sample from an empty replay buffer");
  std::uniform_int_distribution<size_t> pick(0, items_.size() - 1);
  std::vector<Transition> out;
  out.reserve(batch);
  for (size_t i = 0; i < batch; ++i) out.push_back(items_[pick(rng)]);
  return out;
}

size_t ReplayBuffer::size() const {
  std::lock_guard lock(mu_);
  return items_.size();
}

Transition ReplayBuffer::At(size_t i) const {
  std::lock_guard lock(mu_);
  if (i >= items_.size()) throw Error(ErrorCode::kInvalidArgument, "replay index out of range");
  const size_t oldest = items_.size() < capacity_ ? 0 : next_;
  return items_[(oldest + i) % items_.size()];
}

}  // namespace spnav::sac
