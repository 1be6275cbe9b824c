// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <random>

namespace rkout {

/// Master seed plus a stream index. Every sampler takes one of these, so a
/// trial is fully determined by (master, stream) within one build.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  /// Derives a child seed; used to give sub-steps of a trial their own stream.
  [[nodiscard]] Seed child(std::uint64_t salt) const;
};

using Engine = std::mt19937_64;

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Engine seeded from both halves of the seed through SplitMix64, so that
/// neighbouring stream indices give unrelated sequences.
Engine make_engine(const Seed& seed);

}  // namespace rkout
