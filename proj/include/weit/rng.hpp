// SPDX-License-Identifier: Apache-2.0
//
// weit: wireless energy and information transfer tradeoff library
// Copyright (C) 2026 The weit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace weit {

using Engine = std::mt19937_64;

/// Seed of the independent sub-stream used by draw `index`. Every draw gets its
/// own engine so results do not depend on evaluation order or thread count.
inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index)
{
    // splitmix64 finalizer over (master, index)
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Engine substream(std::uint64_t master_seed, std::uint64_t index)
{
    return Engine(substream_seed(master_seed, index));
}

}  // namespace weit
