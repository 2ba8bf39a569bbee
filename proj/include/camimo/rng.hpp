// SPDX-License-Identifier: Apache-2.0
//
// camimo: link-level simulation and analysis toolkit for cache-aided
// massive MIMO downlink
// Copyright (C) 2026 the camimo authors
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

#ifndef CAMIMO_RNG_HPP
#define CAMIMO_RNG_HPP

#include <cstdint>
#include <random>

namespace camimo
{

/// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent engine for a (seed, stream) pair. Streams indexed by trial,
/// grid point, etc. may be consumed in any order on any thread; results
/// depend only on the pair, never on scheduling.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream)
{
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream ^ 0xD1B54A32D192ED03ULL)));
}

} // namespace camimo

#endif
