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

#ifndef CAMIMO_PARALLEL_HPP
#define CAMIMO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace camimo
{

/// Number of worker threads used when a caller passes 0.
unsigned default_threads();

/// Runs body(i) for i in [0, n). Work items must be independent; callers
/// make results scheduling-invariant by writing into per-index slots and
/// reducing in index order afterwards. The first exception thrown by any
/// worker is rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

} // namespace camimo

#endif
