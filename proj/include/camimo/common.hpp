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

#ifndef CAMIMO_COMMON_HPP
#define CAMIMO_COMMON_HPP

#include <stdexcept>
#include <string>

namespace camimo
{

/// A requested scenario or precoder cannot be realized with the given
/// dimensions or cache state (e.g. ZF with more constraints than antennas,
/// or a delivery round with no active user).
class InfeasibleError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A numeric computation left its valid domain (negative regularizer,
/// divergent expectation, non-finite objective, ...).
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Result of a Monte Carlo estimation: sample mean and its standard error.
struct McEstimate
{
    double value = 0.0;
    double std_error = 0.0;
    long long draws = 0;
};

} // namespace camimo

#endif
