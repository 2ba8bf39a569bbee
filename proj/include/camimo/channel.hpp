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

#ifndef CAMIMO_CHANNEL_HPP
#define CAMIMO_CHANNEL_HPP

#include <armadillo>
#include <cstdint>
#include <random>

#include "camimo/common.hpp"
#include "camimo/scenario.hpp"

namespace camimo
{

/// One block-fading draw. Row k of G holds the unit-variance fading
/// coefficients of user k; row k of H is the same row scaled by
/// sqrt(beta_k).
struct ChannelRealization
{
    arma::cx_mat G; ///< K x M fading matrix, entries CN(0,1)
    arma::cx_mat H; ///< K x M channel matrix

    arma::cx_vec h(int k) const { return H.row(k).st(); }
    arma::cx_vec g(int k) const { return G.row(k).st(); }
};

/// i.i.d. Rayleigh draw. Entries are generated in column-major order from
/// the passed engine, so a given engine state yields a bit-identical
/// realization everywhere.
ChannelRealization draw_channel(const SystemConfig& cfg, std::mt19937_64& rng);

/// Monte Carlo estimate of E{1/||h_k||^2} for an M-antenna CN(0,beta)
/// channel; closed form is 1/(beta*(M-1)). Throws NumericalError for M = 1,
/// where the expectation diverges.
McEstimate inv_norm_expectation_mc(int M, double beta, long long trials, std::uint64_t seed);

} // namespace camimo

#endif
