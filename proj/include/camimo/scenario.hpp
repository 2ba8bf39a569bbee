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

#ifndef CAMIMO_SCENARIO_HPP
#define CAMIMO_SCENARIO_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace camimo
{

/// Full parameterization of one downlink delivery scenario.
///
/// The triple (snr_db, E0, sigma2) is redundant: snr_db = 10*log10(E0/sigma2)
/// must hold. resolve_power() fills a missing member; validate() enforces
/// consistency.
struct SystemConfig
{
    int M = 0;                 ///< BS antenna count
    int K = 0;                 ///< user count
    int L_b = 0;               ///< library size in files
    int L_u = 0;               ///< per-user cache capacity in files
    double file_size_mb = 1.0; ///< file size, metadata only (never simulated)
    double snr_db = 10.0;      ///< 10*log10(E0/sigma2)
    double E0 = 10.0;          ///< total BS transmit power
    double sigma2 = 1.0;       ///< receiver noise power
    std::vector<double> beta;  ///< per-user pathloss/shadowing coefficients, length K
    std::uint64_t seed = 1;

    /// Broadcasts a scalar pathloss coefficient to all K users.
    void set_uniform_beta(double b) { beta.assign(static_cast<std::size_t>(K), b); }
};

/// Throws std::invalid_argument on any violated invariant.
void validate_config(const SystemConfig& cfg);

/// Per-user cached file sets, requests and the resulting cache status
/// matrix. c(k,l) == 0 exactly when user l holds the file user k requested.
struct CacheState
{
    std::vector<std::vector<int>> cached; ///< per user, sorted distinct file indices
    std::vector<int> request;             ///< per user, requested file index
    std::vector<std::uint8_t> c;          ///< K*K row-major status matrix

    int K = 0;

    std::uint8_t c_at(int k, int l) const
    {
        return c[static_cast<std::size_t>(k) * static_cast<std::size_t>(K) + static_cast<std::size_t>(l)];
    }
};

/// Index sets derived from a CacheState.
///
/// active: users whose request is not self-cached (they need the BS).
/// U[k]: active users whose transmission still interferes at user k.
/// Lambda[k]: active users that the precoder of user k must protect.
/// Both vectors are indexed by user id and empty for inactive users.
struct DerivedSets
{
    std::vector<int> active;
    int K_bar = 0;
    std::vector<std::vector<int>> U;
    std::vector<std::vector<int>> Lambda;
    std::vector<int> N; ///< N[k] = |U[k]|
    std::vector<int> D; ///< D[k] = |Lambda[k]|
    std::vector<std::uint8_t> active_mask;

    bool is_active(int k) const { return active_mask[static_cast<std::size_t>(k)] != 0; }
};

/// Per-user transmit powers; zero for inactive users, summing to E0.
struct PowerAllocation
{
    std::vector<double> E;
};

/// Draws L_u distinct files per user, uniformly and independently across
/// users. With p = L_u/L_b every individual file is cached with
/// probability p.
std::vector<std::vector<int>> place_caches(const SystemConfig& cfg, std::mt19937_64& rng);

/// K i.i.d. requests, uniform over the library.
std::vector<int> draw_requests(const SystemConfig& cfg, std::mt19937_64& rng);

/// Assembles the status matrix from placements and requests.
CacheState build_cache_state(std::vector<std::vector<int>> cached, std::vector<int> request);

DerivedSets derive_sets(const CacheState& cs);

/// Uniform allocation E_k = E0/K_bar over active users.
/// Throws InfeasibleError when no user is active.
PowerAllocation uniform_power(const DerivedSets& ds, const SystemConfig& cfg);

/// Convenience: places caches, draws requests and derives everything from
/// one engine (placements first, then requests, then nothing else).
struct Scenario
{
    CacheState state;
    DerivedSets sets;
};
Scenario draw_scenario(const SystemConfig& cfg, std::mt19937_64& rng);

} // namespace camimo

#endif
