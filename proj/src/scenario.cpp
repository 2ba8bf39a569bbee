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

#include "camimo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "camimo/common.hpp"

namespace camimo
{

void validate_config(const SystemConfig& cfg)
{
    if (cfg.M < 1)
        throw std::invalid_argument("M must be positive");
    if (cfg.K < 1)
        throw std::invalid_argument("K must be positive");
    if (cfg.L_b < 1)
        throw std::invalid_argument("L_b must be positive");
    if (cfg.L_u < 0 || cfg.L_u > cfg.L_b)
        throw std::invalid_argument("L_u must satisfy 0 <= L_u <= L_b");
    if (!(cfg.file_size_mb > 0.0))
        throw std::invalid_argument("file_size_mb must be positive");
    if (!(cfg.E0 > 0.0))
        throw std::invalid_argument("E0 must be positive");
    if (!(cfg.sigma2 > 0.0))
        throw std::invalid_argument("sigma2 must be positive");
    if (cfg.beta.size() != static_cast<std::size_t>(cfg.K))
        throw std::invalid_argument("beta must have one entry per user");
    for (double b : cfg.beta)
        if (!(b > 0.0))
            throw std::invalid_argument("all beta_k must be positive");

    double snr_from_powers = 10.0 * std::log10(cfg.E0 / cfg.sigma2);
    if (std::abs(snr_from_powers - cfg.snr_db) > 1e-9 * std::max(1.0, std::abs(cfg.snr_db)))
        throw std::invalid_argument("snr_db inconsistent with E0/sigma2");
}

std::vector<std::vector<int>> place_caches(const SystemConfig& cfg, std::mt19937_64& rng)
{
    std::vector<std::vector<int>> cached(static_cast<std::size_t>(cfg.K));
    if (cfg.L_u == 0)
        return cached;

    std::vector<int> files(static_cast<std::size_t>(cfg.L_b));
    for (auto& sets : cached)
    {
        std::iota(files.begin(), files.end(), 0);
        // partial Fisher-Yates: first L_u slots become the cache
        for (int i = 0; i < cfg.L_u; ++i)
        {
            std::uniform_int_distribution<int> pick(i, cfg.L_b - 1);
            std::swap(files[static_cast<std::size_t>(i)], files[static_cast<std::size_t>(pick(rng))]);
        }
        sets.assign(files.begin(), files.begin() + cfg.L_u);
        std::sort(sets.begin(), sets.end());
    }
    return cached;
}

std::vector<int> draw_requests(const SystemConfig& cfg, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, cfg.L_b - 1);
    std::vector<int> request(static_cast<std::size_t>(cfg.K));
    for (auto& r : request)
        r = pick(rng);
    return request;
}

CacheState build_cache_state(std::vector<std::vector<int>> cached, std::vector<int> request)
{
    CacheState cs;
    cs.K = static_cast<int>(request.size());
    cs.cached = std::move(cached);
    cs.request = std::move(request);
    cs.c.assign(static_cast<std::size_t>(cs.K) * static_cast<std::size_t>(cs.K), 1);

    for (int k = 0; k < cs.K; ++k)
    {
        int wanted = cs.request[static_cast<std::size_t>(k)];
        for (int l = 0; l < cs.K; ++l)
        {
            const auto& set = cs.cached[static_cast<std::size_t>(l)];
            if (std::binary_search(set.begin(), set.end(), wanted))
                cs.c[static_cast<std::size_t>(k) * static_cast<std::size_t>(cs.K) + static_cast<std::size_t>(l)] = 0;
        }
    }
    return cs;
}

DerivedSets derive_sets(const CacheState& cs)
{
    DerivedSets ds;
    int K = cs.K;
    ds.U.resize(static_cast<std::size_t>(K));
    ds.Lambda.resize(static_cast<std::size_t>(K));
    ds.N.assign(static_cast<std::size_t>(K), 0);
    ds.D.assign(static_cast<std::size_t>(K), 0);
    ds.active_mask.assign(static_cast<std::size_t>(K), 0);

    for (int k = 0; k < K; ++k)
    {
        if (cs.c_at(k, k) == 1)
        {
            ds.active.push_back(k);
            ds.active_mask[static_cast<std::size_t>(k)] = 1;
        }
    }
    ds.K_bar = static_cast<int>(ds.active.size());

    for (int k : ds.active)
    {
        auto& U_k = ds.U[static_cast<std::size_t>(k)];
        auto& L_k = ds.Lambda[static_cast<std::size_t>(k)];
        for (int l : ds.active)
        {
            if (l == k)
                continue;
            if (cs.c_at(l, k) == 1)
                U_k.push_back(l); // user l's stream is not cancelable at k
            if (cs.c_at(k, l) == 1)
                L_k.push_back(l); // user l cannot cancel k's stream itself
        }
        ds.N[static_cast<std::size_t>(k)] = static_cast<int>(U_k.size());
        ds.D[static_cast<std::size_t>(k)] = static_cast<int>(L_k.size());
    }
    return ds;
}

PowerAllocation uniform_power(const DerivedSets& ds, const SystemConfig& cfg)
{
    if (ds.K_bar < 1)
        throw InfeasibleError("no active users: nothing to transmit");

    PowerAllocation pa;
    pa.E.assign(static_cast<std::size_t>(cfg.K), 0.0);
    double per_user = cfg.E0 / static_cast<double>(ds.K_bar);
    for (int k : ds.active)
        pa.E[static_cast<std::size_t>(k)] = per_user;
    return pa;
}

Scenario draw_scenario(const SystemConfig& cfg, std::mt19937_64& rng)
{
    Scenario sc;
    auto cached = place_caches(cfg, rng);
    auto request = draw_requests(cfg, rng);
    sc.state = build_cache_state(std::move(cached), std::move(request));
    sc.sets = derive_sets(sc.state);
    return sc;
}

} // namespace camimo
