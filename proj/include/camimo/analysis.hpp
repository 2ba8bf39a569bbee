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

#ifndef CAMIMO_ANALYSIS_HPP
#define CAMIMO_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "camimo/common.hpp"
#include "camimo/rates.hpp"
#include "camimo/scenario.hpp"

namespace camimo
{

/// Closed-form statistics of the probabilistic caching model: per-file
/// caching probability p, the probability p_u that one given user
/// interferes with another, and the expected set sizes for K users.
struct CachingStatistics
{
    double p = 0.0;
    double p_u = 0.0;
    double p_u1 = 0.0; ///< contribution of the two users requesting different files
    double p_u2 = 0.0; ///< contribution of the two users requesting the same file
    double expected_K_bar = 0.0;
    double expected_N = 0.0;
    double expected_D = 0.0;
};

CachingStatistics caching_statistics(int L_b, int L_u, int K);

/// Empirical p_u: simulates independent (cache, request) pairs for two
/// users under per-file Bernoulli(p) caching and counts the event
/// {c_ll = 1, c_kk = 1, c_lk = 1}.
McEstimate mc_validate_pu(int L_b, int L_u, long long draws, std::uint64_t seed);

// ---- regularizer search ----------------------------------------------------

struct XiOptimum
{
    double xi = 0.0;
    double rate = 0.0;
};

/// Maximizes rate_fn over xi in [xi_lo, xi_hi]: 32 log-spaced coarse
/// probes, golden-section on log10(xi) around the best probe down to 1e-4
/// of the full log-range, then one parabolic refinement step. The returned
/// rate is never below the best probe. Throws NumericalError if rate_fn
/// returns a non-finite value anywhere.
XiOptimum optimize_xi(const std::function<double(double)>& rate_fn, double xi_lo = 1e-4, double xi_hi = 1e2);

// ---- large-system per-user rate expressions --------------------------------
//
// The figure sweeps evaluate the uniform-power bounds with expected counts
// in the limit M, K -> infinity at fixed rho0 = M/K, where
// K_bar/K -> 1-p and N_k/K = D_k/K -> p_u.

struct LimitPoint
{
    double rho0;   ///< antennas per user M/K
    double p;      ///< cache probability L_u/L_b
    double p_u;    ///< interference probability
    double beta;
    double E0;
    double sigma2;
};

double mrt_rate_limit(const LimitPoint& pt, bool baseline);
/// Throws InfeasibleError when the ZF null-space budget is exhausted
/// (rho0 <= p_u proposed, rho0 <= 1 baseline).
double zf_rate_limit(const LimitPoint& pt, bool baseline);
double rzf_rate_limit(const LimitPoint& pt, double xi, bool baseline);
/// rzf_rate_limit with the regularizer optimized per point.
XiOptimum rzf_rate_limit_optimized(const LimitPoint& pt, bool baseline);

// ---- experiment sweeps ------------------------------------------------------

enum class Mode
{
    proposed,
    baseline
};

std::string to_string(Mode mode);

/// One evaluated point of a sweep series.
struct SweepPoint
{
    std::size_t axis_index = 0;
    double axis_value = 0.0;
    PrecoderKind precoder = PrecoderKind::mrt;
    Mode mode = Mode::proposed;
    std::string method; ///< bound | asymptotic | monte-carlo
    bool feasible = true;
    std::string reason;      ///< nonempty only when infeasible
    double rate = 0.0;
    double std_error = 0.0;  ///< monte-carlo only
    long long trials = 0;    ///< monte-carlo only
    double xi = 0.0;         ///< RZF only: regularizer used
};

struct SweepResult
{
    std::string axis; ///< "rho0" or "L_u"
    std::vector<double> axis_values;
    std::vector<SweepPoint> points;
    SystemConfig config; ///< template, metadata snapshot
    std::string method;  ///< "analytic" or "mc"
};

struct SweepOptions
{
    std::vector<PrecoderKind> precoders{PrecoderKind::mrt, PrecoderKind::zf, PrecoderKind::rzf};
    std::vector<Mode> modes{Mode::proposed, Mode::baseline};
    std::string method = "analytic"; ///< "analytic" (figure formulas) or "mc" (finite-K validation)
    long long trials = 100;          ///< mc only
    int mc_K = 64;                   ///< mc only: finite user count
    double rho0 = 1.4;               ///< cache-size sweep: fixed antennas per user
    unsigned threads = 0;
};

/// Rate per user vs. antennas per user rho0, at the template's cache size.
SweepResult sweep_rho0(const SystemConfig& tmpl, const std::vector<double>& rho0_grid, const SweepOptions& opt);

/// Rate per user vs. cache size L_u, at fixed rho0.
SweepResult sweep_cache_size(const SystemConfig& tmpl, const std::vector<int>& lu_grid, const SweepOptions& opt);

} // namespace camimo

#endif
