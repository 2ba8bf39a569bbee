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

#ifndef CAMIMO_RATES_HPP
#define CAMIMO_RATES_HPP

#include <armadillo>
#include <string>
#include <vector>

#include "camimo/channel.hpp"
#include "camimo/scenario.hpp"

namespace camimo
{

enum class PrecoderKind
{
    mrt,
    zf,
    rzf
};

std::string to_string(PrecoderKind kind);
PrecoderKind precoder_from_string(const std::string& name);

/// Post-cancellation SINR of user k: received signal power over residual
/// interference from U_k plus noise. W is indexed by user id and must hold
/// precoders for k and every member of U_k.
double sinr(int k, const arma::cx_mat& H, const std::vector<arma::cx_vec>& W, const PowerAllocation& E,
            const std::vector<int>& U_k, double sigma2);

/// ||Q (Q^H Q)^{-1} e_1||^2 for an effective channel matrix Q; the power
/// penalty of forcing zeros. Throws InfeasibleError like zf_precoder.
double zf_inverse_gain(const arma::cx_mat& Q);

/// Single-realization ZF rate, log2(1 + E_k / (zf_inverse_gain * sigma2)).
/// Interference-free by construction.
double zf_rate_single(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k, double E_k, double sigma2);

// ---- closed-form ergodic rate lower bounds -------------------------------

/// MRT bound with explicit interferer powers.
double mrt_bound(double beta_k, int M, double E_k, const std::vector<double>& interferer_powers, double sigma2);

/// MRT bound under uniform power allocation.
double mrt_bound_uniform(double beta_k, int M, int N_k, int K_bar, double E0, double sigma2);

/// MRT bound for the cache-free baseline (N_k = K-1, K_bar = K).
double mrt_bound_baseline(double beta_k, int M, int K, double E0, double sigma2);

/// ZF bound; throws InfeasibleError when M < D_k + 1.
double zf_bound(double beta_k, int M, int D_k, double E_k, double sigma2);

/// ZF bound under uniform power allocation.
double zf_bound_uniform(double beta_k, int M, int D_k, int K_bar, double E0, double sigma2);

/// ZF bound for the cache-free baseline (D_k = K-1, K_bar = K); requires M >= K.
double zf_bound_baseline(double beta_k, int M, int K, double E0, double sigma2);

// ---- Monte Carlo ergodic rates -------------------------------------------

struct McOptions
{
    PrecoderKind precoder = PrecoderKind::mrt;
    long long trials = 1000;
    double rzf_xi = 0.1; ///< normalized regularizer; alpha = rzf_xi * M
    unsigned threads = 0; ///< 0 = hardware default
};

/// Per-user ergodic rates with provenance.
struct RateReport
{
    std::string method; ///< monte-carlo | closed-form-bound | asymptotic
    long long trials = 0;

    std::vector<double> per_user_rate;   ///< NaN for users never served over the air
    std::vector<double> per_user_stderr; ///< present only for monte-carlo
    std::vector<long long> per_user_samples;

    double mean_rate = 0.0;   ///< average over active users
    double mean_stderr = 0.0; ///< standard error of the per-trial active-user mean

    long long infeasible_trials = 0; ///< trials lost to "ZF infeasible"
    long long inactive_trials = 0;   ///< scenario draws with no active user
};

/// Ergodic rate for a fixed cache state: averages log2(1+SINR) over i.i.d.
/// channel draws. Trial t uses substream(cfg.seed, t); the reduction order
/// is fixed, so the report is bit-identical for any thread count.
RateReport mc_ergodic_rate(const SystemConfig& cfg, const DerivedSets& ds, const McOptions& opt);

/// Outer averaging mode: every trial redraws caches, requests and the
/// channel, estimating the expected-scenario rate.
RateReport mc_ergodic_rate_scenario(const SystemConfig& cfg, const McOptions& opt);

} // namespace camimo

#endif
