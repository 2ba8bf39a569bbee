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

#include "camimo/rates.hpp"

#include <cmath>
#include <limits>

#include "camimo/parallel.hpp"
#include "camimo/precoding.hpp"
#include "camimo/rng.hpp"

namespace camimo
{

namespace
{

double log2_1p(double x)
{
    return std::log2(1.0 + x);
}

// Precoders for user k and all of U_k, as one trial of the MC loop needs
// them. Indexed by user id; untouched users stay empty.
void fill_precoders(PrecoderKind kind, const ChannelRealization& ch, const DerivedSets& ds, double rzf_alpha,
                    std::vector<arma::cx_vec>& W)
{
    for (int k : ds.active)
    {
        switch (kind)
        {
        case PrecoderKind::mrt:
            W[static_cast<std::size_t>(k)] = mrt_precoder(ch.h(k));
            break;
        case PrecoderKind::zf:
            W[static_cast<std::size_t>(k)] = zf_precoder(k, ch.H, ds.Lambda[static_cast<std::size_t>(k)]);
            break;
        case PrecoderKind::rzf:
            W[static_cast<std::size_t>(k)] = rzf_precoder(k, ch.G, ds.Lambda[static_cast<std::size_t>(k)], rzf_alpha);
            break;
        }
    }
}

struct TrialOutcome
{
    std::vector<double> rate; // per active-slot rate, index-aligned with ds.active
    double active_mean = 0.0;
    bool infeasible = false;
    bool inactive = false;
};

RateReport reduce_trials(const SystemConfig& cfg, std::vector<TrialOutcome>& outcomes,
                         const std::vector<const std::vector<int>*>& active_of_trial)
{
    RateReport rep;
    rep.method = "monte-carlo";
    rep.trials = static_cast<long long>(outcomes.size());

    std::size_t K = static_cast<std::size_t>(cfg.K);
    std::vector<double> sum(K, 0.0), sum_sq(K, 0.0);
    rep.per_user_samples.assign(K, 0);

    double mean_sum = 0.0, mean_sum_sq = 0.0;
    long long valid = 0;

    // fixed trial order: the sums are bit-identical for any worker count
    for (std::size_t t = 0; t < outcomes.size(); ++t)
    {
        const TrialOutcome& out = outcomes[t];
        if (out.inactive)
        {
            ++rep.inactive_trials;
            continue;
        }
        if (out.infeasible)
        {
            ++rep.infeasible_trials;
            continue;
        }
        const std::vector<int>& active = *active_of_trial[t];
        for (std::size_t i = 0; i < active.size(); ++i)
        {
            std::size_t k = static_cast<std::size_t>(active[i]);
            double r = out.rate[i];
            sum[k] += r;
            sum_sq[k] += r * r;
            ++rep.per_user_samples[k];
        }
        mean_sum += out.active_mean;
        mean_sum_sq += out.active_mean * out.active_mean;
        ++valid;
    }

    rep.per_user_rate.assign(K, std::numeric_limits<double>::quiet_NaN());
    rep.per_user_stderr.assign(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
    {
        long long n = rep.per_user_samples[k];
        if (n == 0)
            continue;
        rep.per_user_rate[k] = sum[k] / static_cast<double>(n);
        if (n > 1)
        {
            double var = (sum_sq[k] - sum[k] * sum[k] / static_cast<double>(n)) / static_cast<double>(n - 1);
            rep.per_user_stderr[k] = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
        }
    }

    if (valid > 0)
    {
        rep.mean_rate = mean_sum / static_cast<double>(valid);
        if (valid > 1)
        {
            double var =
                (mean_sum_sq - mean_sum * mean_sum / static_cast<double>(valid)) / static_cast<double>(valid - 1);
            rep.mean_stderr = std::sqrt(std::max(0.0, var) / static_cast<double>(valid));
        }
    }
    return rep;
}

} // namespace

std::string to_string(PrecoderKind kind)
{
    switch (kind)
    {
    case PrecoderKind::mrt:
        return "mrt";
    case PrecoderKind::zf:
        return "zf";
    case PrecoderKind::rzf:
        return "rzf";
    }
    return "?";
}

PrecoderKind precoder_from_string(const std::string& name)
{
    if (name == "mrt")
        return PrecoderKind::mrt;
    if (name == "zf")
        return PrecoderKind::zf;
    if (name == "rzf")
        return PrecoderKind::rzf;
    throw std::invalid_argument("unknown precoder: " + name);
}

double sinr(int k, const arma::cx_mat& H, const std::vector<arma::cx_vec>& W, const PowerAllocation& E,
            const std::vector<int>& U_k, double sigma2)
{
    arma::cx_vec h_k = H.row(k).st();
    std::complex<double> sig = arma::cdot(h_k, W[static_cast<std::size_t>(k)]);
    double signal = std::norm(sig) * E.E[static_cast<std::size_t>(k)];

    double denom = sigma2;
    for (int l : U_k)
    {
        std::complex<double> cross = arma::cdot(h_k, W[static_cast<std::size_t>(l)]);
        denom += std::norm(cross) * E.E[static_cast<std::size_t>(l)];
    }
    return signal / denom;
}

double zf_inverse_gain(const arma::cx_mat& Q)
{
    if (Q.n_cols > Q.n_rows)
        throw InfeasibleError("ZF infeasible: more constraints than antennas");
    arma::cx_mat gram = Q.t() * Q;
    if (arma::rcond(gram) < 1e-12)
        throw InfeasibleError("ZF infeasible: rank-deficient effective channel");
    arma::cx_vec e1(Q.n_cols, arma::fill::zeros);
    e1(0) = 1.0;
    arma::cx_vec x = arma::solve(gram, e1, arma::solve_opts::likely_sympd);
    return std::pow(arma::norm(Q * x), 2);
}

double zf_rate_single(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k, double E_k, double sigma2)
{
    double gain = zf_inverse_gain(effective_channel(k, H, lambda_k));
    return log2_1p(E_k / (gain * sigma2));
}

double mrt_bound(double beta_k, int M, double E_k, const std::vector<double>& interferer_powers, double sigma2)
{
    double interference = 0.0;
    for (double E_l : interferer_powers)
        interference += beta_k * E_l;
    return log2_1p(beta_k * static_cast<double>(M - 1) * E_k / (interference + sigma2));
}

double mrt_bound_uniform(double beta_k, int M, int N_k, int K_bar, double E0, double sigma2)
{
    return log2_1p(beta_k * static_cast<double>(M - 1) * E0 /
                   (beta_k * static_cast<double>(N_k) * E0 + static_cast<double>(K_bar) * sigma2));
}

double mrt_bound_baseline(double beta_k, int M, int K, double E0, double sigma2)
{
    return mrt_bound_uniform(beta_k, M, K - 1, K, E0, sigma2);
}

double zf_bound(double beta_k, int M, int D_k, double E_k, double sigma2)
{
    if (M < D_k + 1)
        throw InfeasibleError("ZF infeasible: more constraints than antennas");
    return log2_1p(beta_k * static_cast<double>(M - D_k - 1) * E_k / sigma2);
}

double zf_bound_uniform(double beta_k, int M, int D_k, int K_bar, double E0, double sigma2)
{
    return zf_bound(beta_k, M, D_k, E0 / static_cast<double>(K_bar), sigma2);
}

double zf_bound_baseline(double beta_k, int M, int K, double E0, double sigma2)
{
    return zf_bound_uniform(beta_k, M, K - 1, K, E0, sigma2);
}

RateReport mc_ergodic_rate(const SystemConfig& cfg, const DerivedSets& ds, const McOptions& opt)
{
    PowerAllocation pa = uniform_power(ds, cfg);
    double alpha = opt.rzf_xi * static_cast<double>(cfg.M);

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(opt.trials));
    parallel_for(outcomes.size(), opt.threads, [&](std::size_t t) {
        TrialOutcome& out = outcomes[t];
        std::mt19937_64 rng = substream(cfg.seed, t);
        ChannelRealization ch = draw_channel(cfg, rng);

        std::vector<arma::cx_vec> W(static_cast<std::size_t>(cfg.K));
        try
        {
            fill_precoders(opt.precoder, ch, ds, alpha, W);
        }
        catch (const InfeasibleError&)
        {
            out.infeasible = true;
            return;
        }

        out.rate.resize(ds.active.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < ds.active.size(); ++i)
        {
            int k = ds.active[i];
            double s = sinr(k, ch.H, W, pa, ds.U[static_cast<std::size_t>(k)], cfg.sigma2);
            out.rate[i] = log2_1p(s);
            sum += out.rate[i];
        }
        out.active_mean = sum / static_cast<double>(ds.active.size());
    });

    std::vector<const std::vector<int>*> active_of_trial(outcomes.size(), &ds.active);
    return reduce_trials(cfg, outcomes, active_of_trial);
}

RateReport mc_ergodic_rate_scenario(const SystemConfig& cfg, const McOptions& opt)
{
    double alpha = opt.rzf_xi * static_cast<double>(cfg.M);

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(opt.trials));
    std::vector<std::vector<int>> active_sets(outcomes.size());

    parallel_for(outcomes.size(), opt.threads, [&](std::size_t t) {
        TrialOutcome& out = outcomes[t];
        std::mt19937_64 rng = substream(cfg.seed, t);
        Scenario sc = draw_scenario(cfg, rng);
        if (sc.sets.K_bar == 0)
        {
            out.inactive = true;
            return;
        }
        active_sets[t] = sc.sets.active;

        PowerAllocation pa = uniform_power(sc.sets, cfg);
        ChannelRealization ch = draw_channel(cfg, rng);

        std::vector<arma::cx_vec> W(static_cast<std::size_t>(cfg.K));
        try
        {
            fill_precoders(opt.precoder, ch, sc.sets, alpha, W);
        }
        catch (const InfeasibleError&)
        {
            out.infeasible = true;
            return;
        }

        out.rate.resize(sc.sets.active.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < sc.sets.active.size(); ++i)
        {
            int k = sc.sets.active[i];
            double s = sinr(k, ch.H, W, pa, sc.sets.U[static_cast<std::size_t>(k)], cfg.sigma2);
            out.rate[i] = log2_1p(s);
            sum += out.rate[i];
        }
        out.active_mean = sum / static_cast<double>(sc.sets.active.size());
    });

    std::vector<const std::vector<int>*> active_of_trial(outcomes.size());
    for (std::size_t t = 0; t < outcomes.size(); ++t)
        active_of_trial[t] = &active_sets[t];
    return reduce_trials(cfg, outcomes, active_of_trial);
}

} // namespace camimo
