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

#include "camimo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "camimo/asymptotics.hpp"
#include "camimo/rng.hpp"

namespace camimo
{

CachingStatistics caching_statistics(int L_b, int L_u, int K)
{
    if (L_b < 1 || L_u < 0 || L_u > L_b || K < 1)
        throw std::invalid_argument("caching_statistics: need 0 <= L_u <= L_b, L_b >= 1, K >= 1");

    CachingStatistics st;
    st.p = static_cast<double>(L_u) / static_cast<double>(L_b);
    double q = 1.0 - st.p;
    double inv_lb = 1.0 / static_cast<double>(L_b);
    st.p_u1 = (1.0 - inv_lb) * q * q * q;
    st.p_u2 = inv_lb * q * q;
    st.p_u = st.p_u1 + st.p_u2;
    st.expected_K_bar = q * static_cast<double>(K);
    st.expected_N = static_cast<double>(K - 1) * st.p_u;
    st.expected_D = st.expected_N;
    return st;
}

McEstimate mc_validate_pu(int L_b, int L_u, long long draws, std::uint64_t seed)
{
    if (draws < 1)
        throw std::invalid_argument("mc_validate_pu: draws must be positive");
    double p = static_cast<double>(L_u) / static_cast<double>(L_b);

    std::mt19937_64 rng = substream(seed, 0);
    std::bernoulli_distribution cache_file(p);
    std::uniform_int_distribution<int> pick(0, L_b - 1);

    std::vector<std::uint8_t> cache_k(static_cast<std::size_t>(L_b));
    std::vector<std::uint8_t> cache_l(static_cast<std::size_t>(L_b));

    long long hits = 0;
    for (long long t = 0; t < draws; ++t)
    {
        for (int f = 0; f < L_b; ++f)
        {
            cache_k[static_cast<std::size_t>(f)] = cache_file(rng) ? 1 : 0;
            cache_l[static_cast<std::size_t>(f)] = cache_file(rng) ? 1 : 0;
        }
        int req_k = pick(rng);
        int req_l = pick(rng);

        bool c_ll = cache_l[static_cast<std::size_t>(req_l)] == 0; // l is active
        bool c_kk = cache_k[static_cast<std::size_t>(req_k)] == 0; // k is active
        bool c_lk = cache_k[static_cast<std::size_t>(req_l)] == 0; // k cannot cancel l
        if (c_ll && c_kk && c_lk)
            ++hits;
    }

    McEstimate est;
    est.draws = draws;
    est.value = static_cast<double>(hits) / static_cast<double>(draws);
    est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(draws));
    return est;
}

XiOptimum optimize_xi(const std::function<double(double)>& rate_fn, double xi_lo, double xi_hi)
{
    if (!(xi_lo > 0.0) || !(xi_hi > xi_lo))
        throw std::invalid_argument("optimize_xi: need 0 < xi_lo < xi_hi");

    XiOptimum best;
    bool have_best = false;
    auto eval = [&](double t) {
        double xi = std::pow(10.0, t);
        double r = rate_fn(xi);
        if (!std::isfinite(r))
            throw NumericalError("optimizer domain error: non-finite rate");
        if (!have_best || r > best.rate)
        {
            best.xi = xi;
            best.rate = r;
            have_best = true;
        }
        return r;
    };

    const double t_lo = std::log10(xi_lo);
    const double t_hi = std::log10(xi_hi);
    const double full_width = t_hi - t_lo;

    // coarse probes: a safeguard against non-unimodal objectives
    constexpr int n_coarse = 32;
    double coarse_t[n_coarse];
    double coarse_f[n_coarse];
    int best_i = 0;
    for (int i = 0; i < n_coarse; ++i)
    {
        coarse_t[i] = t_lo + full_width * static_cast<double>(i) / (n_coarse - 1);
        coarse_f[i] = eval(coarse_t[i]);
        if (coarse_f[i] > coarse_f[best_i])
            best_i = i;
    }

    // golden-section around the best probe
    double a = coarse_t[std::max(0, best_i - 1)];
    double c = coarse_t[std::min(n_coarse - 1, best_i + 1)];
    double fa = coarse_f[std::max(0, best_i - 1)];
    double fc = coarse_f[std::min(n_coarse - 1, best_i + 1)];

    constexpr double invphi = 0.6180339887498949;
    double x1 = c - invphi * (c - a);
    double x2 = a + invphi * (c - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (c - a > 1e-4 * full_width)
    {
        if (f1 < f2)
        {
            a = x1;
            fa = f1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (c - a);
            f2 = eval(x2);
        }
        else
        {
            c = x2;
            fc = f2;
            x2 = x1;
            f2 = f1;
            x1 = c - invphi * (c - a);
            f1 = eval(x1);
        }
    }

    // final parabolic step through the bracket and its best interior point
    double m, fm;
    if (f1 >= f2)
    {
        m = x1;
        fm = f1;
        c = x2;
        fc = f2;
    }
    else
    {
        m = x2;
        fm = f2;
        a = x1;
        fa = f1;
    }
    double num = (m - a) * (m - a) * (fm - fc) - (m - c) * (m - c) * (fm - fa);
    double den = (m - a) * (fm - fc) - (m - c) * (fm - fa);
    if (std::abs(den) > 1e-300)
    {
        double t_star = m - 0.5 * num / den;
        if (t_star >= t_lo && t_star <= t_hi && std::isfinite(t_star))
            eval(t_star);
    }

    return best;
}

namespace
{

void require_active_fraction(const LimitPoint& pt)
{
    if (!(1.0 - pt.p > 0.0))
        throw InfeasibleError("no active users: p = 1 offloads every request");
}

} // namespace

double mrt_rate_limit(const LimitPoint& pt, bool baseline)
{
    if (baseline)
        return std::log2(1.0 + pt.beta * pt.rho0 * pt.E0 / (pt.beta * pt.E0 + pt.sigma2));
    require_active_fraction(pt);
    return std::log2(1.0 + pt.beta * pt.rho0 * pt.E0 / (pt.beta * pt.p_u * pt.E0 + (1.0 - pt.p) * pt.sigma2));
}

double zf_rate_limit(const LimitPoint& pt, bool baseline)
{
    if (baseline)
    {
        if (pt.rho0 < 1.0)
            throw InfeasibleError("ZF infeasible: rho0 < 1 for the cache-free baseline");
        return std::log2(1.0 + pt.beta * (pt.rho0 - 1.0) * pt.E0 / pt.sigma2);
    }
    require_active_fraction(pt);
    if (pt.rho0 < pt.p_u)
        throw InfeasibleError("ZF infeasible: rho0 below the residual load p_u");
    return std::log2(1.0 + pt.beta * (pt.rho0 - pt.p_u) * pt.E0 / ((1.0 - pt.p) * pt.sigma2));
}

double rzf_rate_limit(const LimitPoint& pt, double xi, bool baseline)
{
    double rho = baseline ? 1.0 / pt.rho0 : pt.p_u / pt.rho0;
    if (!baseline)
        require_active_fraction(pt);

    double g = g_closed(rho, xi);
    double dg = g_derivative(rho, xi);

    double power_gain = baseline ? 1.0 : 1.0 / (1.0 - pt.p);
    double signal = -pt.beta * g * g * pt.E0 * pt.rho0 * power_gain / dg;

    double interferer_fraction = baseline ? 1.0 : pt.p_u / (1.0 - pt.p);
    double interference = pt.beta * pt.E0 * interferer_fraction / ((1.0 + g) * (1.0 + g));

    return std::log2(1.0 + signal / (interference + pt.sigma2));
}

XiOptimum rzf_rate_limit_optimized(const LimitPoint& pt, bool baseline)
{
    return optimize_xi([&](double xi) { return rzf_rate_limit(pt, xi, baseline); });
}

std::string to_string(Mode mode)
{
    return mode == Mode::proposed ? "proposed" : "baseline";
}

namespace
{

std::uint64_t point_seed(std::uint64_t base, std::size_t axis_index, PrecoderKind precoder, Mode mode)
{
    std::uint64_t tag = (static_cast<std::uint64_t>(axis_index) << 4) |
                        (static_cast<std::uint64_t>(precoder) << 1) | static_cast<std::uint64_t>(mode);
    return mix64(mix64(base) ^ mix64(tag));
}

// Evaluates one (axis point, precoder, mode) cell of a sweep.
SweepPoint evaluate_cell(const SystemConfig& tmpl, const SweepOptions& opt, std::size_t axis_index, double axis_value,
                         double rho0, int L_u, PrecoderKind precoder, Mode mode)
{
    SweepPoint sp;
    sp.axis_index = axis_index;
    sp.axis_value = axis_value;
    sp.precoder = precoder;
    sp.mode = mode;

    CachingStatistics stats = caching_statistics(tmpl.L_b, mode == Mode::baseline ? 0 : L_u, 2);
    LimitPoint pt{rho0, stats.p, stats.p_u, tmpl.beta.empty() ? 0.5 : tmpl.beta.front(), tmpl.E0, tmpl.sigma2};

    // The baseline formulas already hardwire the cache-free counts; pass
    // mode through so the RZF branch picks rho = 1/rho0.
    bool baseline = mode == Mode::baseline;

    try
    {
        if (opt.method == "analytic")
        {
            switch (precoder)
            {
            case PrecoderKind::mrt:
                sp.method = "bound";
                sp.rate = mrt_rate_limit(pt, baseline);
                break;
            case PrecoderKind::zf:
                sp.method = "bound";
                sp.rate = zf_rate_limit(pt, baseline);
                break;
            case PrecoderKind::rzf:
            {
                sp.method = "asymptotic";
                XiOptimum xo = rzf_rate_limit_optimized(pt, baseline);
                sp.rate = xo.rate;
                sp.xi = xo.xi;
                break;
            }
            }
        }
        else // finite-K Monte Carlo validation
        {
            SystemConfig cfg = tmpl;
            cfg.K = opt.mc_K;
            cfg.M = static_cast<int>(std::lround(rho0 * static_cast<double>(opt.mc_K)));
            cfg.L_u = baseline ? 0 : L_u;
            cfg.set_uniform_beta(pt.beta);
            cfg.snr_db = 10.0 * std::log10(cfg.E0 / cfg.sigma2);
            cfg.seed = point_seed(tmpl.seed, axis_index, precoder, mode);

            McOptions mo;
            mo.precoder = precoder;
            mo.trials = opt.trials;
            mo.threads = opt.threads;
            if (precoder == PrecoderKind::rzf)
            {
                XiOptimum xo = rzf_rate_limit_optimized(pt, baseline);
                mo.rzf_xi = xo.xi;
                sp.xi = xo.xi;
            }

            sp.method = "monte-carlo";
            RateReport rep = mc_ergodic_rate_scenario(cfg, mo);
            sp.rate = rep.mean_rate;
            sp.std_error = rep.mean_stderr;
            sp.trials = rep.trials;
        }
    }
    catch (const InfeasibleError& e)
    {
        sp.feasible = false;
        sp.reason = e.what();
        sp.rate = 0.0;
    }
    return sp;
}

SweepResult run_sweep(const SystemConfig& tmpl, const SweepOptions& opt, const std::string& axis,
                      const std::vector<double>& axis_values, const std::function<double(std::size_t)>& rho0_of,
                      const std::function<int(std::size_t)>& lu_of)
{
    if (opt.method != "analytic" && opt.method != "mc")
        throw std::invalid_argument("sweep method must be 'analytic' or 'mc'");

    SweepResult res;
    res.axis = axis;
    res.axis_values = axis_values;
    res.config = tmpl;
    res.method = opt.method;

    for (std::size_t i = 0; i < axis_values.size(); ++i)
        for (PrecoderKind precoder : opt.precoders)
            for (Mode mode : opt.modes)
                res.points.push_back(
                    evaluate_cell(tmpl, opt, i, axis_values[i], rho0_of(i), lu_of(i), precoder, mode));
    return res;
}

} // namespace

SweepResult sweep_rho0(const SystemConfig& tmpl, const std::vector<double>& rho0_grid, const SweepOptions& opt)
{
    return run_sweep(
        tmpl, opt, "rho0", rho0_grid, [&](std::size_t i) { return rho0_grid[i]; },
        [&](std::size_t) { return tmpl.L_u; });
}

SweepResult sweep_cache_size(const SystemConfig& tmpl, const std::vector<int>& lu_grid, const SweepOptions& opt)
{
    std::vector<double> axis_values(lu_grid.size());
    for (std::size_t i = 0; i < lu_grid.size(); ++i)
        axis_values[i] = static_cast<double>(lu_grid[i]);
    return run_sweep(
        tmpl, opt, "L_u", axis_values, [&](std::size_t) { return opt.rho0; },
        [&](std::size_t i) { return lu_grid[i]; });
}

} // namespace camimo
