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

#include "camimo/channel.hpp"

#include <cmath>

#include "camimo/rng.hpp"

namespace camimo
{

ChannelRealization draw_channel(const SystemConfig& cfg, std::mt19937_64& rng)
{
    const double inv_sqrt2 = 0.7071067811865475244;
    std::normal_distribution<double> gauss(0.0, 1.0);

    ChannelRealization ch;
    ch.G.set_size(cfg.K, cfg.M);
    for (auto& v : ch.G) // arma iterates column-major, matching storage
    {
        double re = gauss(rng);
        double im = gauss(rng);
        v = std::complex<double>(re * inv_sqrt2, im * inv_sqrt2);
    }

    ch.H = ch.G;
    for (int k = 0; k < cfg.K; ++k)
        ch.H.row(k) *= std::sqrt(cfg.beta[static_cast<std::size_t>(k)]);
    return ch;
}

McEstimate inv_norm_expectation_mc(int M, double beta, long long trials, std::uint64_t seed)
{
    if (M < 2)
        throw NumericalError("E{1/||h||^2} diverges for M = 1");

    const double inv_sqrt2 = 0.7071067811865475244;
    std::mt19937_64 rng = substream(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double sum = 0.0, sum_sq = 0.0;
    for (long long t = 0; t < trials; ++t)
    {
        double norm_sq = 0.0;
        for (int m = 0; m < M; ++m)
        {
            double re = gauss(rng) * inv_sqrt2;
            double im = gauss(rng) * inv_sqrt2;
            norm_sq += re * re + im * im;
        }
        double x = 1.0 / (beta * norm_sq);
        sum += x;
        sum_sq += x * x;
    }

    McEstimate est;
    est.draws = trials;
    est.value = sum / static_cast<double>(trials);
    if (trials > 1)
    {
        double var = (sum_sq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1);
        est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    }
    return est;
}

} // namespace camimo
