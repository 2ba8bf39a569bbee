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

#include "camimo/asymptotics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "camimo/common.hpp"

namespace camimo
{

namespace
{

void require_valid(double rho, double xi)
{
    if (rho < 0.0)
        throw NumericalError("invalid load ratio: rho must be nonnegative");
    if (!(xi > 0.0))
        throw NumericalError("invalid regularizer: xi must be positive");
}

struct GaussLegendreRule
{
    std::vector<double> node;   // on (-1, 1)
    std::vector<double> weight;
};

// Nodes via Newton iteration on P_n; cached per order since test grids
// reuse the same rule many times.
const GaussLegendreRule& gauss_legendre(int n)
{
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    GaussLegendreRule rule;
    rule.node.resize(static_cast<std::size_t>(n));
    rule.weight.resize(static_cast<std::size_t>(n));

    int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i)
    {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j)
            {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.node[static_cast<std::size_t>(i)] = -x; // ascending order
        rule.weight[static_cast<std::size_t>(i)] = w;
        rule.node[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weight[static_cast<std::size_t>(n - 1 - i)] = w;
    }

    return cache.emplace(n, std::move(rule)).first->second;
}

} // namespace

double g_closed(double rho, double xi)
{
    require_valid(rho, xi);
    double one_minus_rho = 1.0 - rho;
    double root = std::sqrt(one_minus_rho * one_minus_rho / (xi * xi) + 2.0 * (1.0 + rho) / xi + 1.0);
    return 0.5 * (root + one_minus_rho / xi - 1.0);
}

double g_derivative(double rho, double xi)
{
    double g = g_closed(rho, xi);
    return -(g * g + g) / (2.0 * xi * g + xi - 1.0 + rho);
}

double g_integral(double rho, double xi, int quadrature_points)
{
    require_valid(rho, xi);
    if (quadrature_points < 1)
        throw std::invalid_argument("quadrature_points must be positive");

    double atom = rho < 1.0 ? (1.0 - rho) / xi : 0.0;
    if (rho == 0.0)
        return atom;

    double sqrt_rho = std::sqrt(rho);
    double center = 1.0 + rho;              // midpoint of the support
    double radius = 2.0 * sqrt_rho;         // half-width

    // mu = center + radius*sin(theta):
    //   G_bulk = int_{-pi/2}^{pi/2} radius^2 cos^2(theta)
    //            / (2 pi mu (mu + xi)) dtheta
    const GaussLegendreRule& rule = gauss_legendre(quadrature_points);
    double bulk = 0.0;
    for (std::size_t i = 0; i < rule.node.size(); ++i)
    {
        double theta = 0.5 * M_PI * rule.node[i];
        double mu = center + radius * std::sin(theta);
        double cos_theta = std::cos(theta);
        bulk += rule.weight[i] * radius * radius * cos_theta * cos_theta / (mu * (mu + xi));
    }
    bulk *= 0.5 * M_PI / (2.0 * M_PI); // jacobian of theta-rescaling, density constant

    return atom + bulk;
}

double rzf_signal_power(int M, double beta_k, double E_k, double rho_k, double xi_k)
{
    double g = g_closed(rho_k, xi_k);
    double dg = g_derivative(rho_k, xi_k);
    return -static_cast<double>(M) * beta_k * g * g * E_k / dg;
}

double rzf_interference_power(double beta_k, double E_l, double rho_l, double xi_l)
{
    double g = g_closed(rho_l, xi_l);
    double denom = (1.0 + g) * (1.0 + g);
    return beta_k * E_l / denom;
}

double rzf_rate(int M, double beta_k, double E_k, const std::vector<RzfInterferer>& interferers, double rho_k,
                double xi_k, double sigma2)
{
    double signal = rzf_signal_power(M, beta_k, E_k, rho_k, xi_k);
    double denom = sigma2;
    for (const RzfInterferer& l : interferers)
        denom += rzf_interference_power(beta_k, l.E_l, l.rho_l, l.xi_l);
    return std::log2(1.0 + signal / denom);
}

} // namespace camimo
