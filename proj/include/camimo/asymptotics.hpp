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

#ifndef CAMIMO_ASYMPTOTICS_HPP
#define CAMIMO_ASYMPTOTICS_HPP

#include <vector>

namespace camimo
{

/// Large-system resolvent G(rho, xi) of the Marchenko-Pastur law:
/// the limit of (1/M) g^H ((1/M) F^H F + xi I)^{-1} g for load ratio
/// rho = D/M and normalized regularizer xi = alpha/M.
///
/// Closed form; satisfies xi*G^2 + (xi - 1 + rho)*G - 1 = 0.
/// Throws NumericalError for xi <= 0.
double g_closed(double rho, double xi);

/// dG/dxi from implicit differentiation of the quadratic:
///   dG/dxi = -(G^2 + G) / (2 xi G + xi - 1 + rho).
/// Always negative. Differentiating the radical directly cancels
/// catastrophically for small xi with rho near 1, hence this route.
double g_derivative(double rho, double xi);

/// Quadrature oracle for G: integrates (mu + xi)^{-1} against the
/// Marchenko-Pastur density (atom (1-rho)^+ at zero plus the bulk on
/// [(1-sqrt(rho))^2, (1+sqrt(rho))^2]) with Gauss-Legendre nodes after the
/// substitution mu = center + radius*sin(theta), which absorbs the edge
/// square-root singularities. Test fixture, not a production path.
double g_integral(double rho, double xi, int quadrature_points = 10000);

/// Deterministic-equivalent received signal power of user k,
///   E^s = -M beta_k G^2(rho_k, xi_k) E_k / (dG/dxi_k).
double rzf_signal_power(int M, double beta_k, double E_k, double rho_k, double xi_k);

/// Deterministic-equivalent interference power caused by user l at user k,
///   E^i(l) = beta_k E_l / (1 + G(rho_l, xi_l))^2.
double rzf_interference_power(double beta_k, double E_l, double rho_l, double xi_l);

/// One interfering user in the asymptotic regime.
struct RzfInterferer
{
    double E_l;
    double rho_l;
    double xi_l;
};

/// Asymptotic RZF ergodic rate log2(1 + E^s / (sum_l E^i(l) + sigma2)).
double rzf_rate(int M, double beta_k, double E_k, const std::vector<RzfInterferer>& interferers, double rho_k,
                double xi_k, double sigma2);

} // namespace camimo

#endif
