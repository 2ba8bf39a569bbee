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

#ifndef CAMIMO_PRECODING_HPP
#define CAMIMO_PRECODING_HPP

#include <armadillo>
#include <vector>

namespace camimo
{

/// Effective channel matrix of user k after cache-enabled interference
/// cancellation: M x (D_k+1), column 1 is h_k, column n+1 is the channel
/// of the n-th user in Lambda_k.
arma::cx_mat effective_channel(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k);

/// Effective fading matrix of user k, stored as the M x (D_k+1) column
/// stack [g_k, g_{Lambda_k(1)}, ...]. Unscaled fading vectors, never the
/// beta-weighted channel.
arma::cx_mat effective_fading(int k, const arma::cx_mat& G, const std::vector<int>& lambda_k);

/// w = h/||h||. Throws NumericalError on a zero channel vector.
arma::cx_vec mrt_precoder(const arma::cx_vec& h);

/// Cache-reduced zero forcing: the unit vector along Q_k (Q_k^H Q_k)^{-1} e_1,
/// orthogonal to every channel indexed by lambda_k. Throws InfeasibleError
/// when D_k+1 > M or the effective channel is numerically rank deficient.
arma::cx_vec zf_precoder(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k);

/// Cache-reduced regularized zero forcing with ridge parameter alpha (> 0;
/// alpha == 0 falls back to a pseudo-inverse solve, intended for limit
/// tests only). Throws NumericalError for alpha < 0.
arma::cx_vec rzf_precoder(int k, const arma::cx_mat& G, const std::vector<int>& lambda_k, double alpha);

} // namespace camimo

#endif
