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

#include "camimo/precoding.hpp"

#include "camimo/common.hpp"

namespace camimo
{

namespace
{

// Reciprocal condition estimate below this marks the Gram matrix as rank
// deficient; the precoder reports infeasibility instead of returning noise.
constexpr double k_rcond_floor = 1e-12;

// After normalization, rotate w so that ref^H w is real nonnegative. Rates
// are phase invariant; the fixed convention keeps regression output
// bit-stable.
arma::cx_vec fix_phase(arma::cx_vec w, const arma::cx_vec& ref)
{
    std::complex<double> ip = arma::cdot(ref, w);
    double mag = std::abs(ip);
    if (mag > 0.0)
        w *= std::conj(ip) / mag;
    return w;
}

arma::cx_mat stack_columns(int k, const arma::cx_mat& rows, const std::vector<int>& lambda_k)
{
    arma::cx_mat S(rows.n_cols, lambda_k.size() + 1);
    S.col(0) = rows.row(k).st();
    for (std::size_t n = 0; n < lambda_k.size(); ++n)
        S.col(n + 1) = rows.row(lambda_k[n]).st();
    return S;
}

} // namespace

arma::cx_mat effective_channel(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k)
{
    return stack_columns(k, H, lambda_k);
}

arma::cx_mat effective_fading(int k, const arma::cx_mat& G, const std::vector<int>& lambda_k)
{
    return stack_columns(k, G, lambda_k);
}

arma::cx_vec mrt_precoder(const arma::cx_vec& h)
{
    double n = arma::norm(h);
    if (!(n > 0.0))
        throw NumericalError("degenerate channel: zero norm");
    return fix_phase(h / n, h);
}

arma::cx_vec zf_precoder(int k, const arma::cx_mat& H, const std::vector<int>& lambda_k)
{
    arma::uword cols = static_cast<arma::uword>(lambda_k.size()) + 1;
    if (cols > H.n_cols)
        throw InfeasibleError("ZF infeasible: more constraints than antennas");

    arma::cx_mat Q = effective_channel(k, H, lambda_k);
    arma::cx_mat gram = Q.t() * Q; // Hermitian, (D+1) x (D+1)

    if (arma::rcond(gram) < k_rcond_floor)
        throw InfeasibleError("ZF infeasible: rank-deficient effective channel");

    arma::cx_vec e1(cols, arma::fill::zeros);
    e1(0) = 1.0;
    arma::cx_vec x = arma::solve(gram, e1, arma::solve_opts::likely_sympd);

    arma::cx_vec w = Q * x;
    double n = arma::norm(w);
    if (!(n > 0.0) || !w.is_finite())
        throw InfeasibleError("ZF infeasible: degenerate solve");
    return fix_phase(w / n, Q.col(0));
}

arma::cx_vec rzf_precoder(int k, const arma::cx_mat& G, const std::vector<int>& lambda_k, double alpha)
{
    if (alpha < 0.0)
        throw NumericalError("invalid regularizer: alpha must be nonnegative");

    arma::cx_mat S = effective_fading(k, G, lambda_k); // M x (D+1)
    arma::uword M = S.n_rows;
    arma::uword cols = S.n_cols;

    arma::cx_vec w;
    if (alpha == 0.0)
    {
        // test-only pseudo-solve of the unregularized system
        arma::cx_mat gram = S * S.t(); // M x M
        w = arma::pinv(gram) * S.col(0);
    }
    else if (cols <= M)
    {
        // dual form: (S S^H + aI)^{-1} S e1 = S (S^H S + aI)^{-1} e1,
        // a (D+1) x (D+1) solve instead of M x M
        arma::cx_mat gram = S.t() * S;
        gram.diag() += alpha;
        arma::cx_vec e1(cols, arma::fill::zeros);
        e1(0) = 1.0;
        w = S * arma::solve(gram, e1, arma::solve_opts::likely_sympd);
    }
    else
    {
        arma::cx_mat gram = S * S.t();
        gram.diag() += alpha;
        w = arma::solve(gram, S.col(0), arma::solve_opts::likely_sympd);
    }

    double n = arma::norm(w);
    if (!(n > 0.0) || !w.is_finite())
        throw NumericalError("degenerate RZF solve");
    return fix_phase(w / n, S.col(0));
}

} // namespace camimo
