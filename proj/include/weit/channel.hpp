// SPDX-License-Identifier: Apache-2.0
//
// weit: wireless energy and information transfer tradeoff library
// Copyright (C) 2026 The weit authors
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

#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace weit {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// One slot's channel realization.
template <typename Scalar>
struct ChannelDraw {
    ComplexVector<Scalar> h;      ///< true forward fading, source -> harvester
    ComplexVector<Scalar> g;      ///< reverse fading, independent of h
    ComplexVector<Scalar> h_est;  ///< forward fading as estimated at the harvester
    ComplexVector<Scalar> n_err;  ///< estimation noise
};

/// Circularly-symmetric complex Gaussian vector with E|h_i|^2 = entry_variance.
template <typename Scalar, typename Rng>
ComplexVector<Scalar> sample_fading(int nt, Scalar entry_variance, Rng &rng)
{
    if (nt < 1)
        throw std::invalid_argument("sample_fading: nt must be >= 1");
    std::normal_distribution<Scalar> part(Scalar(0), std::sqrt(entry_variance / Scalar(2)));
    ComplexVector<Scalar> h(nt);
    for (int i = 0; i < nt; ++i) {
        const Scalar re = part(rng);
        const Scalar im = part(rng);
        h[i] = std::complex<Scalar>(re, im);
    }
    return h;
}

/// h = rho * h_est + sqrt(1 - rho^2) * n_err
template <typename DerivedA, typename DerivedB>
auto apply_estimation_error(const Eigen::MatrixBase<DerivedA> &h_est, const Eigen::MatrixBase<DerivedB> &n_err,
                            typename Eigen::NumTraits<typename DerivedA::Scalar>::Real rho)
{
    using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
    if (h_est.size() != n_err.size())
        throw std::invalid_argument("apply_estimation_error: length mismatch");
    if (!(rho >= Real(0) && rho <= Real(1)))
        throw std::domain_error("apply_estimation_error: rho must lie in [0,1]");
    const Real spread = std::sqrt(Real(1) - rho * rho);
    ComplexVector<Real> h = rho * h_est.derived() + spread * n_err.derived();
    return h;
}

/// Draws h_est, g and n_err on `rng` (in that order) and composes h.
/// With rho == 1 the true channel equals the estimate exactly.
template <typename Scalar, typename Rng>
ChannelDraw<Scalar> sample_channel(int nt, Scalar entry_variance, Scalar rho, Rng &rng)
{
    ChannelDraw<Scalar> d;
    d.h_est = sample_fading<Scalar>(nt, entry_variance, rng);
    d.g = sample_fading<Scalar>(nt, entry_variance, rng);
    d.n_err = sample_fading<Scalar>(nt, entry_variance, rng);
    d.h = apply_estimation_error(d.h_est, d.n_err, rho);
    return d;
}

}  // namespace weit
