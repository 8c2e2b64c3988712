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

#include "weit/channel.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>

namespace weit {

/// Limited-feedback beamforming codebook; column i is codeword w_i.
template <typename Scalar>
struct Codebook {
    ComplexMatrix<Scalar> vectors;
    int bits = 0;

    Eigen::Index size() const { return vectors.cols(); }
    int nt() const { return static_cast<int>(vectors.rows()); }
};

/// Random vector quantization: 2^bits i.i.d. isotropic unit vectors.
template <typename Scalar, typename Rng>
Codebook<Scalar> generate_rvq(int nt, int bits, Rng &rng)
{
    if (nt < 1)
        throw std::invalid_argument("generate_rvq: nt must be >= 1");
    if (bits < 0 || bits > 30)
        throw std::invalid_argument("generate_rvq: bits must lie in [0,30]");
    const Eigen::Index count = Eigen::Index(1) << bits;
    Codebook<Scalar> cb;
    cb.bits = bits;
    cb.vectors.resize(nt, count);
    for (Eigen::Index i = 0; i < count; ++i) {
        ComplexVector<Scalar> w;
        Scalar norm = Scalar(0);
        // a zero Gaussian draw has probability zero; resample anyway
        do {
            w = sample_fading<Scalar>(nt, Scalar(2), rng);
            norm = w.norm();
        } while (norm == Scalar(0));
        cb.vectors.col(i) = w / norm;
    }
    return cb;
}

/// Index of the codeword maximizing |h^H w_i|^2; ties go to the lowest index.
template <typename Derived, typename Scalar>
Eigen::Index select_codeword(const Eigen::MatrixBase<Derived> &h, const Codebook<Scalar> &cb)
{
    if (h.size() != cb.vectors.rows())
        throw std::invalid_argument("select_codeword: channel length does not match codebook");
    if (h.squaredNorm() == Scalar(0))
        throw std::domain_error("select_codeword: zero channel has no direction");
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> gains = (cb.vectors.adjoint() * h.derived()).cwiseAbs2();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < gains.size(); ++i)
        if (gains[i] > gains[best])
            best = i;
    return best;
}

/// |h^H w|^2 / (|h|^2 |w|^2), the squared cosine between channel and beam.
template <typename DerivedA, typename DerivedB>
auto quantization_gain(const Eigen::MatrixBase<DerivedA> &h, const Eigen::MatrixBase<DerivedB> &w)
{
    using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
    if (h.size() != w.size())
        throw std::invalid_argument("quantization_gain: length mismatch");
    const Real hh = h.squaredNorm();
    const Real ww = w.squaredNorm();
    if (hh == Real(0) || ww == Real(0))
        throw std::domain_error("quantization_gain: zero vector");
    const Real g = std::norm(h.dot(w)) / (hh * ww);
    return g > Real(1) ? Real(1) : g;
}

/// Density of the largest of 2^bits i.i.d. Beta(1, nt-1) variables.
double max_beta_pdf(double x, int nt, int bits);

/// Its distribution function, (1 - (1-x)^(nt-1))^(2^bits).
double max_beta_cdf(double x, int nt, int bits);

/// Mean of the largest of 2^bits i.i.d. Beta(1, nt-1) variables:
/// 1 - 2^B * Beta(2^B, nt/(nt-1)), evaluated through log-gamma.
double expected_max_beta(int nt, int bits);

/// Lower end of the RVQ gain sandwich, 1 - 2^(-B/(nt-1)).
double rvq_gain_lower(int nt, int bits);

/// Upper end of the RVQ gain sandwich, 1 - (nt-1)/nt * 2^(-B/(nt-1)).
double rvq_gain_upper(int nt, int bits);

}  // namespace weit
