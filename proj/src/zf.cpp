// SPDX-License-Identifier: Apache-2.0
//
// hapsim - link-level simulator for relay-assisted HAP MIMO X networks
// Copyright (C) 2026 The hapsim authors
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

#include "hapsim/zf.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hapsim/errors.hpp"

namespace hapsim::zf {

namespace {

void require_well_conditioned(const ComplexMatrix &h, const char *what)
{
    const double cond = gram_condition_number(h);
    if (!(cond < kMaxGramCondition)) {
        std::ostringstream msg;
        msg << what << ": Gram matrix is singular to working precision (condition number "
            << cond << ", limit " << kMaxGramCondition << ")";
        throw SingularityError(msg.str(), cond);
    }
}

// Orthonormal basis of span(h). Only called on well-conditioned input.
ComplexMatrix column_basis(const ComplexMatrix &h)
{
    Eigen::JacobiSVD<ComplexMatrix> svd(h, Eigen::ComputeThinU);
    return svd.matrixU();
}

ComplexMatrix without_column(const ComplexMatrix &h, Index k)
{
    ComplexMatrix rest(h.rows(), h.cols() - 1);
    rest.leftCols(k) = h.leftCols(k);
    rest.rightCols(h.cols() - 1 - k) = h.rightCols(h.cols() - 1 - k);
    return rest;
}

} // namespace

double gram_condition_number(const ComplexMatrix &h)
{
    if (h.cols() == 0)
        return 1.0;
    if (h.rows() < h.cols())
        return std::numeric_limits<double>::infinity();
    const Eigen::VectorXd sv = Eigen::JacobiSVD<ComplexMatrix>(h).singularValues();
    const double smax = sv.maxCoeff();
    const double smin = sv.minCoeff();
    if (!(smin > 0.0))
        return std::numeric_limits<double>::infinity();
    const double ratio = smax / smin;
    return ratio * ratio;
}

ComplexMatrix projection_complement(const ComplexMatrix &h_tilde)
{
    require_finite(h_tilde, "projection_complement input");
    const Index n = h_tilde.rows();
    ComplexMatrix p = ComplexMatrix::Identity(n, n);
    if (h_tilde.cols() == 0)
        return p;
    require_well_conditioned(h_tilde, "projection_complement");
    const ComplexMatrix u = column_basis(h_tilde);
    p.noalias() -= u * u.adjoint();
    return p;
}

StreamSnr zf_stream_snr(const ComplexMatrix &h, Index stream_index, double snr_scale)
{
    if (stream_index < 0 || stream_index >= h.cols())
        throw DomainError("stream_index " + std::to_string(stream_index) + " out of range for " +
                          std::to_string(h.cols()) + " columns");
    if (!(snr_scale > 0.0) || !std::isfinite(snr_scale))
        throw DomainError("snr_scale must be strictly positive and finite");
    require_finite(h, "zf_stream_snr channel");
    require_well_conditioned(h, "zf_stream_snr");

    // h_k^H P h_k = ||P h_k||^2 because P is a Hermitian idempotent.
    ComplexVector residual = h.col(stream_index);
    if (h.cols() > 1) {
        const ComplexMatrix u = column_basis(without_column(h, stream_index));
        residual -= u * (u.adjoint() * residual);
    }
    return {stream_index, snr_scale * residual.squaredNorm()};
}

std::vector<StreamSnr> zf_all_streams(const ComplexMatrix &h, double snr_scale)
{
    std::vector<StreamSnr> out;
    out.reserve(static_cast<std::size_t>(h.cols()));
    for (Index k = 0; k < h.cols(); ++k)
        out.push_back(zf_stream_snr(h, k, snr_scale));
    return out;
}

} // namespace hapsim::zf
