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

#pragma once

#include <vector>

#include "hapsim/linalg.hpp"

namespace hapsim::zf {

/// Largest accepted condition number of H~^H H~ before zero-forcing is
/// declared singular.
inline constexpr double kMaxGramCondition = 1e12;

struct StreamSnr {
    Index stream_index;
    double snr_linear;
};

/// Condition number of h^H h, computed from the singular values of h.
/// Returns 1 for a matrix without columns and +inf for a rank-deficient one.
double gram_condition_number(const ComplexMatrix &h);

/// P = I - H~ (H~^H H~)^{-1} H~^H, the projector onto the orthogonal
/// complement of span(H~). An H~ with zero columns gives the identity.
/// Throws SingularityError when cond(H~^H H~) >= kMaxGramCondition.
ComplexMatrix projection_complement(const ComplexMatrix &h_tilde);

/// Zero-forcing SNR of stream k: snr_scale * h_k^H P h_k, where h_k is column k
/// of h and P projects out the remaining columns. Equivalent to
/// snr_scale / [(h^H h)^{-1}]_{kk}.
StreamSnr zf_stream_snr(const ComplexMatrix &h, Index stream_index, double snr_scale);

std::vector<StreamSnr> zf_all_streams(const ComplexMatrix &h, double snr_scale);

} // namespace hapsim::zf
