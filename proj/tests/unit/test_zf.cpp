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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hapsim/channel.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/zf.hpp"
#include "oracles.hpp"

using namespace hapsim;
using namespace hapsim::zf;

namespace {

double frob(const ComplexMatrix &m) { return m.norm(); }

ComplexMatrix random_unitary(Index n, std::mt19937_64 &rng)
{
    Eigen::HouseholderQR<ComplexMatrix> qr(oracle::gaussian(n, n, rng));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

} // namespace

TEST_CASE("projection_complement basic cases")
{
    ComplexMatrix e1 = ComplexMatrix::Zero(3, 1);
    e1(0, 0) = 1.0;
    ComplexMatrix expected = ComplexMatrix::Identity(3, 3);
    expected(0, 0) = 0.0;
    CHECK(frob(projection_complement(e1) - expected) < 1e-15);

    CHECK(projection_complement(ComplexMatrix(4, 0)) == ComplexMatrix::Identity(4, 4));
}

TEST_CASE("projection_complement matches the pseudo-inverse oracle")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto ht = oracle::gaussian(4, 2, rng);
        const auto p = projection_complement(ht);
        CHECK(frob(p - oracle::pinv_projection(ht)) < 1e-9);
        CHECK(frob(p - p.adjoint()) < 1e-10);
        CHECK(frob(p * p - p) < 1e-10);
        CHECK(frob(p * ht) < 1e-10);
    }
}

TEST_CASE("projection_complement reports rank deficiency with the condition number")
{
    ComplexMatrix ht(3, 2);
    ht.col(0) << 1.0, 2.0, 3.0;
    ht.col(1) = 2.0 * ht.col(0);
    try {
        projection_complement(ht);
        FAIL("expected SingularityError");
    } catch (const SingularityError &e) {
        CHECK(e.condition_number() >= kMaxGramCondition);
    }
}

TEST_CASE("zf_stream_snr on orthogonal columns")
{
    CHECK(zf_stream_snr(ComplexMatrix::Identity(2, 2), 0, 1.0).snr_linear ==
          doctest::Approx(1.0).epsilon(1e-15));

    const double c = 3.5;
    ComplexMatrix h = c * ComplexMatrix::Identity(4, 3);
    for (Index k = 0; k < 3; ++k) {
        const auto s = zf_stream_snr(h, k, 0.2);
        CHECK(s.stream_index == k);
        CHECK(s.snr_linear == doctest::Approx(0.2 * c * c).epsilon(1e-14));
    }
}

TEST_CASE("zf_stream_snr equals the full-inverse diagonal")
{
    std::mt19937_64 rng(43);
    const auto h = oracle::gaussian(4, 3, rng);
    for (Index k = 0; k < 3; ++k)
        CHECK(zf_stream_snr(h, k, 2.5).snr_linear ==
              doctest::Approx(oracle::full_inverse_snr(h, k, 2.5)).epsilon(1e-9));
}

TEST_CASE("zf_all_streams")
{
    const auto s = zf_all_streams(ComplexMatrix::Identity(3, 3), 2.0);
    REQUIRE(s.size() == 3);
    for (const auto &x : s)
        CHECK(x.snr_linear == doctest::Approx(2.0).epsilon(1e-15));

    std::mt19937_64 rng(47);
    const auto h = oracle::gaussian(5, 3, rng);
    const ComplexMatrix inv = (h.adjoint() * h).inverse();
    const auto all = zf_all_streams(h, 0.7);
    for (Index k = 0; k < 3; ++k)
        CHECK(all[static_cast<std::size_t>(k)].snr_linear ==
              doctest::Approx(0.7 / inv(k, k).real()).epsilon(1e-9));

    geometry::LinkGeometry g;
    g.aoa_rad = g.aod_rad = std::numbers::pi / 6.0;
    CHECK_THROWS_AS(zf_all_streams(channel::los_channel(g, 4, 2), 1.0), SingularityError);
}

TEST_CASE("zf_stream_snr argument checks")
{
    const ComplexMatrix h = ComplexMatrix::Identity(3, 2);
    CHECK_THROWS_AS(zf_stream_snr(h, 2, 1.0), DomainError);
    CHECK_THROWS_AS(zf_stream_snr(h, -1, 1.0), DomainError);
    CHECK_THROWS_AS(zf_stream_snr(h, 0, 0.0), DomainError);
    CHECK_THROWS_AS(zf_stream_snr(ComplexMatrix::Identity(2, 3), 0, 1.0), SingularityError);
}

TEST_CASE("zf properties: linear in scale, unitary invariance, oracle agreement")
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int i = 0; i < 300; ++i) {
        const int cols = dim(rng);
        const int rows = cols + dim(rng) - 1;
        const auto h = oracle::gaussian(rows, cols, rng);
        if (oracle::condition_number(h) > 1e6)
            continue;
        const auto u = random_unitary(rows, rng);
        for (Index k = 0; k < cols; ++k) {
            const double s1 = zf_stream_snr(h, k, 1.3).snr_linear;
            CHECK(s1 >= 0.0);
            CHECK(zf_stream_snr(h, k, 2.6).snr_linear == doctest::Approx(2.0 * s1).epsilon(1e-13));
            CHECK(zf_stream_snr(u * h, k, 1.3).snr_linear == doctest::Approx(s1).epsilon(1e-9));
            CHECK(s1 == doctest::Approx(oracle::full_inverse_snr(h, k, 1.3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("gram_condition_number")
{
    CHECK(gram_condition_number(ComplexMatrix(3, 0)) == 1.0);
    ComplexMatrix d = ComplexMatrix::Zero(3, 2);
    d(0, 0) = 10.0;
    d(1, 1) = 1.0;
    CHECK(gram_condition_number(d) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(std::isinf(gram_condition_number(ComplexMatrix::Ones(2, 3))));
}
