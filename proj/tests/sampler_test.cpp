// Copyright 2026 The lsvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsvd/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "lsvd/error.hpp"
#include "lsvd/lindblad.hpp"
#include "lsvd/models.hpp"
#include "test_util.hpp"

namespace lsvd {
namespace {

using testing::code_of;

constexpr std::uint64_t kShots = std::uint64_t{1} << 19;

std::uint64_t total_counts(const ShotResult& r) {
    std::uint64_t total = 0;
    for (const auto& [index, hits] : r.counts) total += hits;
    return total;
}

TEST(Sample, BasisStateConcentrates) {
    const ShotResult r = sample(Statevector::basis(3, 5), 1000, 7);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(r.count(5), 1000u);
    EXPECT_EQ(r.postselected_shots, 0u);  // index 5 has the ancilla bit set
    EXPECT_EQ(r.num_qubits, 3);
    const ShotResult low = sample(Statevector::basis(3, 2), 1000, 7);
    EXPECT_EQ(low.postselected_shots, 1000u);
}

TEST(Sample, UniformWithinFiveSigma) {
    const Statevector uniform(ComplexVector::Constant(4, 0.5));
    const ShotResult r = sample(uniform, kShots, 2024);
    EXPECT_EQ(total_counts(r), kShots);
    const double mean = kShots / 4.0;
    const double sigma = std::sqrt(kShots * 0.25 * 0.75);
    for (std::uint64_t i = 0; i < 4; ++i) {
        EXPECT_LE(std::abs(double(r.count(i)) - mean), 5.0 * sigma) << i;
    }
    EXPECT_EQ(r.postselected_shots, r.count(0) + r.count(1));
}

TEST(Sample, ShotTotalsAndPostselection) {
    std::mt19937_64 rng(60);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexVector v = testing::random_vector(rng, 32);
        const ShotResult r = sample(Statevector(v / v.norm()), 12345 + trial, trial);
        EXPECT_EQ(total_counts(r), r.shots);
        std::uint64_t low = 0;
        for (const auto& [index, hits] : r.counts) {
            if (index < 16) low += hits;
            EXPECT_GT(hits, 0u);
        }
        EXPECT_EQ(r.postselected_shots, low);
    }
}

TEST(Sample, SeedDeterminism) {
    std::mt19937_64 rng(61);
    ComplexVector v = testing::random_vector(rng, 64);
    const Statevector s(v / v.norm());
    const ShotResult a = sample(s, kShots, 99);
    const ShotResult b = sample(s, kShots, 99);
    const ShotResult c = sample(s, kShots, 100);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.seed, 99u);
    EXPECT_NE(a.counts, c.counts);
}

TEST(Sample, SubstreamSeed) {
    EXPECT_EQ(substream_seed(0, 5), 5u);
    EXPECT_EQ(substream_seed(0b1010, 0b0110), 0b1100u);
}

TEST(Sample, RejectsZeroShots) {
    EXPECT_EQ(code_of([] { sample(Statevector::basis(1, 0), 0, 1); }),
              ErrorCode::InvalidParameter);
}

ShotResult record(int num_qubits, std::map<std::uint64_t, std::uint64_t> counts) {
    ShotResult r;
    r.num_qubits = num_qubits;
    r.counts = std::move(counts);
    const auto half = std::uint64_t{1} << (num_qubits - 1);
    for (const auto& [index, hits] : r.counts) {
        r.shots += hits;
        if (index < half) r.postselected_shots += hits;
    }
    return r;
}

TEST(Estimate, CountsAtFirstDiagonalSlot) {
    const auto pops = estimate_populations(record(6, {{0, 500}, {40, 20}}), 5, 5);
    EXPECT_EQ(pops, (std::vector<double>{1.0, 0.0, 0.0, 0.0, 0.0}));
}

TEST(Estimate, IgnoresCoherenceSlots) {
    // r = 2: diagonal slots 0 and 3; slots 1, 2 hold coherences.
    const auto pops = estimate_populations(record(3, {{0, 100}, {1, 500}, {2, 500}, {3, 400}}), 2, 2);
    EXPECT_NEAR(pops[0], 10.0 / 30.0, 1e-15);
    EXPECT_NEAR(pops[1], 20.0 / 30.0, 1e-15);
}

TEST(Estimate, MaximallyMixedQubit) {
    ComplexVector sys(4);
    sys << 0.5, 0.0, 0.0, 0.5;
    const ShotResult r = sample(Statevector::from_system(sys, 2), kShots, 5);
    const auto pops = estimate_populations(r, 2, 2);
    // Each count is binomial(shots, 1/2); the estimate moves by at most ~sigma/(2 shots).
    EXPECT_NEAR(pops[0], 0.5, 5.0 * 0.5 / std::sqrt(double(kShots)));
    EXPECT_NEAR(pops[0] + pops[1], 1.0, 1e-15);
}

TEST(Estimate, Errors) {
    EXPECT_EQ(code_of([] { estimate_populations(record(3, {{4, 10}}), 2, 2); }),
              ErrorCode::AllZeroDiagonal);
    EXPECT_EQ(code_of([] { estimate_populations(record(3, {{1, 10}}), 2, 2); }),
              ErrorCode::AllZeroDiagonal);
    EXPECT_EQ(code_of([] { estimate_populations(record(3, {{0, 10}}), 3, 2); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { estimate_populations(record(4, {{0, 10}}), 2, 2); }),
              ErrorCode::DimensionMismatch);
}

struct SampledPoint {
    std::vector<double> estimate;
    std::vector<double> oracle;
};

SampledPoint fmo3_point(double t, double factor, std::uint64_t shots, std::uint64_t seed) {
    const auto [model, rho0] = fmo_model(FMOParams::defaults(3));
    const ComplexMatrix m = factor * propagator(build_superoperator(model), t);
    const SvdCircuit c = build_svd_circuit(decompose(pad_to_power_of_two(m)));
    const ExactRun run = run_exact(c, Statevector::from_system(vectorize(rho0), c.k));
    const Statevector out(run.final_state / run.final_state.norm());
    const ShotResult shots_out = sample(out, shots, seed);
    const std::vector<double> times{t};
    return {estimate_populations(shots_out, 5, c.k),
            classical_evolve(model, rho0, times).populations[0]};
}

double max_error(const SampledPoint& p) {
    double err = 0.0;
    for (std::size_t i = 0; i < p.oracle.size(); ++i) {
        err = std::max(err, std::abs(p.estimate[i] - p.oracle[i]));
    }
    return err;
}

TEST(Estimate, Fmo3At200fsWithinTolerance) {
    const SampledPoint p = fmo3_point(200.0, 1.0, kShots, 11);
    EXPECT_LE(max_error(p), 0.02);
    for (double x : p.estimate) {
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0 + 1e-6);
    }
}

TEST(Estimate, InvariantUnderPropagatorScale) {
    for (double factor : {0.5, 1.0, 3.0}) {
        const SampledPoint p = fmo3_point(200.0, factor, kShots, 12);
        EXPECT_LE(max_error(p), 0.02) << "factor " << factor;
    }
    // The postselected distribution is exactly scale free.
    const auto [model, rho0] = fmo_model(FMOParams::defaults(3));
    const ComplexMatrix m = propagator(build_superoperator(model), 200.0);
    std::vector<ComplexVector> conditioned;
    for (double factor : {0.5, 3.0}) {
        const SvdCircuit c = build_svd_circuit(decompose(pad_to_power_of_two(factor * m)));
        const ExactRun run = run_exact(c, Statevector::from_system(vectorize(rho0), c.k));
        conditioned.push_back(run.conditioned / run.conditioned.norm());
    }
    EXPECT_LE((conditioned[0] - conditioned[1]).norm(), 1e-10);
}

}  // namespace
}  // namespace lsvd
