// Copyright 2026 The twobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWOBELL_SAMPLER_H
#define TWOBELL_SAMPLER_H

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "twobell/lhv.h"
#include "twobell/observables.h"
#include "twobell/statevec.h"

namespace twobell::sampler {

enum class Order { AliceFirst, BobFirst };

std::string_view to_string(Order order);

struct Config {
    std::uint64_t num_runs = 1;
    std::uint64_t seed = 0;
    Order order = Order::AliceFirst;
};

struct RunRecord {
    /// (A1A3, a1a3)
    std::array<Sign, 2> alice;
    /// (B2b4, b2B4)
    std::array<Sign, 2> bob;
    lhv::Classification classification;

    lhv::Outcome outcome() const noexcept {
        return {alice[0], alice[1], bob[0], bob[1]};
    }
    bool operator==(const RunRecord &) const = default;
};

/// Counter-based SplitMix64 stream. Run r of a sampling job with seed s reads
/// the stream keyed by (s, r), so every run is reproducible on its own and
/// runs can be generated in any order or in parallel.
class RunStream {
   public:
    using result_type = std::uint64_t;

    RunStream(std::uint64_t seed, std::uint64_t run_index);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

   private:
    std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

/// Samples runs on the two-singlet state.
std::vector<RunRecord> run(const Config &config);

/// Samples runs on an arbitrary 4-qubit state. Each run draws the first
/// party's Bell outcome by the Born rule, collapses by Luders projection, then
/// draws the second party's outcome from the collapsed state. Throws
/// InvalidConfig when num_runs is 0.
std::vector<RunRecord> run(const Config &config, const StateVector &state);

/// Same records as `run`, generated on `threads` worker threads.
std::vector<RunRecord> run_parallel(const Config &config, const StateVector &state, unsigned threads);

struct EmpiricalDistribution {
    OutcomeDistribution distribution;
    /// Counts per outcome index; they sum to `total` exactly.
    std::vector<std::uint64_t> counts;
    std::uint64_t total;
};

/// Relative frequencies over (A1A3, a1a3, B2b4, b2B4). Throws EmptySample on
/// an empty record list.
EmpiricalDistribution empirical_distribution(std::span<const RunRecord> records);

struct ChiSquared {
    double statistic;
    int degrees_of_freedom;
    /// 99.9% quantile of the chi-squared distribution.
    double critical_value;
    double p_value;
    bool below_critical;
};

inline constexpr double kChiSquaredConfidence = 0.999;

/// Goodness of fit against the printed table over its eight nonzero cells.
ChiSquared chi_squared_vs_table1(const EmpiricalDistribution &empirical);

/// Homogeneity test between two samples over cells observed in either one.
ChiSquared chi_squared_two_sample(const EmpiricalDistribution &a, const EmpiricalDistribution &b);

/// k-sigma binomial bound k * sqrt(p (1 - p) / n).
double binomial_bound(double p, std::uint64_t n, double k_sigma = 3.0);

}  // namespace twobell::sampler

#endif
