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

#include "twobell/sampler.h"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <thread>

#include "twobell/error.h"
#include "twobell/protocol.h"

namespace twobell::sampler {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

using Probabilities = std::array<double, 4>;

std::array<Sign, 2> party_signs(std::size_t index) {
    return {(index & 2U) ? Sign::Minus : Sign::Plus, (index & 1U) ? Sign::Minus : Sign::Plus};
}

Probabilities party_distribution(const std::array<ObservableProduct, 2> &ops, const StateVector &s) {
    auto dist = joint_outcome_distribution(ops, s);
    Probabilities out{};
    std::copy(dist.probabilities().begin(), dist.probabilities().end(), out.begin());
    return out;
}

// Inverse CDF; zero-probability cells are never returned.
std::size_t draw(const Probabilities &p, double u) {
    double cumulative = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        if (p[i] <= 0) {
            continue;
        }
        cumulative += p[i];
        last_nonzero = i;
        if (u < cumulative) {
            return i;
        }
    }
    return last_nonzero;
}

/// Both parties' Bell measurements, with the second party's outcome
/// distribution precomputed for each outcome of the first.
class MeasurementPlan {
   public:
    MeasurementPlan(const StateVector &state, Order order) : order_(order) {
        if (state.num_qubits() != 4) {
            throw Error(ErrorKind::InvalidSize, "sampler needs a 4-qubit state");
        }
        auto alice = bell_operators(BellBasis::PhiPsi, {1, 3});
        auto bob = bell_operators(BellBasis::ChiOmega, {2, 4});
        const auto &first = order == Order::AliceFirst ? alice : bob;
        const auto &second = order == Order::AliceFirst ? bob : alice;

        first_ = party_distribution(first, state);
        for (std::size_t j = 0; j < 4; j++) {
            second_[j] = Probabilities{};
            if (first_[j] > 0) {
                StateVector collapsed = apply_joint_projector(first, party_signs(j), state).normalized();
                second_[j] = party_distribution(second, collapsed);
            }
        }
    }

    RunRecord sample(RunStream &stream) const {
        std::size_t j = draw(first_, stream.uniform());
        std::size_t k = draw(second_[j], stream.uniform());
        auto first_signs = party_signs(j);
        auto second_signs = party_signs(k);
        RunRecord r{};
        r.alice = order_ == Order::AliceFirst ? first_signs : second_signs;
        r.bob = order_ == Order::AliceFirst ? second_signs : first_signs;
        r.classification = lhv::classify_outcome(r.outcome());
        return r;
    }

   private:
    Order order_;
    Probabilities first_{};
    std::array<Probabilities, 4> second_{};
};

void check_config(const Config &config) {
    if (config.num_runs < 1) {
        throw Error(ErrorKind::InvalidConfig, "num_runs must be at least 1");
    }
}

ChiSquared finish(double statistic, int dof) {
    if (dof < 1) {
        return {statistic, dof, 0.0, 1.0, true};
    }
    boost::math::chi_squared dist(dof);
    double critical = boost::math::quantile(dist, kChiSquaredConfidence);
    double p_value = boost::math::cdf(boost::math::complement(dist, statistic));
    return {statistic, dof, critical, p_value, statistic < critical};
}

}  // namespace

std::string_view to_string(Order order) {
    return order == Order::AliceFirst ? "alice-first" : "bob-first";
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RunStream::RunStream(std::uint64_t seed, std::uint64_t run_index)
    : state_(splitmix64_mix(seed + kGolden) ^ splitmix64_mix(run_index * kGolden + 0x632BE59BD9B4E019ULL)) {
}

RunStream::result_type RunStream::operator()() {
    state_ += kGolden;
    return splitmix64_mix(state_);
}

double RunStream::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::vector<RunRecord> run(const Config &config) {
    return run(config, two_singlet_state());
}

std::vector<RunRecord> run(const Config &config, const StateVector &state) {
    check_config(config);
    MeasurementPlan plan(state, config.order);
    std::vector<RunRecord> records;
    records.reserve(config.num_runs);
    for (std::uint64_t r = 0; r < config.num_runs; r++) {
        RunStream stream(config.seed, r);
        records.push_back(plan.sample(stream));
    }
    return records;
}

std::vector<RunRecord> run_parallel(const Config &config, const StateVector &state, unsigned threads) {
    check_config(config);
    threads = std::max(1U, threads);
    MeasurementPlan plan(state, config.order);
    std::vector<RunRecord> records(config.num_runs);
    std::uint64_t chunk = (config.num_runs + threads - 1) / threads;
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; t++) {
            std::uint64_t begin = t * chunk;
            std::uint64_t end = std::min<std::uint64_t>(config.num_runs, begin + chunk);
            if (begin >= end) {
                break;
            }
            workers.emplace_back([&, begin, end] {
                for (std::uint64_t r = begin; r < end; r++) {
                    RunStream stream(config.seed, r);
                    records[r] = plan.sample(stream);
                }
            });
        }
    }
    return records;
}

EmpiricalDistribution empirical_distribution(std::span<const RunRecord> records) {
    if (records.empty()) {
        throw Error(ErrorKind::EmptySample, "no runs to tabulate");
    }
    OutcomeDistribution shape(table1_observables(), std::vector<double>(16));
    std::vector<std::uint64_t> counts(16, 0);
    for (const auto &r : records) {
        auto outcome = r.outcome();
        counts[shape.index_of(outcome)]++;
    }
    std::vector<double> freq(16);
    for (std::size_t i = 0; i < freq.size(); i++) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(records.size());
    }
    return {OutcomeDistribution(table1_observables(), std::move(freq)), std::move(counts), records.size()};
}

ChiSquared chi_squared_vs_table1(const EmpiricalDistribution &empirical) {
    double statistic = 0;
    int cells = 0;
    for (std::size_t i = 0; i < empirical.counts.size(); i++) {
        double p = table1_expected(empirical.distribution.outcome(i));
        if (p <= 0) {
            continue;
        }
        double expected = p * static_cast<double>(empirical.total);
        double diff = static_cast<double>(empirical.counts[i]) - expected;
        statistic += diff * diff / expected;
        cells++;
    }
    return finish(statistic, cells - 1);
}

ChiSquared chi_squared_two_sample(const EmpiricalDistribution &a, const EmpiricalDistribution &b) {
    double na = static_cast<double>(a.total);
    double nb = static_cast<double>(b.total);
    double statistic = 0;
    int cells = 0;
    for (std::size_t i = 0; i < a.counts.size(); i++) {
        double column = static_cast<double>(a.counts[i] + b.counts[i]);
        if (column == 0) {
            continue;
        }
        double ea = na * column / (na + nb);
        double eb = nb * column / (na + nb);
        double da = static_cast<double>(a.counts[i]) - ea;
        double db = static_cast<double>(b.counts[i]) - eb;
        statistic += da * da / ea + db * db / eb;
        cells++;
    }
    return finish(statistic, cells - 1);
}

double binomial_bound(double p, std::uint64_t n, double k_sigma) {
    return k_sigma * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace twobell::sampler
