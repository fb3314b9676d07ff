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

#include "twobell/observables.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "twobell/error.h"

namespace twobell {

namespace {

constexpr double kZeroFloor = 1e-12;

void check_fits(const ObservableProduct &o, const StateVector &s) {
    if (o.max_qubit() > s.num_qubits()) {
        throw Error(ErrorKind::InvalidObservable,
                    o.label() + " acts outside a " + std::to_string(s.num_qubits()) + "-qubit state");
    }
}

}  // namespace

Sign sign_from_int(int v) {
    if (v == 1) {
        return Sign::Plus;
    }
    if (v == -1) {
        return Sign::Minus;
    }
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

Sign product(std::span<const Sign> signs) {
    Sign out = Sign::Plus;
    for (Sign s : signs) {
        out = out * s;
    }
    return out;
}

std::string to_string(Sign s) {
    return s == Sign::Plus ? "+1" : "-1";
}

std::string SingleQubitObservable::label() const {
    char letter;
    if (qubit % 2 == 1) {
        letter = axis == Axis::Z ? 'A' : 'a';
    } else {
        letter = axis == Axis::Z ? 'B' : 'b';
    }
    return letter + std::to_string(qubit);
}

ObservableProduct::ObservableProduct(SingleQubitObservable single)
    : ObservableProduct(std::vector<SingleQubitObservable>{single}) {
}

ObservableProduct::ObservableProduct(std::initializer_list<SingleQubitObservable> factors)
    : ObservableProduct(std::vector<SingleQubitObservable>(factors)) {
}

ObservableProduct::ObservableProduct(std::vector<SingleQubitObservable> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorKind::InvalidObservable, "observable product needs at least one factor");
    }
    for (const auto &f : factors_) {
        if (f.qubit < 1 || f.qubit > kMaxQubits) {
            throw Error(ErrorKind::InvalidObservable, "qubit " + std::to_string(f.qubit) + " out of range");
        }
    }
    std::sort(factors_.begin(), factors_.end(), [](const auto &x, const auto &y) { return x.qubit < y.qubit; });
    for (std::size_t k = 1; k < factors_.size(); k++) {
        if (factors_[k].qubit == factors_[k - 1].qubit) {
            throw Error(ErrorKind::InvalidObservable,
                        "two factors on qubit " + std::to_string(factors_[k].qubit));
        }
    }
}

int ObservableProduct::max_qubit() const noexcept {
    return factors_.back().qubit;
}

std::string ObservableProduct::label() const {
    std::string out;
    for (const auto &f : factors_) {
        out += f.label();
    }
    return out;
}

ObservableProduct operator*(const ObservableProduct &a, const ObservableProduct &b) {
    std::vector<SingleQubitObservable> all(a.factors().begin(), a.factors().end());
    all.insert(all.end(), b.factors().begin(), b.factors().end());
    return ObservableProduct(std::move(all));
}

StateVector apply_observable(const ObservableProduct &o, const StateVector &s) {
    check_fits(o, s);
    int n = s.num_qubits();
    std::size_t flip_mask = 0;
    std::size_t phase_mask = 0;
    for (const auto &f : o.factors()) {
        std::size_t bit = std::size_t{1} << (n - f.qubit);
        (f.axis == Axis::X ? flip_mask : phase_mask) |= bit;
    }
    std::vector<Complex> out(s.dimension());
    auto in = s.amplitudes();
    for (std::size_t i = 0; i < s.dimension(); i++) {
        // sigma_z picks up -1 on |1>; sigma_x then moves the amplitude to i ^ flip.
        bool odd = std::popcount(i & phase_mask) % 2 == 1;
        out[i ^ flip_mask] = odd ? -in[i] : in[i];
    }
    return StateVector::unnormalized(std::move(out));
}

bool commute(const ObservableProduct &o1, const ObservableProduct &o2) {
    int clashes = 0;
    for (const auto &f : o1.factors()) {
        for (const auto &g : o2.factors()) {
            if (f.qubit == g.qubit && f.axis != g.axis) {
                clashes++;
            }
        }
    }
    return clashes % 2 == 0;
}

StateVector apply_eigenprojector(const ObservableProduct &o, Sign sign, const StateVector &s) {
    StateVector image = apply_observable(o, s);
    double w = value(sign);
    std::vector<Complex> out(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); i++) {
        out[i] = 0.5 * (s.amplitudes()[i] + w * image.amplitudes()[i]);
    }
    return StateVector::unnormalized(std::move(out));
}

StateVector apply_joint_projector(std::span<const ObservableProduct> observables, std::span<const Sign> signs,
                                  const StateVector &s) {
    if (observables.size() != signs.size()) {
        throw Error(ErrorKind::InvalidObservable, "one sign is needed per observable");
    }
    StateVector v = s;
    for (std::size_t k = 0; k < observables.size(); k++) {
        v = apply_eigenprojector(observables[k], signs[k], v);
    }
    return v;
}

OutcomeDistribution::OutcomeDistribution(std::vector<ObservableProduct> observables, std::vector<double> probabilities)
    : observables_(std::move(observables)), probabilities_(std::move(probabilities)) {
    if (observables_.empty() || probabilities_.size() != (std::size_t{1} << observables_.size())) {
        throw Error(ErrorKind::InvalidSize, "distribution needs 2^k entries for k >= 1 observables");
    }
}

std::size_t OutcomeDistribution::index_of(std::span<const Sign> outcome) const {
    if (outcome.size() != observables_.size()) {
        throw Error(ErrorKind::InvalidSize, "outcome has " + std::to_string(outcome.size()) + " signs, expected " +
                                                std::to_string(observables_.size()));
    }
    std::size_t index = 0;
    for (Sign s : outcome) {
        index = (index << 1) | (s == Sign::Minus ? 1U : 0U);
    }
    return index;
}

std::vector<Sign> OutcomeDistribution::outcome(std::size_t index) const {
    std::size_t k = observables_.size();
    std::vector<Sign> out(k);
    for (std::size_t j = 0; j < k; j++) {
        out[j] = ((index >> (k - 1 - j)) & 1U) ? Sign::Minus : Sign::Plus;
    }
    return out;
}

double OutcomeDistribution::probability(std::span<const Sign> outcome) const {
    return probabilities_[index_of(outcome)];
}

double OutcomeDistribution::probability(std::initializer_list<Sign> outcome) const {
    return probability(std::span<const Sign>(outcome.begin(), outcome.size()));
}

double OutcomeDistribution::total() const noexcept {
    double t = 0;
    for (double p : probabilities_) {
        t += p;
    }
    return t;
}

OutcomeDistribution joint_outcome_distribution(std::span<const ObservableProduct> observables, const StateVector &s) {
    if (observables.empty()) {
        throw Error(ErrorKind::InvalidObservable, "empty observable set");
    }
    for (std::size_t i = 0; i < observables.size(); i++) {
        check_fits(observables[i], s);
        for (std::size_t j = i + 1; j < observables.size(); j++) {
            if (!commute(observables[i], observables[j])) {
                throw Error(ErrorKind::IncompatibleObservables,
                            observables[i].label() + " and " + observables[j].label() + " do not commute");
            }
        }
    }
    std::vector<ObservableProduct> obs(observables.begin(), observables.end());
    OutcomeDistribution shape(obs, std::vector<double>(std::size_t{1} << obs.size()));
    std::vector<double> probs(shape.size());
    for (std::size_t index = 0; index < shape.size(); index++) {
        auto signs = shape.outcome(index);
        double p = apply_joint_projector(obs, signs, s).norm_squared();
        probs[index] = p < kZeroFloor ? 0.0 : p;
    }
    return OutcomeDistribution(std::move(obs), std::move(probs));
}

double expectation(const ObservableProduct &o, const StateVector &s) {
    auto dist = joint_outcome_distribution(std::span<const ObservableProduct>(&o, 1), s);
    return dist.probability({Sign::Plus}) - dist.probability({Sign::Minus});
}

}  // namespace twobell
