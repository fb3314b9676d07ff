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

#ifndef TWOBELL_OBSERVABLES_H
#define TWOBELL_OBSERVABLES_H

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "twobell/statevec.h"

namespace twobell {

/// A measurement result of a Pauli product.
enum class Sign : int { Minus = -1, Plus = +1 };

constexpr int value(Sign s) {
    return static_cast<int>(s);
}
constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Plus : Sign::Minus;
}
constexpr Sign operator-(Sign s) {
    return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
/// Throws std::invalid_argument unless v is +1 or -1.
Sign sign_from_int(int v);
Sign product(std::span<const Sign> signs);
std::string to_string(Sign s);

enum class Axis { Z, X };

struct SingleQubitObservable {
    Axis axis;
    int qubit;

    /// Particle-style label: Z/X on odd qubits are "A"/"a", on even qubits
    /// "B"/"b", followed by the qubit number (so sigma_z on 1 is "A1").
    std::string label() const;

    auto operator<=>(const SingleQubitObservable &) const = default;
};

constexpr SingleQubitObservable sigma_z(int qubit) {
    return {Axis::Z, qubit};
}
constexpr SingleQubitObservable sigma_x(int qubit) {
    return {Axis::X, qubit};
}

/// Tensor product of Z/X Pauli factors on pairwise distinct qubits. Factors
/// are kept sorted by qubit. Eigenvalues are exactly +1 and -1.
class ObservableProduct {
   public:
    ObservableProduct(SingleQubitObservable single);
    explicit ObservableProduct(std::vector<SingleQubitObservable> factors);
    ObservableProduct(std::initializer_list<SingleQubitObservable> factors);

    std::span<const SingleQubitObservable> factors() const noexcept {
        return factors_;
    }
    int max_qubit() const noexcept;
    /// e.g. "A1A3" or "B2b4".
    std::string label() const;

    bool operator==(const ObservableProduct &) const = default;

   private:
    std::vector<SingleQubitObservable> factors_;
};

ObservableProduct operator*(const ObservableProduct &a, const ObservableProduct &b);

StateVector apply_observable(const ObservableProduct &o, const StateVector &s);

/// True iff the operators commute: the number of shared qubits carrying
/// different axes is even.
bool commute(const ObservableProduct &o1, const ObservableProduct &o2);

/// (I + sign*o)/2 applied to s. The result is unnormalized.
StateVector apply_eigenprojector(const ObservableProduct &o, Sign sign, const StateVector &s);

/// Chained eigenprojection onto o[k] = signs[k] for every k.
StateVector apply_joint_projector(std::span<const ObservableProduct> observables, std::span<const Sign> signs,
                                  const StateVector &s);

/// Probabilities over joint +-1 outcomes of an ordered list of commuting
/// observables.
///
/// Outcome tuples are indexed with the first observable as the most
/// significant digit and +1 before -1, so index 0 is (+1, ..., +1) and the
/// last index is (-1, ..., -1).
class OutcomeDistribution {
   public:
    OutcomeDistribution(std::vector<ObservableProduct> observables, std::vector<double> probabilities);

    std::span<const ObservableProduct> observables() const noexcept {
        return observables_;
    }
    std::span<const double> probabilities() const noexcept {
        return probabilities_;
    }
    std::size_t size() const noexcept {
        return probabilities_.size();
    }
    double probability(std::span<const Sign> outcome) const;
    double probability(std::initializer_list<Sign> outcome) const;
    double total() const noexcept;

    std::vector<Sign> outcome(std::size_t index) const;
    std::size_t index_of(std::span<const Sign> outcome) const;

   private:
    std::vector<ObservableProduct> observables_;
    std::vector<double> probabilities_;
};

/// Born-rule distribution of the commuting set on s. Each entry is the
/// squared norm of the chained projection; entries below 1e-12 are reported
/// as exactly zero. Throws IncompatibleObservables on a non-commuting pair.
OutcomeDistribution joint_outcome_distribution(std::span<const ObservableProduct> observables, const StateVector &s);

/// P(+1) - P(-1).
double expectation(const ObservableProduct &o, const StateVector &s);

}  // namespace twobell

#endif
