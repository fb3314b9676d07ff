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

#ifndef TWOBELL_PROTOCOL_H
#define TWOBELL_PROTOCOL_H

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobell/observables.h"
#include "twobell/statevec.h"

namespace twobell {

// The two-observer scenario: particles 1 and 3 belong to Alice, 2 and 4 to
// Bob. The source emits a singlet on (1,2) and another on (3,4).

/// Bell states. Phi/Psi are the joint eigenvectors of Z(x)Z and X(x)X;
/// Chi/Omega those of Z(x)X and X(x)Z, written with the X-basis kets
/// |0bar> = (|0> + |1>)/sqrt2 and |1bar> = (|0> - |1>)/sqrt2:
///
///     chi+-   = (|0 0bar> +- |1 1bar>)/sqrt2
///     omega+- = (|1 0bar> +- |0 1bar>)/sqrt2
enum class BellFamily { Phi, Psi, Chi, Omega };

/// Which pair of commuting two-qubit products a Bell measurement resolves.
enum class BellBasis {
    PhiPsi,    // Z(x)Z, X(x)X
    ChiOmega,  // Z(x)X, X(x)Z
};

struct BellKind {
    BellFamily family;
    Sign sign;

    BellBasis basis() const noexcept;
    /// Eigenvalues under the basis's two products, in `bell_operators` order.
    std::array<Sign, 2> eigenvalues() const noexcept;
    /// "phi+", "omega-", ...
    std::string label() const;

    bool operator==(const BellKind &) const = default;
};

/// The four kinds of a basis in the order (+,+), (+,-), (-,+), (-,-) of
/// their eigenvalues, e.g. phi+, phi-, psi+, psi- for PhiPsi.
std::array<BellKind, 4> bell_kinds(BellBasis basis);
std::array<BellKind, 8> all_bell_kinds();
BellKind bell_kind_for(BellBasis basis, std::array<Sign, 2> eigenvalues);
std::string_view to_string(BellBasis basis);

struct QubitPair {
    int first;
    int second;

    bool operator==(const QubitPair &) const = default;
};

StateVector singlet_state();
/// |psi->_12 (x) |psi->_34.
StateVector two_singlet_state();

StateVector bell_state(BellKind kind);
/// Same amplitudes as `bell_state(kind)`; the first factor is `pair.first`.
/// Throws InvalidPair when the qubits coincide or fall outside 1..4.
StateVector bell_state(BellKind kind, QubitPair pair);

/// Commuting products whose joint eigenvectors on `pair` are the basis's
/// Bell states: (Z Z, X X) for PhiPsi and (Z X, X Z) for ChiOmega, with the
/// first letter on `pair.first`.
std::array<ObservableProduct, 2> bell_operators(BellBasis basis, QubitPair pair);

/// Places two 2-qubit states on disjoint pairs of a 4-qubit register.
StateVector embed_pair_product(const StateVector &first_state, QubitPair first_pair, const StateVector &second_state,
                               QubitPair second_pair);

/// P(o1 = o2).
double prob_equal(SingleQubitObservable o1, SingleQubitObservable o2, const StateVector &s);

/// P(o = sign).
double event_probability(const ObservableProduct &o, Sign sign, const StateVector &s);

/// P(pair[0] * pair[1] = relation | condition = condition_sign), by Luders
/// projection onto the condition eigenspace and renormalisation. Throws
/// UndefinedConditional when the condition has probability below 1e-12.
double conditional_prob_equal(std::array<SingleQubitObservable, 2> pair, const ObservableProduct &condition,
                              Sign condition_sign, Sign relation, const StateVector &s);

/// A1A3, a1a3, B2b4, b2B4.
std::vector<ObservableProduct> table1_observables();

/// P(A1A3 = +1, a1a3 = +1, B2b4 = +1, b2B4 = -1).
double joint_prob_all_four(const StateVector &s);

/// Joint distribution of `table1_observables()`. Throws InvalidSize unless
/// s has four qubits.
OutcomeDistribution table1(const StateVector &s);

/// Printed table value for a (A1A3, a1a3, B2b4, b2B4) tuple.
double table1_expected(std::span<const Sign> outcome);

/// The four terms P(A1=x, A3=x, B2=y, B4=-y) that decompose
/// P(A1A3=+1, B2=-B4); each must vanish on the two-singlet state.
std::array<double, 4> anticorrelation_expansion_terms(const StateVector &s);

struct BellTerm {
    BellKind first;
    BellKind second;
    Complex coefficient;
};

/// Coefficients of a 4-qubit state in a product of Bell bases on two
/// disjoint pairs. Terms are ordered first-pair-major in `bell_kinds` order.
class BellDecomposition {
   public:
    BellDecomposition(std::array<QubitPair, 2> pairs, std::array<BellBasis, 2> bases, std::vector<BellTerm> terms);

    std::array<QubitPair, 2> pairs() const noexcept {
        return pairs_;
    }
    std::array<BellBasis, 2> bases() const noexcept {
        return bases_;
    }
    std::span<const BellTerm> terms() const noexcept {
        return terms_;
    }
    Complex coefficient(BellKind first, BellKind second) const;
    StateVector reconstruct() const;

   private:
    std::array<QubitPair, 2> pairs_;
    std::array<BellBasis, 2> bases_;
    std::vector<BellTerm> terms_;
};

/// Throws InvalidPairing unless the pairs are disjoint and cover 1..4.
BellDecomposition decompose_bell_basis(const StateVector &s, std::array<QubitPair, 2> pairs,
                                       std::array<BellBasis, 2> bases);

/// Decomposition of the two-singlet state with Phi/Psi on (1,3) and
/// Chi/Omega on (2,4).
BellDecomposition two_singlet_cross_decomposition();

/// The eight nonzero terms of `two_singlet_cross_decomposition` in the
/// reference term order, with their signs (each has magnitude 1/(2 sqrt2)).
struct ReferenceTerm {
    BellKind first;
    BellKind second;
    Sign sign;
};
std::array<ReferenceTerm, 8> cross_decomposition_reference_terms();

enum class PropertyId {
    Eq3,
    Eq4,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    Eq9,
    Eq10,
    Eq11,
    EigenRelationsPhiPsi,
    EigenRelationsChiOmega,
    TableI,
    Swap,
};

std::string_view to_string(PropertyId id);

struct PropertyReport {
    PropertyId id;
    std::string description;
    std::vector<std::string> labels;
    std::vector<double> computed;
    std::vector<double> expected;
    double tolerance;
    bool pass;

    /// Sets `pass` to max |computed - expected| < tolerance.
    static PropertyReport make(PropertyId id, std::string description, std::vector<std::string> labels,
                               std::vector<double> computed, std::vector<double> expected, double tolerance);
    double max_deviation() const;
};

/// Result of Alice's Phi/Psi measurement on (1,3) for one outcome.
struct SwapOutcome {
    BellKind outcome;
    double probability;
    /// Renormalised post-measurement state of particles (2,4).
    StateVector bob_state;
    double fidelity_same_kind;
    double fidelity_chi_plus;
};

std::vector<SwapOutcome> swap_outcomes(const StateVector &s);

/// Probability 1/4 for each of Alice's four outcomes and unit fidelity of
/// Bob's pair with the same-named Bell state. Throws InvalidSize unless s has
/// four qubits.
PropertyReport swap_collapse_report(const StateVector &s);

/// All 13 property reports on the two-singlet state.
std::vector<PropertyReport> verify_all_properties();

}  // namespace twobell

#endif
