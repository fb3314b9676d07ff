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

#include "twobell/protocol.h"

#include <algorithm>
#include <cmath>

#include "twobell/error.h"

namespace twobell {

namespace {

constexpr double kZeroTolerance = 1e-12;

StateVector superpose(const StateVector &a, const StateVector &b, Sign sign) {
    std::vector<Complex> out(a.dimension());
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = a.amplitudes()[i] + static_cast<double>(value(sign)) * b.amplitudes()[i];
    }
    return StateVector::from_amplitudes(std::move(out));
}

void check_pair(QubitPair pair) {
    if (pair.first == pair.second || pair.first < 1 || pair.second < 1 || pair.first > kMaxQubits ||
        pair.second > kMaxQubits) {
        throw Error(ErrorKind::InvalidPair,
                    "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ") is not a valid pair");
    }
}

void check_pairing(const std::array<QubitPair, 2> &pairs) {
    std::array<int, 4> qubits{pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second};
    std::array<bool, 5> seen{};
    for (int q : qubits) {
        if (q < 1 || q > 4 || seen[q]) {
            throw Error(ErrorKind::InvalidPairing, "pairs must be disjoint and cover qubits 1..4");
        }
        seen[q] = true;
    }
}

void check_four_qubits(const StateVector &s) {
    if (s.num_qubits() != 4) {
        throw Error(ErrorKind::InvalidSize, "expected a 4-qubit state, got " + std::to_string(s.num_qubits()));
    }
}

/// Distribution of two single-qubit observables on distinct qubits.
OutcomeDistribution pair_distribution(SingleQubitObservable o1, SingleQubitObservable o2, const StateVector &s) {
    if (o1.qubit == o2.qubit) {
        throw Error(ErrorKind::InvalidObservable, o1.label() + " and " + o2.label() + " share a qubit");
    }
    std::vector<ObservableProduct> obs{ObservableProduct(o1), ObservableProduct(o2)};
    return joint_outcome_distribution(obs, s);
}

double pair_relation_probability(const OutcomeDistribution &dist, Sign relation) {
    double p = 0;
    for (std::size_t i = 0; i < dist.size(); i++) {
        auto signs = dist.outcome(i);
        if (product(signs) == relation) {
            p += dist.probabilities()[i];
        }
    }
    return p;
}

}  // namespace

BellBasis BellKind::basis() const noexcept {
    return (family == BellFamily::Phi || family == BellFamily::Psi) ? BellBasis::PhiPsi : BellBasis::ChiOmega;
}

std::array<Sign, 2> BellKind::eigenvalues() const noexcept {
    Sign first = (family == BellFamily::Phi || family == BellFamily::Chi) ? Sign::Plus : Sign::Minus;
    return {first, sign};
}

std::string BellKind::label() const {
    std::string name;
    switch (family) {
        case BellFamily::Phi:
            name = "phi";
            break;
        case BellFamily::Psi:
            name = "psi";
            break;
        case BellFamily::Chi:
            name = "chi";
            break;
        case BellFamily::Omega:
            name = "omega";
            break;
    }
    return name + (sign == Sign::Plus ? "+" : "-");
}

std::array<BellKind, 4> bell_kinds(BellBasis basis) {
    auto [plus_family, minus_family] = basis == BellBasis::PhiPsi ? std::pair{BellFamily::Phi, BellFamily::Psi}
                                                                  : std::pair{BellFamily::Chi, BellFamily::Omega};
    return {BellKind{plus_family, Sign::Plus}, BellKind{plus_family, Sign::Minus}, BellKind{minus_family, Sign::Plus},
            BellKind{minus_family, Sign::Minus}};
}

std::array<BellKind, 8> all_bell_kinds() {
    auto a = bell_kinds(BellBasis::PhiPsi);
    auto b = bell_kinds(BellBasis::ChiOmega);
    return {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
}

BellKind bell_kind_for(BellBasis basis, std::array<Sign, 2> eigenvalues) {
    for (const auto &k : bell_kinds(basis)) {
        if (k.eigenvalues() == eigenvalues) {
            return k;
        }
    }
    return bell_kinds(basis)[0];  // unreachable: the four kinds cover all sign pairs
}

std::string_view to_string(BellBasis basis) {
    return basis == BellBasis::PhiPsi ? "phi/psi" : "chi/omega";
}

StateVector singlet_state() {
    return bell_state(BellKind{BellFamily::Psi, Sign::Minus});
}

StateVector two_singlet_state() {
    return tensor(singlet_state(), singlet_state());
}

StateVector bell_state(BellKind kind) {
    static const StateVector zero = basis_state("0");
    static const StateVector one = basis_state("1");
    static const StateVector zero_bar = StateVector::from_amplitudes({1.0, 1.0});
    static const StateVector one_bar = StateVector::from_amplitudes({1.0, -1.0});
    switch (kind.family) {
        case BellFamily::Phi:
            return superpose(tensor(zero, zero), tensor(one, one), kind.sign);
        case BellFamily::Psi:
            return superpose(tensor(zero, one), tensor(one, zero), kind.sign);
        case BellFamily::Chi:
            return superpose(tensor(zero, zero_bar), tensor(one, one_bar), kind.sign);
        case BellFamily::Omega:
            return superpose(tensor(one, zero_bar), tensor(zero, one_bar), kind.sign);
    }
    throw Error(ErrorKind::InvalidPair, "unknown Bell family");
}

StateVector bell_state(BellKind kind, QubitPair pair) {
    check_pair(pair);
    return bell_state(kind);
}

std::array<ObservableProduct, 2> bell_operators(BellBasis basis, QubitPair pair) {
    check_pair(pair);
    if (basis == BellBasis::PhiPsi) {
        return {ObservableProduct{sigma_z(pair.first), sigma_z(pair.second)},
                ObservableProduct{sigma_x(pair.first), sigma_x(pair.second)}};
    }
    return {ObservableProduct{sigma_z(pair.first), sigma_x(pair.second)},
            ObservableProduct{sigma_x(pair.first), sigma_z(pair.second)}};
}

StateVector embed_pair_product(const StateVector &first_state, QubitPair first_pair, const StateVector &second_state,
                               QubitPair second_pair) {
    check_pairing({first_pair, second_pair});
    if (first_state.num_qubits() != 2 || second_state.num_qubits() != 2) {
        throw Error(ErrorKind::InvalidSize, "pair states must have two qubits");
    }
    QubitPermutation placement({first_pair.first, first_pair.second, second_pair.first, second_pair.second});
    return permute_qubits(tensor(first_state, second_state), placement);
}

double prob_equal(SingleQubitObservable o1, SingleQubitObservable o2, const StateVector &s) {
    auto dist = pair_distribution(o1, o2, s);
    return dist.probability({Sign::Plus, Sign::Plus}) + dist.probability({Sign::Minus, Sign::Minus});
}

double event_probability(const ObservableProduct &o, Sign sign, const StateVector &s) {
    return apply_eigenprojector(o, sign, s).norm_squared();
}

double conditional_prob_equal(std::array<SingleQubitObservable, 2> pair, const ObservableProduct &condition,
                              Sign condition_sign, Sign relation, const StateVector &s) {
    StateVector projected = apply_eigenprojector(condition, condition_sign, s);
    double p = projected.norm_squared();
    if (p < kZeroTolerance) {
        throw Error(ErrorKind::UndefinedConditional,
                    "P(" + condition.label() + " = " + to_string(condition_sign) + ") is zero");
    }
    auto dist = pair_distribution(pair[0], pair[1], projected.normalized());
    return pair_relation_probability(dist, relation);
}

std::vector<ObservableProduct> table1_observables() {
    return {
        ObservableProduct{sigma_z(1), sigma_z(3)},
        ObservableProduct{sigma_x(1), sigma_x(3)},
        ObservableProduct{sigma_z(2), sigma_x(4)},
        ObservableProduct{sigma_x(2), sigma_z(4)},
    };
}

double joint_prob_all_four(const StateVector &s) {
    check_four_qubits(s);
    auto obs = table1_observables();
    std::array<Sign, 4> signs{Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus};
    return apply_joint_projector(obs, signs, s).norm_squared();
}

OutcomeDistribution table1(const StateVector &s) {
    check_four_qubits(s);
    return joint_outcome_distribution(table1_observables(), s);
}

double table1_expected(std::span<const Sign> outcome) {
    if (outcome.size() != 4) {
        throw Error(ErrorKind::InvalidSize, "table rows have four signs");
    }
    // Printed rows: Alice's two signs, whether Bob's signs are equal (+-,+-)
    // or opposite (+-,-+), and the probability.
    struct Row {
        Sign alice_zz;
        Sign alice_xx;
        bool bob_equal;
        double probability;
    };
    static constexpr std::array<Row, 8> rows{{
        {Sign::Plus, Sign::Plus, true, 0.0},
        {Sign::Plus, Sign::Plus, false, 0.125},
        {Sign::Plus, Sign::Minus, true, 0.125},
        {Sign::Plus, Sign::Minus, false, 0.0},
        {Sign::Minus, Sign::Plus, true, 0.125},
        {Sign::Minus, Sign::Plus, false, 0.0},
        {Sign::Minus, Sign::Minus, true, 0.0},
        {Sign::Minus, Sign::Minus, false, 0.125},
    }};
    bool bob_equal = outcome[2] == outcome[3];
    for (const auto &row : rows) {
        if (row.alice_zz == outcome[0] && row.alice_xx == outcome[1] && row.bob_equal == bob_equal) {
            return row.probability;
        }
    }
    return 0.0;
}

std::array<double, 4> anticorrelation_expansion_terms(const StateVector &s) {
    check_four_qubits(s);
    std::vector<ObservableProduct> obs{sigma_z(1), sigma_z(3), sigma_z(2), sigma_z(4)};
    auto dist = joint_outcome_distribution(obs, s);
    using enum Sign;
    return {
        dist.probability({Plus, Plus, Plus, Minus}),
        dist.probability({Minus, Minus, Plus, Minus}),
        dist.probability({Plus, Plus, Minus, Plus}),
        dist.probability({Minus, Minus, Minus, Plus}),
    };
}

BellDecomposition::BellDecomposition(std::array<QubitPair, 2> pairs, std::array<BellBasis, 2> bases,
                                     std::vector<BellTerm> terms)
    : pairs_(pairs), bases_(bases), terms_(std::move(terms)) {
}

Complex BellDecomposition::coefficient(BellKind first, BellKind second) const {
    for (const auto &t : terms_) {
        if (t.first == first && t.second == second) {
            return t.coefficient;
        }
    }
    throw Error(ErrorKind::InvalidPairing, first.label() + second.label() + " is not in this decomposition's basis");
}

StateVector BellDecomposition::reconstruct() const {
    std::vector<Complex> out(16);
    for (const auto &t : terms_) {
        auto v = embed_pair_product(bell_state(t.first), pairs_[0], bell_state(t.second), pairs_[1]);
        for (std::size_t i = 0; i < out.size(); i++) {
            out[i] += t.coefficient * v.amplitudes()[i];
        }
    }
    return StateVector::unnormalized(std::move(out));
}

BellDecomposition decompose_bell_basis(const StateVector &s, std::array<QubitPair, 2> pairs,
                                       std::array<BellBasis, 2> bases) {
    check_pairing(pairs);
    check_four_qubits(s);
    std::vector<BellTerm> terms;
    for (const auto &k1 : bell_kinds(bases[0])) {
        for (const auto &k2 : bell_kinds(bases[1])) {
            auto basis_vector = embed_pair_product(bell_state(k1), pairs[0], bell_state(k2), pairs[1]);
            terms.push_back({k1, k2, inner_product(basis_vector, s)});
        }
    }
    return BellDecomposition(pairs, bases, std::move(terms));
}

BellDecomposition two_singlet_cross_decomposition() {
    return decompose_bell_basis(two_singlet_state(), {QubitPair{1, 3}, QubitPair{2, 4}},
                                {BellBasis::PhiPsi, BellBasis::ChiOmega});
}

std::array<ReferenceTerm, 8> cross_decomposition_reference_terms() {
    using enum BellFamily;
    using enum Sign;
    return {{
        {{Phi, Plus}, {Chi, Minus}, Plus},
        {{Phi, Plus}, {Omega, Plus}, Plus},
        {{Phi, Minus}, {Chi, Plus}, Minus},
        {{Phi, Minus}, {Omega, Minus}, Plus},
        {{Psi, Plus}, {Chi, Plus}, Minus},
        {{Psi, Plus}, {Omega, Minus}, Minus},
        {{Psi, Minus}, {Chi, Minus}, Plus},
        {{Psi, Minus}, {Omega, Plus}, Minus},
    }};
}

std::string_view to_string(PropertyId id) {
    switch (id) {
        case PropertyId::Eq3:
            return "Eq3";
        case PropertyId::Eq4:
            return "Eq4";
        case PropertyId::Eq5:
            return "Eq5";
        case PropertyId::Eq6:
            return "Eq6";
        case PropertyId::Eq7:
            return "Eq7";
        case PropertyId::Eq8:
            return "Eq8";
        case PropertyId::Eq9:
            return "Eq9";
        case PropertyId::Eq10:
            return "Eq10";
        case PropertyId::Eq11:
            return "Eq11";
        case PropertyId::EigenRelationsPhiPsi:
            return "EigenRelationsPhiPsi";
        case PropertyId::EigenRelationsChiOmega:
            return "EigenRelationsChiOmega";
        case PropertyId::TableI:
            return "TableI";
        case PropertyId::Swap:
            return "Swap";
    }
    return "unknown";
}

PropertyReport PropertyReport::make(PropertyId id, std::string description, std::vector<std::string> labels,
                                    std::vector<double> computed, std::vector<double> expected, double tolerance) {
    PropertyReport r{id, std::move(description), std::move(labels), std::move(computed), std::move(expected),
                     tolerance, false};
    r.pass = r.computed.size() == r.expected.size() && r.max_deviation() < tolerance;
    return r;
}

double PropertyReport::max_deviation() const {
    double worst = 0;
    for (std::size_t i = 0; i < std::min(computed.size(), expected.size()); i++) {
        worst = std::max(worst, std::abs(computed[i] - expected[i]));
    }
    return worst;
}

std::vector<SwapOutcome> swap_outcomes(const StateVector &s) {
    check_four_qubits(s);
    const QubitPair alice{1, 3};
    const std::array<int, 2> alice_qubits{1, 3};
    auto ops = bell_operators(BellBasis::PhiPsi, alice);
    const StateVector chi_plus = bell_state(BellKind{BellFamily::Chi, Sign::Plus});

    std::vector<SwapOutcome> out;
    for (const auto &kind : bell_kinds(BellBasis::PhiPsi)) {
        auto signs = kind.eigenvalues();
        StateVector projected = apply_joint_projector(ops, signs, s);
        double p = projected.norm_squared();
        if (p < kZeroTolerance) {
            out.push_back({kind, 0.0, StateVector::unnormalized(std::vector<Complex>(4)), 0.0, 0.0});
            continue;
        }
        // A rank-one projector on (1,3) leaves |kind>_13 (x) |bob>_24.
        StateVector bob = partial_inner_product(bell_state(kind), alice_qubits, projected.normalized()).normalized();
        out.push_back({kind, p, bob, std::norm(inner_product(bell_state(kind), bob)),
                       std::norm(inner_product(chi_plus, bob))});
    }
    return out;
}

PropertyReport swap_collapse_report(const StateVector &s) {
    auto outcomes = swap_outcomes(s);
    std::vector<std::string> labels;
    std::vector<double> computed;
    std::vector<double> expected;
    for (const auto &o : outcomes) {
        labels.push_back("P(" + o.outcome.label() + "_13)");
        computed.push_back(o.probability);
        expected.push_back(0.25);
    }
    for (const auto &o : outcomes) {
        labels.push_back("F(" + o.outcome.label() + "_24 | " + o.outcome.label() + "_13)");
        computed.push_back(o.fidelity_same_kind);
        expected.push_back(1.0);
    }
    labels.push_back("F(chi+_24 | phi+_13)");
    computed.push_back(outcomes[0].fidelity_chi_plus);
    expected.push_back(0.0);
    return PropertyReport::make(PropertyId::Swap, "Bell outcome on (1,3) collapses (2,4) to the same Bell state",
                                std::move(labels), std::move(computed), std::move(expected), kProbabilityTolerance);
}

namespace {

PropertyReport anticorrelation_report(PropertyId id, SingleQubitObservable o1, SingleQubitObservable o2,
                                      const StateVector &psi) {
    std::string label = "P(" + o1.label() + "=" + o2.label() + ")";
    return PropertyReport::make(id, label + " = 0", {label}, {prob_equal(o1, o2, psi)}, {0.0}, kZeroTolerance);
}

PropertyReport conditional_report(PropertyId id, SingleQubitObservable o1, SingleQubitObservable o2,
                                  const ObservableProduct &condition, Sign condition_sign, Sign relation,
                                  const StateVector &psi) {
    std::string rel = relation == Sign::Plus ? "=" : "=-";
    std::string cond = condition.label() + "=" + to_string(condition_sign);
    std::string label = "P(" + o1.label() + rel + o2.label() + " | " + cond + ")";
    std::vector<std::string> labels{label, "P(" + cond + ")"};
    std::vector<double> computed{conditional_prob_equal({o1, o2}, condition, condition_sign, relation, psi),
                                 event_probability(condition, condition_sign, psi)};
    std::vector<double> expected{1.0, 0.5};
    if (id == PropertyId::Eq7) {
        auto terms = anticorrelation_expansion_terms(psi);
        for (std::size_t k = 0; k < terms.size(); k++) {
            labels.push_back("P(" + cond + ", B2=-B4) term " + std::to_string(k + 1));
            computed.push_back(terms[k]);
            expected.push_back(0.0);
        }
    }
    return PropertyReport::make(id, label + " = 1", std::move(labels), std::move(computed), std::move(expected),
                                kProbabilityTolerance);
}

PropertyReport eigenrelation_report(BellBasis basis) {
    const QubitPair pair{1, 2};
    auto ops = bell_operators(basis, pair);
    std::array<std::string, 2> op_names = basis == BellBasis::PhiPsi ? std::array<std::string, 2>{"ZZ", "XX"}
                                                                     : std::array<std::string, 2>{"ZX", "XZ"};
    std::vector<std::string> labels;
    std::vector<double> computed;
    std::vector<double> expected;
    for (const auto &kind : bell_kinds(basis)) {
        StateVector v = bell_state(kind, pair);
        auto eigs = kind.eigenvalues();
        for (std::size_t j = 0; j < 2; j++) {
            StateVector image = apply_observable(ops[j], v);
            double lambda = value(eigs[j]);
            double residual = 0;
            for (std::size_t i = 0; i < v.dimension(); i++) {
                residual = std::max(residual, std::abs(image.amplitudes()[i] - lambda * v.amplitudes()[i]));
            }
            labels.push_back("<" + kind.label() + "|" + op_names[j] + "|" + kind.label() + ">");
            computed.push_back(inner_product(v, image).real());
            expected.push_back(lambda);
            labels.push_back("max|" + op_names[j] + " " + kind.label() + " - (" + to_string(eigs[j]) + ") " +
                             kind.label() + "|");
            computed.push_back(residual);
            expected.push_back(0.0);
        }
    }
    PropertyId id = basis == BellBasis::PhiPsi ? PropertyId::EigenRelationsPhiPsi : PropertyId::EigenRelationsChiOmega;
    std::string desc = std::string(to_string(basis)) + " Bell states are eigenvectors of " + op_names[0] + " and " +
                       op_names[1];
    return PropertyReport::make(id, desc, std::move(labels), std::move(computed), std::move(expected), kZeroTolerance);
}

}  // namespace

std::vector<PropertyReport> verify_all_properties() {
    const StateVector psi = two_singlet_state();
    auto obs = table1_observables();
    std::vector<PropertyReport> reports;

    reports.push_back(anticorrelation_report(PropertyId::Eq3, sigma_z(1), sigma_z(2), psi));
    reports.push_back(anticorrelation_report(PropertyId::Eq4, sigma_x(1), sigma_x(2), psi));
    reports.push_back(anticorrelation_report(PropertyId::Eq5, sigma_z(3), sigma_z(4), psi));
    reports.push_back(anticorrelation_report(PropertyId::Eq6, sigma_x(3), sigma_x(4), psi));

    reports.push_back(conditional_report(PropertyId::Eq7, sigma_z(2), sigma_z(4), obs[0], Sign::Plus, Sign::Plus, psi));
    reports.push_back(conditional_report(PropertyId::Eq8, sigma_x(2), sigma_x(4), obs[1], Sign::Plus, Sign::Plus, psi));
    reports.push_back(conditional_report(PropertyId::Eq9, sigma_z(1), sigma_x(3), obs[2], Sign::Plus, Sign::Plus, psi));
    reports.push_back(
        conditional_report(PropertyId::Eq10, sigma_x(1), sigma_z(3), obs[3], Sign::Minus, Sign::Minus, psi));

    {
        StateVector reordered = permute_qubits(psi, QubitPermutation::from_order("1324"));
        StateVector target = tensor(bell_state(BellKind{BellFamily::Phi, Sign::Plus}),
                                    bell_state(BellKind{BellFamily::Chi, Sign::Minus}));
        double overlap = std::norm(inner_product(target, reordered));
        reports.push_back(PropertyReport::make(
            PropertyId::Eq11, "P(A1A3=+1, a1a3=+1, B2b4=+1, b2B4=-1) = 1/8",
            {"P(A1A3=+1, a1a3=+1, B2b4=+1, b2B4=-1)", "|<phi+ chi-|psi_1324>|^2"}, {joint_prob_all_four(psi), overlap},
            {0.125, 0.125}, kProbabilityTolerance));
    }

    reports.push_back(eigenrelation_report(BellBasis::PhiPsi));
    reports.push_back(eigenrelation_report(BellBasis::ChiOmega));

    {
        auto dist = table1(psi);
        std::vector<std::string> labels;
        std::vector<double> computed;
        std::vector<double> expected;
        for (std::size_t i = 0; i < dist.size(); i++) {
            auto signs = dist.outcome(i);
            std::string label = "(";
            for (std::size_t k = 0; k < signs.size(); k++) {
                label += (k ? "," : "") + to_string(signs[k]);
            }
            labels.push_back(label + ")");
            computed.push_back(dist.probabilities()[i]);
            expected.push_back(table1_expected(signs));
        }
        reports.push_back(PropertyReport::make(PropertyId::TableI, "joint distribution of A1A3, a1a3, B2b4, b2B4",
                                               std::move(labels), std::move(computed), std::move(expected),
                                               kProbabilityTolerance));
    }

    reports.push_back(swap_collapse_report(psi));
    return reports;
}

}  // namespace twobell
