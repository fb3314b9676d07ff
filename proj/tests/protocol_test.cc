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

#include <array>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "oracle/dense_oracle.h"
#include "test_util.h"
#include "twobell/error.h"

using namespace twobell;
using twobell::testing::random_state;
using twobell::testing::test_rng;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInv2Sqrt2 = 0.35355339059327376220;

BellKind phi(Sign s) {
    return {BellFamily::Phi, s};
}
BellKind psi(Sign s) {
    return {BellFamily::Psi, s};
}
BellKind chi(Sign s) {
    return {BellFamily::Chi, s};
}
BellKind omega(Sign s) {
    return {BellFamily::Omega, s};
}

void expect_kind(ErrorKind kind, auto &&fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(protocol, two_singlet_amplitudes) {
    auto s = two_singlet_state();
    ASSERT_EQ(s.num_qubits(), 4);
    EXPECT_NEAR(s.amplitude("0101").real(), 0.5, 1e-15);
    EXPECT_NEAR(s.amplitude("0110").real(), -0.5, 1e-15);
    EXPECT_EQ(s.amplitude("0011"), Complex(0));
    EXPECT_NEAR(s.norm_squared(), 1.0, kNormTolerance);
}

TEST(protocol, bell_state_examples) {
    auto singlet = bell_state(psi(Sign::Minus));
    EXPECT_NEAR(singlet.amplitude(0).real(), 0.0, 1e-15);
    EXPECT_NEAR(singlet.amplitude(1).real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(singlet.amplitude(2).real(), -kInvSqrt2, 1e-15);
    EXPECT_NEAR(singlet.amplitude(3).real(), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(bell_state(phi(Sign::Plus)), singlet)), 0.0, 1e-15);

    auto chi_minus = bell_state(chi(Sign::Minus));
    EXPECT_NEAR(chi_minus.amplitude("00").real(), 0.5, 1e-15);
    EXPECT_NEAR(chi_minus.amplitude("01").real(), 0.5, 1e-15);
    EXPECT_NEAR(chi_minus.amplitude("10").real(), -0.5, 1e-15);
    EXPECT_NEAR(chi_minus.amplitude("11").real(), 0.5, 1e-15);

    expect_kind(ErrorKind::InvalidPair, [] { bell_state(phi(Sign::Plus), {2, 2}); });
    expect_kind(ErrorKind::InvalidPair, [] { bell_state(phi(Sign::Plus), {0, 1}); });
}

TEST(protocol, bell_kinds_cover_both_bases) {
    auto all = all_bell_kinds();
    std::set<std::string> labels;
    for (const auto &k : all) {
        labels.insert(k.label());
    }
    EXPECT_EQ(labels.size(), 8u);
    for (auto basis : {BellBasis::PhiPsi, BellBasis::ChiOmega}) {
        for (const auto &k : bell_kinds(basis)) {
            EXPECT_EQ(k.basis(), basis);
            EXPECT_EQ(bell_kind_for(basis, k.eigenvalues()), k);
        }
    }
    EXPECT_EQ(chi(Sign::Minus).label(), "chi-");
}

TEST(protocol, bell_states_are_orthonormal_within_each_basis) {
    for (auto basis : {BellBasis::PhiPsi, BellBasis::ChiOmega}) {
        auto kinds = bell_kinds(basis);
        for (const auto &a : kinds) {
            for (const auto &b : kinds) {
                double expected = a == b ? 1.0 : 0.0;
                EXPECT_NEAR(std::abs(inner_product(bell_state(a), bell_state(b))), expected, 1e-14);
            }
        }
    }
}

TEST(protocol, bell_states_are_joint_eigenvectors) {
    for (const auto &kind : all_bell_kinds()) {
        auto ops = bell_operators(kind.basis(), {1, 2});
        auto v = bell_state(kind);
        auto eigs = kind.eigenvalues();
        for (std::size_t j = 0; j < 2; j++) {
            oracle::Vector image = oracle::dense_operator(ops[j], 2) * oracle::to_dense(v);
            oracle::Vector scaled = static_cast<double>(value(eigs[j])) * oracle::to_dense(v);
            EXPECT_LT((image - scaled).cwiseAbs().maxCoeff(), 1e-12) << kind.label() << " op " << j;
        }
    }
}

TEST(protocol, prob_equal_examples) {
    auto s = two_singlet_state();
    EXPECT_NEAR(prob_equal(sigma_z(1), sigma_z(2), s), 0.0, 1e-12);
    EXPECT_NEAR(prob_equal(sigma_x(3), sigma_x(4), s), 0.0, 1e-12);

    ObservableProduct a(sigma_z(1));
    ObservableProduct b(sigma_z(4));
    std::array<ObservableProduct, 2> obs{a, b};
    std::array<Sign, 2> pp{Sign::Plus, Sign::Plus};
    std::array<Sign, 2> mm{Sign::Minus, Sign::Minus};
    double reference = oracle::dense_joint_probability(obs, pp, s) + oracle::dense_joint_probability(obs, mm, s);
    EXPECT_NEAR(reference, 0.5, 1e-12);
    EXPECT_NEAR(prob_equal(sigma_z(1), sigma_z(4), s), reference, 1e-12);

    expect_kind(ErrorKind::InvalidObservable, [&] { prob_equal(sigma_z(1), sigma_x(1), s); });
}

TEST(protocol, conditional_examples) {
    auto s = two_singlet_state();
    auto obs = table1_observables();
    EXPECT_NEAR(conditional_prob_equal({sigma_z(2), sigma_z(4)}, obs[0], Sign::Plus, Sign::Plus, s), 1.0, 1e-10);
    EXPECT_NEAR(conditional_prob_equal({sigma_x(1), sigma_z(3)}, obs[3], Sign::Minus, Sign::Minus, s), 1.0, 1e-10);

    std::array<ObservableProduct, 1> pair{ObservableProduct{sigma_z(2), sigma_z(4)}};
    std::array<Sign, 1> plus{Sign::Plus};
    double reference = oracle::dense_conditional(pair, plus, obs[0], Sign::Minus, s);
    EXPECT_NEAR(reference, 0.0, 1e-12);
    EXPECT_NEAR(conditional_prob_equal({sigma_z(2), sigma_z(4)}, obs[0], Sign::Minus, Sign::Plus, s), reference,
                1e-12);
}

TEST(protocol, conditional_rejects_zero_probability_condition) {
    expect_kind(ErrorKind::UndefinedConditional, [] {
        conditional_prob_equal({sigma_z(2), sigma_z(4)}, sigma_z(1), Sign::Minus, Sign::Plus, basis_state("0000"));
    });
}

TEST(protocol, conditionals_match_dense_oracle_and_are_complementary) {
    auto &rng = test_rng();
    std::vector<StateVector> states{two_singlet_state(), random_state(4, rng), random_state(4, rng)};
    std::vector<SingleQubitObservable> singles;
    for (int q = 1; q <= 4; q++) {
        singles.push_back(sigma_z(q));
        singles.push_back(sigma_x(q));
    }
    for (const auto &s : states) {
        for (const auto &cond : table1_observables()) {
            for (auto cs : {Sign::Plus, Sign::Minus}) {
                for (const auto &o1 : singles) {
                    for (const auto &o2 : singles) {
                        if (o1.qubit >= o2.qubit) {
                            continue;
                        }
                        // Lüders conditioning equals the dense ratio when the pair product
                        // commutes with the condition.
                        ObservableProduct pair{o1, o2};
                        if (!oracle::dense_commute(pair, cond)) {
                            continue;
                        }
                        double eq = conditional_prob_equal({o1, o2}, cond, cs, Sign::Plus, s);
                        double ne = conditional_prob_equal({o1, o2}, cond, cs, Sign::Minus, s);
                        EXPECT_GE(eq, -1e-12);
                        EXPECT_LE(eq, 1.0 + 1e-12);
                        EXPECT_NEAR(eq + ne, 1.0, 1e-10);
                        std::array<ObservableProduct, 1> ev{pair};
                        std::array<Sign, 1> plus{Sign::Plus};
                        EXPECT_NEAR(eq, oracle::dense_conditional(ev, plus, cond, cs, s), 1e-12)
                            << pair.label() << " | " << cond.label();
                    }
                }
            }
        }
    }
}

TEST(protocol, condition_probabilities_and_expansion_terms) {
    auto s = two_singlet_state();
    for (const auto &o : table1_observables()) {
        EXPECT_NEAR(event_probability(o, Sign::Plus, s), 0.5, 1e-10) << o.label();
        EXPECT_NEAR(event_probability(o, Sign::Minus, s), 0.5, 1e-10) << o.label();
    }
    for (double t : anticorrelation_expansion_terms(s)) {
        EXPECT_NEAR(t, 0.0, 1e-12);
    }
}

TEST(protocol, joint_prob_all_four_examples) {
    EXPECT_NEAR(joint_prob_all_four(two_singlet_state()), 0.125, 1e-10);

    // Dense oracle value on |0000>: every projector halves the weight once
    // except the redundant fourth one.
    auto zero = basis_state("0000");
    auto obs = table1_observables();
    std::array<Sign, 4> signs{Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus};
    double reference = oracle::dense_joint_probability(obs, signs, zero);
    EXPECT_NEAR(reference, 0.125, 1e-12);
    EXPECT_NEAR(joint_prob_all_four(zero), reference, 1e-12);

    auto eigenstate = embed_pair_product(bell_state(phi(Sign::Plus)), {1, 3}, bell_state(chi(Sign::Minus)), {2, 4});
    EXPECT_NEAR(joint_prob_all_four(eigenstate), 1.0, 1e-12);

    expect_kind(ErrorKind::InvalidSize, [] { joint_prob_all_four(basis_state("00")); });
}

TEST(protocol, table1_examples) {
    auto t = table1(two_singlet_state());
    using enum Sign;
    EXPECT_NEAR(t.probability({Plus, Minus, Plus, Plus}), 0.125, 1e-10);
    EXPECT_NEAR(t.probability({Minus, Minus, Plus, Plus}), 0.0, 1e-12);
    EXPECT_NEAR(t.total(), 1.0, 1e-12);
    ASSERT_EQ(t.observables().size(), 4u);
    EXPECT_EQ(t.observables()[0].label(), "A1A3");
    EXPECT_EQ(t.observables()[1].label(), "a1a3");
    EXPECT_EQ(t.observables()[2].label(), "B2b4");
    EXPECT_EQ(t.observables()[3].label(), "b2B4");
}

TEST(protocol, table1_cells_follow_sign_product) {
    auto s = two_singlet_state();
    auto t = table1(s);
    auto reference = oracle::spectral_distribution(table1_observables(), s);
    for (std::size_t i = 0; i < t.size(); i++) {
        auto outcome = t.outcome(i);
        double p = t.probabilities()[i];
        if (product(outcome) == Sign::Minus) {
            EXPECT_NEAR(p, 0.125, 1e-10);
        } else {
            EXPECT_NEAR(p, 0.0, 1e-12);
        }
        EXPECT_NEAR(p, table1_expected(outcome), 1e-10);
        EXPECT_NEAR(p, reference[i], 1e-12);
    }
}

TEST(protocol, table1_is_normalized_on_random_states) {
    auto &rng = test_rng();
    for (int trial = 0; trial < 20; trial++) {
        auto s = random_state(4, rng);
        auto t = table1(s);
        EXPECT_NEAR(t.total(), 1.0, 1e-10);
        auto reference = oracle::spectral_distribution(table1_observables(), s);
        for (std::size_t i = 0; i < t.size(); i++) {
            EXPECT_NEAR(t.probabilities()[i], reference[i], 1e-12);
        }
    }
}

TEST(protocol, decomposition_examples) {
    auto d = two_singlet_cross_decomposition();
    ASSERT_EQ(d.terms().size(), 16u);
    EXPECT_NEAR(d.coefficient(phi(Sign::Plus), chi(Sign::Minus)).real(), kInv2Sqrt2, 1e-12);
    EXPECT_NEAR(d.coefficient(phi(Sign::Minus), chi(Sign::Plus)).real(), -kInv2Sqrt2, 1e-12);
    EXPECT_NEAR(std::abs(d.coefficient(phi(Sign::Plus), chi(Sign::Plus))), 0.0, 1e-12);
    EXPECT_NEAR(d.coefficient(psi(Sign::Minus), omega(Sign::Plus)).real(), -kInv2Sqrt2, 1e-12);
    expect_kind(ErrorKind::InvalidPairing, [&] { d.coefficient(chi(Sign::Plus), chi(Sign::Plus)); });
}

TEST(protocol, decomposition_matches_reference_terms) {
    auto d = two_singlet_cross_decomposition();
    int nonzero = 0;
    double total = 0;
    for (const auto &t : d.terms()) {
        total += std::norm(t.coefficient);
        if (std::abs(t.coefficient) > 1e-12) {
            nonzero++;
        }
    }
    EXPECT_EQ(nonzero, 8);
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (const auto &ref : cross_decomposition_reference_terms()) {
        auto c = d.coefficient(ref.first, ref.second);
        EXPECT_NEAR(c.real(), value(ref.sign) * kInv2Sqrt2, 1e-12) << ref.first.label() << ref.second.label();
        EXPECT_NEAR(c.imag(), 0.0, 1e-12);
    }
}

TEST(protocol, decomposition_round_trips) {
    auto &rng = test_rng();
    std::vector<std::array<QubitPair, 2>> pairings{{QubitPair{1, 3}, QubitPair{2, 4}},
                                                   {QubitPair{1, 2}, QubitPair{3, 4}},
                                                   {QubitPair{4, 1}, QubitPair{3, 2}}};
    for (const auto &pairs : pairings) {
        for (auto b1 : {BellBasis::PhiPsi, BellBasis::ChiOmega}) {
            for (auto b2 : {BellBasis::PhiPsi, BellBasis::ChiOmega}) {
                auto s = random_state(4, rng);
                auto d = decompose_bell_basis(s, pairs, {b1, b2});
                EXPECT_TRUE(approx_equal(d.reconstruct(), s, 1e-12));
                double total = 0;
                for (const auto &t : d.terms()) {
                    total += std::norm(t.coefficient);
                }
                EXPECT_NEAR(total, 1.0, 1e-12);
            }
        }
    }
    EXPECT_TRUE(approx_equal(two_singlet_cross_decomposition().reconstruct(), two_singlet_state(), 1e-12));
}

TEST(protocol, decomposition_rejects_overlapping_pairs) {
    expect_kind(ErrorKind::InvalidPairing, [] {
        decompose_bell_basis(two_singlet_state(), {QubitPair{1, 2}, QubitPair{2, 3}},
                             {BellBasis::PhiPsi, BellBasis::PhiPsi});
    });
    expect_kind(ErrorKind::InvalidPairing, [] {
        decompose_bell_basis(two_singlet_state(), {QubitPair{1, 2}, QubitPair{3, 5}},
                             {BellBasis::PhiPsi, BellBasis::PhiPsi});
    });
}

TEST(protocol, swap_collapse) {
    auto s = two_singlet_state();
    auto outcomes = swap_outcomes(s);
    ASSERT_EQ(outcomes.size(), 4u);
    for (const auto &o : outcomes) {
        EXPECT_NEAR(o.probability, 0.25, 1e-10) << o.outcome.label();
        EXPECT_NEAR(o.fidelity_same_kind, 1.0, 1e-10) << o.outcome.label();
    }
    EXPECT_EQ(outcomes[0].outcome, phi(Sign::Plus));
    EXPECT_NEAR(outcomes[0].fidelity_chi_plus, 0.0, 1e-10);

    auto report = swap_collapse_report(s);
    EXPECT_EQ(report.id, PropertyId::Swap);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.computed.size(), 9u);
}

TEST(protocol, swap_fidelity_matches_dense_projection) {
    auto s = two_singlet_state();
    auto outcomes = swap_outcomes(s);
    for (const auto &o : outcomes) {
        // Dense route: probability of the Bell pair on 24 given the Bell pair on 13.
        auto ops13 = bell_operators(BellBasis::PhiPsi, {1, 3});
        auto ops24 = bell_operators(BellBasis::PhiPsi, {2, 4});
        auto e = o.outcome.eigenvalues();
        std::vector<ObservableProduct> all{ops13[0], ops13[1], ops24[0], ops24[1]};
        std::vector<Sign> signs{e[0], e[1], e[0], e[1]};
        std::vector<ObservableProduct> alice{ops13[0], ops13[1]};
        std::vector<Sign> alice_signs{e[0], e[1]};
        double joint = oracle::dense_joint_probability(all, signs, s);
        double marginal = oracle::dense_joint_probability(alice, alice_signs, s);
        EXPECT_NEAR(marginal, o.probability, 1e-12);
        EXPECT_NEAR(joint / marginal, o.fidelity_same_kind, 1e-12);
    }
}

TEST(protocol, property_report_pass_rule) {
    auto r = PropertyReport::make(PropertyId::Eq3, "d", {"x"}, {0.5}, {0.5 + 1e-11}, 1e-10);
    EXPECT_TRUE(r.pass);
    // Deviation equal to the tolerance fails: the comparison is strict.
    auto q = PropertyReport::make(PropertyId::Eq3, "d", {"x", "y"}, {0.0, 1.0}, {0.25, 1.0}, 0.25);
    EXPECT_FALSE(q.pass);
    EXPECT_EQ(q.max_deviation(), 0.25);
    auto mismatched = PropertyReport::make(PropertyId::Eq3, "d", {"x"}, {0.0}, {0.0, 0.0}, 1.0);
    EXPECT_FALSE(mismatched.pass);
}

TEST(protocol, verify_all_properties) {
    auto reports = verify_all_properties();
    ASSERT_EQ(reports.size(), 13u);
    std::set<PropertyId> ids;
    for (const auto &r : reports) {
        EXPECT_TRUE(r.pass) << to_string(r.id) << " deviation " << r.max_deviation();
        EXPECT_EQ(r.pass, r.max_deviation() < r.tolerance);
        EXPECT_EQ(r.labels.size(), r.computed.size());
        ids.insert(r.id);
    }
    EXPECT_EQ(ids.size(), 13u);
    EXPECT_EQ(reports[0].id, PropertyId::Eq3);
    EXPECT_NEAR(reports[0].computed[0], 0.0, 1e-12);
    EXPECT_EQ(reports[0].expected[0], 0.0);
    EXPECT_EQ(reports[8].id, PropertyId::Eq11);
    EXPECT_NEAR(reports[8].computed[0], 0.125, 1e-10);
    EXPECT_NEAR(reports[8].computed[0], reports[8].computed[1], 1e-12);
}
