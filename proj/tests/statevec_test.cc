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

#include "twobell/statevec.h"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"
#include "twobell/error.h"
#include "twobell/protocol.h"

using namespace twobell;
using twobell::testing::random_state;
using twobell::testing::test_rng;

namespace {

void expect_kind(ErrorKind kind, auto &&fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(statevec, basis_state) {
    auto s = basis_state("0");
    ASSERT_EQ(s.dimension(), 2u);
    EXPECT_EQ(s.amplitude(0), Complex(1));
    EXPECT_EQ(s.amplitude(1), Complex(0));

    auto t = basis_state("01");
    ASSERT_EQ(t.dimension(), 4u);
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_EQ(t.amplitude(i), Complex(i == 1 ? 1.0 : 0.0));
    }

    auto u = basis_state("1010");
    ASSERT_EQ(u.num_qubits(), 4);
    for (std::size_t i = 0; i < 16; i++) {
        EXPECT_EQ(u.amplitude(i), Complex(i == 10 ? 1.0 : 0.0));
    }
    EXPECT_EQ(u.amplitude("1010"), Complex(1));
}

TEST(statevec, basis_state_rejects_bad_sizes) {
    expect_kind(ErrorKind::InvalidSize, [] { basis_state(""); });
    expect_kind(ErrorKind::InvalidSize, [] { basis_state("01010"); });
    expect_kind(ErrorKind::InvalidSize, [] { basis_state("012"); });
}

TEST(statevec, from_amplitudes_normalizes) {
    auto s = StateVector::from_amplitudes({3.0, Complex(0, 4.0)});
    EXPECT_NEAR(s.norm_squared(), 1.0, kNormTolerance);
    EXPECT_NEAR(s.amplitude(0).real(), 0.6, 1e-15);
    expect_kind(ErrorKind::InvalidSize, [] { StateVector::from_amplitudes({0.0, 0.0}); });
    expect_kind(ErrorKind::InvalidSize, [] { StateVector::from_amplitudes({1.0, 0.0, 0.0}); });
    expect_kind(ErrorKind::InvalidSize, [] { StateVector::from_amplitudes(std::vector<Complex>(32, 1.0)); });
}

TEST(statevec, tensor_of_singlets) {
    auto psi = tensor(singlet_state(), singlet_state());
    EXPECT_NEAR(psi.amplitude("0101").real(), 0.5, 1e-15);
    EXPECT_EQ(psi.amplitude("0000"), Complex(0));
    EXPECT_TRUE(approx_equal(tensor(basis_state("0"), basis_state("1")), basis_state("01")));
}

TEST(statevec, tensor_rejects_oversize) {
    expect_kind(ErrorKind::InvalidSize, [] { tensor(basis_state("000"), basis_state("00")); });
}

TEST(statevec, tensor_is_associative_and_preserves_norm) {
    auto &rng = test_rng();
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_state(1, rng);
        auto b = random_state(2, rng);
        auto c = random_state(1, rng);
        auto left = tensor(tensor(a, b), c);
        auto right = tensor(a, tensor(b, c));
        EXPECT_TRUE(approx_equal(left, right, 1e-12));
        EXPECT_NEAR(left.norm_squared(), 1.0, kNormTolerance);
    }
}

TEST(statevec, permute_examples) {
    auto swap23 = QubitPermutation::from_order("1324");
    EXPECT_TRUE(approx_equal(permute_qubits(basis_state("0100"), swap23), basis_state("0010")));

    auto &rng = test_rng();
    auto s = random_state(4, rng);
    EXPECT_TRUE(approx_equal(permute_qubits(s, QubitPermutation::identity(4)), s, 0.0));
    EXPECT_TRUE(approx_equal(permute_qubits(permute_qubits(s, swap23), swap23), s, 0.0));
}

TEST(statevec, permute_order_semantics) {
    // New position k holds old qubit order[k]: "2341" moves qubit 2 to position 1.
    auto p = QubitPermutation::from_order("2341");
    EXPECT_EQ(p.target_of(2), 1);
    EXPECT_EQ(p.target_of(1), 4);
    EXPECT_TRUE(approx_equal(permute_qubits(basis_state("0100"), p), basis_state("1000")));
    EXPECT_TRUE(approx_equal(permute_qubits(basis_state("1000"), p), basis_state("0001")));
}

TEST(statevec, permute_rejects_bad_mappings) {
    expect_kind(ErrorKind::InvalidPermutation, [] { QubitPermutation({1, 1, 2}); });
    expect_kind(ErrorKind::InvalidPermutation, [] { QubitPermutation({1, 5, 2, 3}); });
    expect_kind(ErrorKind::InvalidPermutation, [] { QubitPermutation::from_order("1224"); });
    expect_kind(ErrorKind::InvalidPermutation,
                [] { permute_qubits(basis_state("00"), QubitPermutation::from_order("132")); });
}

TEST(statevec, permute_then_inverse_is_identity) {
    auto &rng = test_rng();
    std::vector<int> targets{1, 2, 3, 4};
    do {
        QubitPermutation p(targets);
        auto s = random_state(4, rng);
        auto moved = permute_qubits(s, p);
        EXPECT_TRUE(approx_equal(permute_qubits(moved, p.inverse()), s, 0.0));
        EXPECT_NEAR(moved.norm_squared(), s.norm_squared(), 1e-15);

        std::vector<double> before, after;
        for (auto a : s.amplitudes()) {
            before.push_back(a.real());
        }
        for (auto a : moved.amplitudes()) {
            after.push_back(a.real());
        }
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        EXPECT_EQ(before, after);
    } while (std::next_permutation(targets.begin(), targets.end()));
}

TEST(statevec, inner_product_examples) {
    EXPECT_NEAR(std::abs(inner_product(singlet_state(), singlet_state()) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(inner_product(basis_state("01"), basis_state("10")), Complex(0));

    auto psi1324 = permute_qubits(two_singlet_state(), QubitPermutation::from_order("1324"));
    auto phi_plus_chi_minus =
        tensor(bell_state({BellFamily::Phi, Sign::Plus}), bell_state({BellFamily::Chi, Sign::Minus}));
    auto c = inner_product(phi_plus_chi_minus, psi1324);
    EXPECT_NEAR(c.real(), 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(c.imag(), 0.0, 1e-15);
}

TEST(statevec, inner_product_rejects_size_mismatch) {
    expect_kind(ErrorKind::InvalidSize, [] { inner_product(basis_state("0"), basis_state("00")); });
}

TEST(statevec, inner_product_is_conjugate_symmetric) {
    auto &rng = test_rng();
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_state(3, rng);
        auto b = random_state(3, rng);
        EXPECT_LT(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 1e-15);
        auto self = inner_product(a, a);
        EXPECT_EQ(self.imag(), 0.0);
        EXPECT_NEAR(self.real(), a.norm_squared(), 1e-15);
    }
}

TEST(statevec, partial_inner_product_of_product_state) {
    auto &rng = test_rng();
    auto a = random_state(2, rng);
    auto b = random_state(2, rng);
    // a on qubits (1,3), b on (2,4).
    auto s = permute_qubits(tensor(a, b), QubitPermutation::from_order("1324"));
    std::array<int, 2> alice{1, 3};
    auto rest = partial_inner_product(a, alice, s);
    EXPECT_TRUE(approx_equal(rest, b, 1e-14));

    std::array<int, 2> bad{1, 1};
    expect_kind(ErrorKind::InvalidSize, [&] { partial_inner_product(a, bad, s); });
}

TEST(statevec, normalized_constructors_have_unit_norm) {
    auto &rng = test_rng();
    for (int n = 1; n <= 4; n++) {
        EXPECT_NEAR(random_state(n, rng).norm_squared(), 1.0, kNormTolerance);
    }
    for (const auto &k : all_bell_kinds()) {
        EXPECT_NEAR(bell_state(k).norm_squared(), 1.0, kNormTolerance);
    }
    EXPECT_NEAR(two_singlet_state().norm_squared(), 1.0, kNormTolerance);
    expect_kind(ErrorKind::InvalidSize, [] { StateVector::unnormalized({0.0, 0.0}).normalized(); });
}
