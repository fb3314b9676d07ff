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

#ifndef TWOBELL_LHV_H
#define TWOBELL_LHV_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobell/observables.h"

namespace twobell::lhv {

/// The eight elements of reality, in canonical label order.
enum class Element : std::uint8_t { A1, a1, A3, a3, B2, b2, B4, b4 };

inline constexpr std::size_t kNumElements = 8;
inline constexpr std::size_t kNumAssignments = 256;

inline constexpr std::array<Element, kNumElements> kElements{Element::A1, Element::a1, Element::A3, Element::a3,
                                                             Element::B2, Element::b2, Element::B4, Element::b4};

std::string_view label(Element e);
/// Throws InvalidConstraint for anything other than the eight labels.
Element parse_element(std::string_view text);
SingleQubitObservable observable_of(Element e);

/// Deterministic +-1 value for every element of reality.
///
/// Assignments are numbered 0..255 with A1 as the most significant bit and a
/// set bit meaning -1, so index 0 assigns +1 everywhere. Enumeration walks
/// this index upward, which is lexicographic in label order with +1 first.
class LHVAssignment {
   public:
    static LHVAssignment from_index(std::uint8_t index);

    Sign value(Element e) const noexcept;
    std::uint8_t index() const noexcept {
        return index_;
    }

    bool operator==(const LHVAssignment &) const = default;

   private:
    explicit LHVAssignment(std::uint8_t index) : index_(index) {
    }
    std::uint8_t index_;
};

/// Requires the product of the listed values to equal `required_sign`.
class ParityConstraint {
   public:
    /// Throws InvalidConstraint on an empty or repeated label set.
    ParityConstraint(std::vector<Element> labels, Sign required_sign);
    /// Same, from text labels such as {"B2", "B4"}.
    static ParityConstraint parse(std::span<const std::string_view> labels, Sign required_sign);

    std::span<const Element> labels() const noexcept {
        return labels_;
    }
    Sign required_sign() const noexcept {
        return required_sign_;
    }
    bool satisfied_by(const LHVAssignment &a) const noexcept;
    /// "v(B2)v(B4) = +1".
    std::string to_string() const;

    bool operator==(const ParityConstraint &) const = default;

   private:
    std::vector<Element> labels_;
    Sign required_sign_;
};

std::vector<LHVAssignment> enumerate(std::span<const ParityConstraint> constraints);

struct Certificate {
    std::vector<ParityConstraint> constraints;
    /// Exhaustive count over all 256 assignments.
    std::size_t satisfying_count;
    /// True when every label occurs an even number of times, so the product
    /// of all constraints cancels to +1 on the left-hand side.
    bool parity_applicable;
    /// Product of the required signs; set only when applicable. -1 is a proof
    /// of infeasibility.
    std::optional<Sign> parity_product;
    /// Rank of the constraint system over GF(2).
    int gf2_rank;
    /// Whether Gaussian elimination over GF(2) finds the system consistent.
    bool gf2_consistent;
    bool feasible;
};

/// Builds the certificate and cross-checks its three routes (brute force,
/// parity product, GF(2) elimination). Throws std::logic_error if they
/// disagree.
Certificate parity_certificate(std::span<const ParityConstraint> constraints);

/// Number of solutions predicted by GF(2) elimination: 0 or 2^(8 - rank).
std::size_t gf2_solution_count(std::span<const ParityConstraint> constraints);

enum class Classification { Explainable, Contradiction };

std::string_view to_string(Classification c);

/// Signs of (A1A3, a1a3, B2b4, b2B4).
using Outcome = std::array<Sign, 4>;

/// Contradiction iff the four signs multiply to -1.
Classification classify_outcome(const Outcome &outcome);

/// Values forced by the certain conditional predictions (A1A3 = s forces
/// v(B2)v(B4) = s, a1a3 = s forces v(b2)v(b4) = s, B2b4 = s forces
/// v(A1)v(a3) = s, b2B4 = s forces v(a1)v(A3) = s), followed by the four
/// anti-correlations v(A1)v(B2) = v(a1)v(b2) = v(A3)v(B4) = v(a3)v(b4) = -1.
std::vector<ParityConstraint> build_constraints(const Outcome &outcome);

/// The system for the outcome (+1, +1, +1, -1).
std::vector<ParityConstraint> reference_system();

/// Every outcome tuple, in OutcomeDistribution index order.
std::array<Outcome, 16> all_outcomes();

}  // namespace twobell::lhv

#endif
