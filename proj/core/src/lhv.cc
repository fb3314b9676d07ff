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

#include "twobell/lhv.h"

#include <algorithm>
#include <stdexcept>

#include "twobell/error.h"

namespace twobell::lhv {

namespace {

std::size_t position(Element e) {
    return static_cast<std::size_t>(e);
}

std::uint8_t mask_of(const ParityConstraint &c) {
    std::uint8_t mask = 0;
    for (Element e : c.labels()) {
        mask |= static_cast<std::uint8_t>(1U << (kNumElements - 1 - position(e)));
    }
    return mask;
}

struct Gf2Result {
    int rank;
    bool consistent;
};

// Each constraint is a row: the XOR of the "value is -1" bits of its labels
// must equal the "required sign is -1" bit.
Gf2Result eliminate(std::span<const ParityConstraint> constraints) {
    std::vector<std::pair<std::uint8_t, bool>> rows;
    rows.reserve(constraints.size());
    for (const auto &c : constraints) {
        rows.emplace_back(mask_of(c), c.required_sign() == Sign::Minus);
    }
    int rank = 0;
    for (int bit = static_cast<int>(kNumElements) - 1; bit >= 0; bit--) {
        std::uint8_t pivot_bit = static_cast<std::uint8_t>(1U << bit);
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto &r) { return r.first & pivot_bit; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != static_cast<std::size_t>(rank) && (rows[r].first & pivot_bit)) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        rank++;
    }
    bool consistent = std::none_of(rows.begin(), rows.end(), [](const auto &r) { return r.first == 0 && r.second; });
    return {rank, consistent};
}

}  // namespace

std::string_view label(Element e) {
    static constexpr std::array<std::string_view, kNumElements> names{"A1", "a1", "A3", "a3",
                                                                       "B2", "b2", "B4", "b4"};
    return names[position(e)];
}

Element parse_element(std::string_view text) {
    for (Element e : kElements) {
        if (label(e) == text) {
            return e;
        }
    }
    throw Error(ErrorKind::InvalidConstraint, "unknown element label '" + std::string(text) + "'");
}

SingleQubitObservable observable_of(Element e) {
    switch (e) {
        case Element::A1:
            return sigma_z(1);
        case Element::a1:
            return sigma_x(1);
        case Element::A3:
            return sigma_z(3);
        case Element::a3:
            return sigma_x(3);
        case Element::B2:
            return sigma_z(2);
        case Element::b2:
            return sigma_x(2);
        case Element::B4:
            return sigma_z(4);
        case Element::b4:
            return sigma_x(4);
    }
    throw Error(ErrorKind::InvalidConstraint, "unknown element");
}

LHVAssignment LHVAssignment::from_index(std::uint8_t index) {
    return LHVAssignment(index);
}

Sign LHVAssignment::value(Element e) const noexcept {
    return ((index_ >> (kNumElements - 1 - position(e))) & 1U) ? Sign::Minus : Sign::Plus;
}

ParityConstraint::ParityConstraint(std::vector<Element> labels, Sign required_sign)
    : labels_(std::move(labels)), required_sign_(required_sign) {
    if (labels_.empty()) {
        throw Error(ErrorKind::InvalidConstraint, "constraint needs at least one label");
    }
    std::vector<Element> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::InvalidConstraint, "constraint repeats a label");
    }
    if (position(sorted.back()) >= kNumElements) {
        throw Error(ErrorKind::InvalidConstraint, "constraint references an unknown element");
    }
}

ParityConstraint ParityConstraint::parse(std::span<const std::string_view> labels, Sign required_sign) {
    std::vector<Element> elements;
    for (auto text : labels) {
        elements.push_back(parse_element(text));
    }
    return ParityConstraint(std::move(elements), required_sign);
}

bool ParityConstraint::satisfied_by(const LHVAssignment &a) const noexcept {
    Sign p = Sign::Plus;
    for (Element e : labels_) {
        p = p * a.value(e);
    }
    return p == required_sign_;
}

std::string ParityConstraint::to_string() const {
    std::string out;
    for (Element e : labels_) {
        out += "v(" + std::string(label(e)) + ")";
    }
    return out + " = " + twobell::to_string(required_sign_);
}

std::vector<LHVAssignment> enumerate(std::span<const ParityConstraint> constraints) {
    std::vector<LHVAssignment> out;
    for (std::size_t i = 0; i < kNumAssignments; i++) {
        auto a = LHVAssignment::from_index(static_cast<std::uint8_t>(i));
        if (std::all_of(constraints.begin(), constraints.end(), [&](const auto &c) { return c.satisfied_by(a); })) {
            out.push_back(a);
        }
    }
    return out;
}

std::size_t gf2_solution_count(std::span<const ParityConstraint> constraints) {
    auto r = eliminate(constraints);
    return r.consistent ? std::size_t{1} << (kNumElements - static_cast<std::size_t>(r.rank)) : 0;
}

Certificate parity_certificate(std::span<const ParityConstraint> constraints) {
    Certificate cert{};
    cert.constraints.assign(constraints.begin(), constraints.end());
    cert.satisfying_count = enumerate(constraints).size();
    cert.feasible = cert.satisfying_count > 0;

    std::array<int, kNumElements> occurrences{};
    for (const auto &c : constraints) {
        for (Element e : c.labels()) {
            occurrences[position(e)]++;
        }
    }
    cert.parity_applicable =
        !constraints.empty() && std::all_of(occurrences.begin(), occurrences.end(), [](int n) { return n % 2 == 0; });
    if (cert.parity_applicable) {
        Sign p = Sign::Plus;
        for (const auto &c : constraints) {
            p = p * c.required_sign();
        }
        cert.parity_product = p;
    }

    auto gf2 = eliminate(constraints);
    cert.gf2_rank = gf2.rank;
    cert.gf2_consistent = gf2.consistent;

    std::size_t predicted = gf2.consistent ? std::size_t{1} << (kNumElements - static_cast<std::size_t>(gf2.rank)) : 0;
    if (predicted != cert.satisfying_count) {
        throw std::logic_error("GF(2) solution count disagrees with exhaustive enumeration");
    }
    if (cert.parity_product == Sign::Minus && cert.feasible) {
        throw std::logic_error("parity product -1 but enumeration found a satisfying assignment");
    }
    return cert;
}

std::string_view to_string(Classification c) {
    return c == Classification::Contradiction ? "contradiction" : "explainable";
}

Classification classify_outcome(const Outcome &outcome) {
    return product(outcome) == Sign::Minus ? Classification::Contradiction : Classification::Explainable;
}

std::vector<ParityConstraint> build_constraints(const Outcome &outcome) {
    using enum Element;
    return {
        ParityConstraint({B2, B4}, outcome[0]),
        ParityConstraint({b2, b4}, outcome[1]),
        ParityConstraint({A1, a3}, outcome[2]),
        ParityConstraint({a1, A3}, outcome[3]),
        ParityConstraint({A1, B2}, Sign::Minus),
        ParityConstraint({a1, b2}, Sign::Minus),
        ParityConstraint({A3, B4}, Sign::Minus),
        ParityConstraint({a3, b4}, Sign::Minus),
    };
}

std::vector<ParityConstraint> reference_system() {
    return build_constraints({Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus});
}

std::array<Outcome, 16> all_outcomes() {
    std::array<Outcome, 16> out{};
    for (std::size_t i = 0; i < out.size(); i++) {
        for (std::size_t k = 0; k < 4; k++) {
            out[i][k] = ((i >> (3 - k)) & 1U) ? Sign::Minus : Sign::Plus;
        }
    }
    return out;
}

}  // namespace twobell::lhv
