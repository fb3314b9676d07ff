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
#include <numeric>

#include "twobell/error.h"

namespace twobell {

namespace {

int qubits_for_dimension(std::size_t dimension) {
    for (int n = 1; n <= kMaxQubits; n++) {
        if (dimension == (std::size_t{1} << n)) {
            return n;
        }
    }
    throw Error(ErrorKind::InvalidSize,
                "amplitude count " + std::to_string(dimension) + " is not 2^n for n in 1.." +
                    std::to_string(kMaxQubits));
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::unnormalized(std::vector<Complex> amplitudes) {
    int n = qubits_for_dimension(amplitudes.size());
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    return unnormalized(std::move(amplitudes)).normalized();
}

Complex StateVector::amplitude(std::size_t index) const {
    if (index >= amplitudes_.size()) {
        throw Error(ErrorKind::InvalidSize, "basis index " + std::to_string(index) + " out of range");
    }
    return amplitudes_[index];
}

Complex StateVector::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != num_qubits_) {
        throw Error(ErrorKind::InvalidSize, "bitstring '" + std::string(bits) + "' does not match register size");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidSize, "bitstring '" + std::string(bits) + "' has a non-binary digit");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const noexcept {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector StateVector::normalized() const {
    double n2 = norm_squared();
    if (n2 < kNormTolerance * kNormTolerance) {
        throw Error(ErrorKind::InvalidSize, "cannot normalize a zero vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    std::vector<Complex> out(amplitudes_);
    for (auto &a : out) {
        a *= scale;
    }
    return StateVector(num_qubits_, std::move(out));
}

QubitPermutation::QubitPermutation(std::vector<int> targets) : targets_(std::move(targets)) {
    int n = static_cast<int>(targets_.size());
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorKind::InvalidPermutation, "permutation must act on 1.." + std::to_string(kMaxQubits) +
                                                       " qubits");
    }
    std::vector<bool> seen(n + 1, false);
    for (int t : targets_) {
        if (t < 1 || t > n || seen[t]) {
            throw Error(ErrorKind::InvalidPermutation, "mapping is not a bijection on 1.." + std::to_string(n));
        }
        seen[t] = true;
    }
}

QubitPermutation QubitPermutation::from_order(std::string_view order) {
    int n = static_cast<int>(order.size());
    std::vector<int> targets(n, 0);
    for (int position = 1; position <= n; position++) {
        char c = order[position - 1];
        int source = c - '0';
        if (c < '1' || source > n || targets[source - 1] != 0) {
            throw Error(ErrorKind::InvalidPermutation, "bad qubit order '" + std::string(order) + "'");
        }
        targets[source - 1] = position;
    }
    return QubitPermutation(std::move(targets));
}

QubitPermutation QubitPermutation::identity(int num_qubits) {
    std::vector<int> targets(std::max(num_qubits, 0));
    std::iota(targets.begin(), targets.end(), 1);
    return QubitPermutation(std::move(targets));
}

int QubitPermutation::target_of(int qubit) const {
    if (qubit < 1 || qubit > num_qubits()) {
        throw Error(ErrorKind::InvalidPermutation, "qubit " + std::to_string(qubit) + " out of range");
    }
    return targets_[qubit - 1];
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(targets_.size());
    for (std::size_t k = 0; k < targets_.size(); k++) {
        inv[targets_[k] - 1] = static_cast<int>(k) + 1;
    }
    return QubitPermutation(std::move(inv));
}

StateVector basis_state(std::string_view bits) {
    if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw Error(ErrorKind::InvalidSize, "basis bitstring must have 1.." + std::to_string(kMaxQubits) + " bits");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::InvalidSize, "basis bitstring '" + std::string(bits) + "' has a non-binary digit");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[index] = 1.0;
    return StateVector::unnormalized(std::move(amps));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
        throw Error(ErrorKind::InvalidSize, "tensor product would exceed " + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<Complex> out;
    out.reserve(a.dimension() * b.dimension());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return StateVector::unnormalized(std::move(out));
}

StateVector permute_qubits(const StateVector &s, const QubitPermutation &p) {
    int n = s.num_qubits();
    if (p.num_qubits() != n) {
        throw Error(ErrorKind::InvalidPermutation, "permutation acts on " + std::to_string(p.num_qubits()) +
                                                       " qubits, state has " + std::to_string(n));
    }
    std::vector<Complex> out(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); i++) {
        std::size_t j = 0;
        for (int q = 1; q <= n; q++) {
            if (bit_of(i, q, n)) {
                j |= std::size_t{1} << (n - p.target_of(q));
            }
        }
        out[j] = s.amplitudes()[i];
    }
    return StateVector::unnormalized(std::move(out));
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::InvalidSize, "inner product of " + std::to_string(a.num_qubits()) + "- and " +
                                                std::to_string(b.num_qubits()) + "-qubit states");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return total;
}

StateVector partial_inner_product(const StateVector &bra, std::span<const int> qubits, const StateVector &ket) {
    int n = ket.num_qubits();
    int k = static_cast<int>(qubits.size());
    if (bra.num_qubits() != k || k >= n) {
        throw Error(ErrorKind::InvalidSize, "partial inner product needs a bra on fewer qubits than the ket");
    }
    std::vector<bool> contracted(n + 1, false);
    for (int q : qubits) {
        if (q < 1 || q > n || contracted[q]) {
            throw Error(ErrorKind::InvalidSize, "contracted qubits must be distinct and within the register");
        }
        contracted[q] = true;
    }
    std::vector<int> kept;
    for (int q = 1; q <= n; q++) {
        if (!contracted[q]) {
            kept.push_back(q);
        }
    }
    int m = static_cast<int>(kept.size());

    std::vector<Complex> out(std::size_t{1} << m);
    for (std::size_t i = 0; i < ket.dimension(); i++) {
        std::size_t bra_index = 0;
        for (int q : qubits) {
            bra_index = (bra_index << 1) | static_cast<std::size_t>(bit_of(i, q, n));
        }
        std::size_t out_index = 0;
        for (int q : kept) {
            out_index = (out_index << 1) | static_cast<std::size_t>(bit_of(i, q, n));
        }
        out[out_index] += std::conj(bra.amplitudes()[bra_index]) * ket.amplitudes()[i];
    }
    return StateVector::unnormalized(std::move(out));
}

bool approx_equal(const StateVector &a, const StateVector &b, double tolerance) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    for (std::size_t i = 0; i < a.dimension(); i++) {
        if (std::abs(a.amplitudes()[i] - b.amplitudes()[i]) > tolerance) {
            return false;
        }
    }
    return true;
}

std::string basis_label(std::size_t index, int num_qubits) {
    std::string out;
    for (int q = 1; q <= num_qubits; q++) {
        out.push_back(bit_of(index, q, num_qubits) ? '1' : '0');
    }
    return out;
}

}  // namespace twobell
