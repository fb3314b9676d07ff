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

#ifndef TWOBELL_STATEVEC_H
#define TWOBELL_STATEVEC_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twobell {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 4;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kProbabilityTolerance = 1e-10;

/// Pure state of 1 to 4 qubits in the computational basis.
///
/// Qubits are numbered from 1. Qubit 1 is the most significant bit of the
/// basis index, so the ket |q1 q2 ... qn> lives at index q1 q2 ... qn read as
/// a binary number.
///
/// The named constructors (`from_amplitudes`, `basis_state`, `normalized`)
/// always produce unit vectors. `unnormalized` keeps the amplitudes as given
/// and is what projections return; their squared norm is a probability.
class StateVector {
   public:
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);
    static StateVector unnormalized(std::vector<Complex> amplitudes);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    Complex amplitude(std::size_t index) const;
    /// Amplitude of the basis ket written as a bitstring, e.g. "0101".
    Complex amplitude(std::string_view bits) const;

    double norm_squared() const noexcept;
    /// Throws InvalidSize on a (numerically) zero vector.
    StateVector normalized() const;

   private:
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Bijection of qubit positions. `target_of(q)` is where qubit q ends up.
class QubitPermutation {
   public:
    /// 1-based targets: `targets[k]` is the new position of qubit k + 1.
    explicit QubitPermutation(std::vector<int> targets);

    /// Order string such as "1324": new position k holds old qubit order[k].
    static QubitPermutation from_order(std::string_view order);
    static QubitPermutation identity(int num_qubits);

    int num_qubits() const noexcept {
        return static_cast<int>(targets_.size());
    }
    int target_of(int qubit) const;
    QubitPermutation inverse() const;

    bool operator==(const QubitPermutation &) const = default;

   private:
    std::vector<int> targets_;
};

StateVector basis_state(std::string_view bits);

/// Kronecker product; the qubits of `a` precede those of `b`.
StateVector tensor(const StateVector &a, const StateVector &b);

StateVector permute_qubits(const StateVector &s, const QubitPermutation &p);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector &a, const StateVector &b);

/// Contracts the bra `<bra|` on `qubits` of `ket`, leaving the remaining
/// qubits in their original relative order. The result is unnormalized.
StateVector partial_inner_product(const StateVector &bra, std::span<const int> qubits, const StateVector &ket);

bool approx_equal(const StateVector &a, const StateVector &b, double tolerance = kNormTolerance);

/// Value (0 or 1) of `qubit` in the basis index `index` of an n-qubit register.
constexpr int bit_of(std::size_t index, int qubit, int num_qubits) {
    return static_cast<int>((index >> (num_qubits - qubit)) & 1U);
}

std::string basis_label(std::size_t index, int num_qubits);

}  // namespace twobell

#endif
