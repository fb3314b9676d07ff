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

#ifndef TWOBELL_ERROR_H
#define TWOBELL_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobell {

enum class ErrorKind {
    InvalidSize,
    InvalidPermutation,
    InvalidObservable,
    IncompatibleObservables,
    InvalidPair,
    InvalidPairing,
    UndefinedConditional,
    InvalidConstraint,
    InvalidConfig,
    EmptySample,
};

std::string_view to_string(ErrorKind kind);

/// Thrown for every precondition violation in the core library. The kind
/// identifies which contract was broken; what() carries the detail.
class Error : public std::invalid_argument {
   public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace twobell

#endif
