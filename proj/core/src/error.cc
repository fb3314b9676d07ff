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

#include "twobell/error.h"

namespace twobell {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidSize:
            return "invalid-size";
        case ErrorKind::InvalidPermutation:
            return "invalid-permutation";
        case ErrorKind::InvalidObservable:
            return "invalid-observable";
        case ErrorKind::IncompatibleObservables:
            return "incompatible-observables";
        case ErrorKind::InvalidPair:
            return "invalid-pair";
        case ErrorKind::InvalidPairing:
            return "invalid-pairing";
        case ErrorKind::UndefinedConditional:
            return "undefined-conditional";
        case ErrorKind::InvalidConstraint:
            return "invalid-constraint";
        case ErrorKind::InvalidConfig:
            return "invalid-config";
        case ErrorKind::EmptySample:
            return "empty-sample";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {
}

}  // namespace twobell
