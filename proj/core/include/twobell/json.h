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

#ifndef TWOBELL_JSON_H
#define TWOBELL_JSON_H

// JSON shapes for the core result types. Keys are emitted in insertion
// order so serialized output is stable across runs.
//
//   PropertyReport: {"property", "description", "expected", "computed",
//                    "labels", "tolerance", "max_deviation", "pass"}
//   Certificate:    {"constraints", "satisfying_count", "parity_applicable",
//                    "parity_product" (int or null), "gf2_rank",
//                    "gf2_consistent", "feasible"}
//   OutcomeDistribution: {"observables", "entries": [{"outcome", "probability"}]}
//   RunRecord:      {"run", "alice", "bob", "classification"}

#include <cstdint>

#include <nlohmann/json.hpp>

#include "twobell/lhv.h"
#include "twobell/observables.h"
#include "twobell/protocol.h"
#include "twobell/sampler.h"

namespace twobell {

using Json = nlohmann::ordered_json;

Json to_json(std::span<const Sign> signs);
Json to_json(const OutcomeDistribution &dist);
Json to_json(const PropertyReport &report);
Json to_json(const BellDecomposition &decomposition);
Json to_json(const lhv::ParityConstraint &constraint);
Json to_json(const lhv::Certificate &certificate);
Json to_json(const sampler::RunRecord &record, std::uint64_t run_index);
Json to_json(const sampler::ChiSquared &chi);

}  // namespace twobell

#endif
