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

#include "twobell/json.h"

namespace twobell {

Json to_json(std::span<const Sign> signs) {
    Json out = Json::array();
    for (Sign s : signs) {
        out.push_back(value(s));
    }
    return out;
}

Json to_json(const OutcomeDistribution &dist) {
    Json obs = Json::array();
    for (const auto &o : dist.observables()) {
        obs.push_back(o.label());
    }
    Json entries = Json::array();
    for (std::size_t i = 0; i < dist.size(); i++) {
        entries.push_back({{"outcome", to_json(dist.outcome(i))}, {"probability", dist.probabilities()[i]}});
    }
    return {{"observables", std::move(obs)}, {"entries", std::move(entries)}};
}

Json to_json(const PropertyReport &report) {
    return {
        {"property", to_string(report.id)},
        {"description", report.description},
        {"expected", report.expected},
        {"computed", report.computed},
        {"labels", report.labels},
        {"tolerance", report.tolerance},
        {"max_deviation", report.max_deviation()},
        {"pass", report.pass},
    };
}

Json to_json(const BellDecomposition &decomposition) {
    Json pairs = Json::array();
    for (const auto &p : decomposition.pairs()) {
        pairs.push_back({p.first, p.second});
    }
    Json bases = Json::array();
    for (const auto &b : decomposition.bases()) {
        bases.push_back(to_string(b));
    }
    Json terms = Json::array();
    for (const auto &t : decomposition.terms()) {
        terms.push_back({
            {"first", t.first.label()},
            {"second", t.second.label()},
            {"re", t.coefficient.real()},
            {"im", t.coefficient.imag()},
            {"magnitude", std::abs(t.coefficient)},
        });
    }
    return {{"pairs", std::move(pairs)}, {"bases", std::move(bases)}, {"terms", std::move(terms)}};
}

Json to_json(const lhv::ParityConstraint &constraint) {
    Json labels = Json::array();
    for (auto e : constraint.labels()) {
        labels.push_back(lhv::label(e));
    }
    return {{"labels", std::move(labels)},
            {"required_sign", value(constraint.required_sign())},
            {"text", constraint.to_string()}};
}

Json to_json(const lhv::Certificate &certificate) {
    Json constraints = Json::array();
    for (const auto &c : certificate.constraints) {
        constraints.push_back(to_json(c));
    }
    return {
        {"constraints", std::move(constraints)},
        {"satisfying_count", certificate.satisfying_count},
        {"parity_applicable", certificate.parity_applicable},
        {"parity_product", certificate.parity_product ? Json(value(*certificate.parity_product)) : Json(nullptr)},
        {"gf2_rank", certificate.gf2_rank},
        {"gf2_consistent", certificate.gf2_consistent},
        {"feasible", certificate.feasible},
    };
}

Json to_json(const sampler::RunRecord &record, std::uint64_t run_index) {
    return {
        {"run", run_index},
        {"alice", to_json(record.alice)},
        {"bob", to_json(record.bob)},
        {"classification", lhv::to_string(record.classification)},
    };
}

Json to_json(const sampler::ChiSquared &chi) {
    return {
        {"statistic", chi.statistic},
        {"degrees_of_freedom", chi.degrees_of_freedom},
        {"critical_value", chi.critical_value},
        {"confidence", sampler::kChiSquaredConfidence},
        {"p_value", chi.p_value},
        {"below_critical", chi.below_critical},
    };
}

}  // namespace twobell
