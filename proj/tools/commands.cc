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

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "twobell/protocol.h"

namespace twobell::cli {

namespace {

constexpr double kZeroCellTolerance = 1e-12;

std::string bool_text(bool b) {
    return b ? "true" : "false";
}

std::string sign_text(Sign s) {
    return to_string(s);
}

bool cell_passes(double computed, double expected) {
    double tol = expected == 0.0 ? kZeroCellTolerance : kProbabilityTolerance;
    return std::abs(computed - expected) < tol;
}

std::string format_tolerance(double tol) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", tol);
    return buf;
}

std::string join(std::span<const std::string> cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); i++) {
        out += (i ? "," : "") + cells[i];
    }
    return out;
}

}  // namespace

std::string format_number(double v) {
    if (std::abs(v) < 5e-7) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

lhv::Outcome parse_outcome(std::string_view text) {
    lhv::Outcome out{};
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(start, end - start);
        if (count >= out.size()) {
            throw UsageError("outcome must have exactly four signs");
        }
        if (token == "+1" || token == "1" || token == "+") {
            out[count++] = Sign::Plus;
        } else if (token == "-1" || token == "-") {
            out[count++] = Sign::Minus;
        } else {
            throw UsageError("bad sign '" + std::string(token) + "' (expected +1 or -1)");
        }
        start = end + 1;
    }
    if (count != out.size()) {
        throw UsageError("outcome must have exactly four signs");
    }
    return out;
}

Format parse_format(std::string_view text) {
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    throw UsageError("unknown format '" + std::string(text) + "' (expected json or csv)");
}

Report cmd_table1() {
    auto dist = table1(two_singlet_state());
    Report r{"table1", Json::object(), Json::object(), true, {}, {}};
    r.csv_header = {"A1A3", "a1a3", "B2b4", "b2B4", "probability", "expected", "pass"};
    Json cells = Json::array();
    bool all = true;
    for (std::size_t i = 0; i < dist.size(); i++) {
        auto signs = dist.outcome(i);
        double p = dist.probabilities()[i];
        double e = table1_expected(signs);
        bool ok = cell_passes(p, e);
        all = all && ok;
        cells.push_back({
            {"outcome", to_json(signs)},
            {"sign_product", value(product(signs))},
            {"classification", lhv::to_string(lhv::classify_outcome({signs[0], signs[1], signs[2], signs[3]}))},
            {"probability", p},
            {"expected", e},
            {"pass", ok},
        });
        r.csv_rows.push_back({sign_text(signs[0]), sign_text(signs[1]), sign_text(signs[2]), sign_text(signs[3]),
                              format_number(p), format_number(e), bool_text(ok)});
    }
    Json obs = Json::array();
    for (const auto &o : dist.observables()) {
        obs.push_back(o.label());
    }
    r.results = {{"observables", std::move(obs)}, {"cells", std::move(cells)}, {"total", dist.total()}};
    r.pass = all;
    return r;
}

Report cmd_verify() {
    auto reports = verify_all_properties();
    Report r{"verify", Json::object(), Json::object(), true, {}, {}};
    r.csv_header = {"property", "label", "computed", "expected", "tolerance", "pass"};
    Json list = Json::array();
    bool all = true;
    for (const auto &rep : reports) {
        list.push_back(to_json(rep));
        all = all && rep.pass;
        for (std::size_t i = 0; i < rep.computed.size(); i++) {
            std::string label = i < rep.labels.size() ? rep.labels[i] : "";
            // Labels contain commas (tuples), so they are quoted.
            r.csv_rows.push_back({std::string(to_string(rep.id)), "\"" + label + "\"", format_number(rep.computed[i]),
                                  format_number(rep.expected[i]), format_tolerance(rep.tolerance),
                                  bool_text(rep.pass)});
        }
    }
    r.results = {{"count", reports.size()}, {"reports", std::move(list)}};
    r.pass = all;
    return r;
}

Report cmd_lhv(std::optional<lhv::Outcome> outcome) {
    lhv::Outcome o = outcome.value_or(lhv::Outcome{Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus});
    auto constraints = lhv::build_constraints(o);
    auto cert = lhv::parity_certificate(constraints);
    auto classification = lhv::classify_outcome(o);

    Report r{"lhv", Json::object(), Json::object(), true, {}, {}};
    r.inputs = {{"outcome", outcome ? to_json(*outcome) : Json(nullptr)}};

    // Dropping any one constraint of an infeasible system should leave it
    // feasible; report the solution count of each sub-system.
    Json minimality = Json::array();
    bool minimal = true;
    if (classification == lhv::Classification::Contradiction) {
        for (std::size_t k = 0; k < constraints.size(); k++) {
            std::vector<lhv::ParityConstraint> sub;
            for (std::size_t j = 0; j < constraints.size(); j++) {
                if (j != k) {
                    sub.push_back(constraints[j]);
                }
            }
            auto count = lhv::enumerate(sub).size();
            minimal = minimal && count > 0;
            minimality.push_back({{"dropped", constraints[k].to_string()}, {"satisfying_count", count}});
        }
    }

    bool consistent = cert.feasible == (classification == lhv::Classification::Explainable);
    r.results = {
        {"outcome", to_json(o)},
        {"classification", lhv::to_string(classification)},
        {"certificate", to_json(cert)},
        {"minimality", std::move(minimality)},
    };
    r.pass = consistent && minimal;

    r.csv_header = {"A1A3", "a1a3", "B2b4", "b2B4", "classification", "satisfying_count", "parity_product",
                    "feasible", "pass"};
    r.csv_rows.push_back({sign_text(o[0]), sign_text(o[1]), sign_text(o[2]), sign_text(o[3]),
                          std::string(lhv::to_string(classification)), std::to_string(cert.satisfying_count),
                          cert.parity_product ? sign_text(*cert.parity_product) : "n/a", bool_text(cert.feasible),
                          bool_text(*r.pass)});
    return r;
}

Report cmd_sample(std::uint64_t runs, std::uint64_t seed, sampler::Order order) {
    if (runs < 1) {
        throw UsageError("--runs must be at least 1");
    }
    auto records = sampler::run({runs, seed, order});
    auto emp = sampler::empirical_distribution(records);
    auto chi = sampler::chi_squared_vs_table1(emp);

    Report r{"sample", Json::object(), Json::object(), true, {}, {}};
    r.inputs = {{"runs", runs}, {"seed", seed}, {"order", sampler::to_string(order)}};
    r.csv_header = {"A1A3", "a1a3", "B2b4", "b2B4", "count", "frequency", "expected", "bound", "pass"};

    Json cells = Json::array();
    bool all = true;
    std::uint64_t contradictions = 0;
    for (const auto &rec : records) {
        contradictions += rec.classification == lhv::Classification::Contradiction ? 1 : 0;
    }
    for (std::size_t i = 0; i < emp.counts.size(); i++) {
        auto signs = emp.distribution.outcome(i);
        double f = emp.distribution.probabilities()[i];
        double e = table1_expected(signs);
        // Zero cells must be exactly empty, nonzero ones within 3 sigma.
        double bound = e > 0 ? sampler::binomial_bound(e, emp.total) : 0.0;
        bool ok = e > 0 ? std::abs(f - e) <= bound : emp.counts[i] == 0;
        all = all && ok;
        cells.push_back({{"outcome", to_json(signs)},
                         {"count", emp.counts[i]},
                         {"frequency", f},
                         {"expected", e},
                         {"bound", bound},
                         {"pass", ok}});
        r.csv_rows.push_back({sign_text(signs[0]), sign_text(signs[1]), sign_text(signs[2]), sign_text(signs[3]),
                              std::to_string(emp.counts[i]), format_number(f), format_number(e),
                              format_number(bound), bool_text(ok)});
    }
    r.results = {
        {"runs", runs},
        {"contradiction_runs", contradictions},
        {"explainable_runs", runs - contradictions},
        {"cells", std::move(cells)},
        {"chi_squared", to_json(chi)},
    };
    r.pass = all && chi.below_critical && contradictions == runs;
    return r;
}

Report cmd_decompose() {
    auto dec = two_singlet_cross_decomposition();
    const double magnitude = 1.0 / (2.0 * std::sqrt(2.0));

    Report r{"decompose", Json::object(), Json::object(), true, {}, {}};
    r.csv_header = {"first", "second", "coefficient", "magnitude", "sign", "zero"};

    Json terms = Json::array();
    double sum_squared = 0;
    int nonzero = 0;
    bool magnitudes_ok = true;
    for (const auto &t : dec.terms()) {
        double mag = std::abs(t.coefficient);
        bool zero = mag < kZeroCellTolerance;
        std::string sign = zero ? "0" : (t.coefficient.real() > 0 ? "+" : "-");
        sum_squared += mag * mag;
        if (!zero) {
            nonzero++;
            magnitudes_ok = magnitudes_ok && std::abs(mag - magnitude) < kZeroCellTolerance &&
                            std::abs(t.coefficient.imag()) < kZeroCellTolerance;
        }
        terms.push_back({{"first", t.first.label()},
                         {"second", t.second.label()},
                         {"coefficient", t.coefficient.real()},
                         {"imag", t.coefficient.imag()},
                         {"magnitude", mag},
                         {"sign", sign},
                         {"zero", zero}});
        r.csv_rows.push_back({t.first.label(), t.second.label(), format_number(t.coefficient.real()),
                              format_number(mag), sign, bool_text(zero)});
    }

    Json reference = Json::array();
    bool signs_ok = true;
    for (const auto &ref : cross_decomposition_reference_terms()) {
        Complex c = dec.coefficient(ref.first, ref.second);
        bool ok = std::abs(c - static_cast<double>(value(ref.sign)) * magnitude) < kZeroCellTolerance;
        signs_ok = signs_ok && ok;
        reference.push_back({{"term", ref.first.label() + " " + ref.second.label()},
                             {"expected_sign", ref.sign == Sign::Plus ? "+" : "-"},
                             {"coefficient", c.real()},
                             {"pass", ok}});
    }

    bool complete = std::abs(sum_squared - 1.0) < kZeroCellTolerance;
    r.results = {
        {"decomposition", "psi_1324 in phi/psi (1,3) x chi/omega (2,4)"},
        {"terms", std::move(terms)},
        {"nonzero_count", nonzero},
        {"expected_magnitude", magnitude},
        {"sum_squared", sum_squared},
        {"reference_terms", std::move(reference)},
    };
    r.pass = nonzero == 8 && magnitudes_ok && signs_ok && complete;
    return r;
}

std::string render(const Report &report, Format format) {
    if (format == Format::Csv) {
        std::string out = join(report.csv_header) + "\n";
        for (const auto &row : report.csv_rows) {
            out += join(row) + "\n";
        }
        return out;
    }
    Json doc = {
        {"command", report.command},
        {"inputs", report.inputs},
        {"results", report.results},
        {"pass", report.pass ? Json(*report.pass) : Json(nullptr)},
    };
    return doc.dump(2) + "\n";
}

std::string render_records(std::span<const sampler::RunRecord> records, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "run,A1A3,a1a3,B2b4,b2B4,classification\n";
        for (std::size_t i = 0; i < records.size(); i++) {
            const auto &rec = records[i];
            out << i << ',' << sign_text(rec.alice[0]) << ',' << sign_text(rec.alice[1]) << ','
                << sign_text(rec.bob[0]) << ',' << sign_text(rec.bob[1]) << ','
                << lhv::to_string(rec.classification) << '\n';
        }
        return out.str();
    }
    for (std::size_t i = 0; i < records.size(); i++) {
        out << to_json(records[i], i).dump() << '\n';
    }
    return out.str();
}

int exit_code(const Report &report) {
    return report.pass.value_or(true) ? kExitPass : kExitCheckFailure;
}

}  // namespace twobell::cli
