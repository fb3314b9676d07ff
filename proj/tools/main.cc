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

#include <CLI11.hpp>
#include <iostream>
#include <limits>

#include "commands.h"
#include "twobell/error.h"

using namespace twobell;

int main(int argc, char **argv) {
    CLI::App app{"twobell: exact checks of the two-observer, two-singlet Bell argument"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_text = "json";
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto *table1 = app.add_subcommand("table1", "Joint distribution of A1A3, a1a3, B2b4, b2B4");
    auto *verify = app.add_subcommand("verify", "Check every quantum prediction of the argument");

    auto *lhv_cmd = app.add_subcommand("lhv", "Certify the local value-assignment constraint system");
    std::string outcome_text;
    lhv_cmd->add_option("--outcome", outcome_text, "Observed signs s1,s2,s3,s4 (each +1 or -1)");

    auto *sample = app.add_subcommand("sample", "Monte Carlo runs of the joint Bell measurement");
    std::uint64_t runs = 100000;
    std::uint64_t seed = 0;
    std::string order_text = "alice-first";
    bool records = false;
    sample->add_option("--runs", runs, "Number of runs")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sample->add_option("--seed", seed, "Generator seed");
    sample->add_option("--order", order_text, "Which party measures first")
        ->check(CLI::IsMember({"alice-first", "bob-first"}));
    sample->add_flag("--records", records, "Emit one record per run instead of the summary");

    auto *decompose = app.add_subcommand("decompose", "Bell-product coefficients of the two-singlet state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return cli::kExitPass;
        }
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        cli::Format format = cli::parse_format(format_text);
        cli::Report report;
        if (table1->parsed()) {
            report = cli::cmd_table1();
        } else if (verify->parsed()) {
            report = cli::cmd_verify();
        } else if (lhv_cmd->parsed()) {
            std::optional<lhv::Outcome> outcome;
            if (!outcome_text.empty() || lhv_cmd->count("--outcome") > 0) {
                outcome = cli::parse_outcome(outcome_text);
            }
            report = cli::cmd_lhv(outcome);
        } else if (sample->parsed()) {
            auto order = order_text == "bob-first" ? sampler::Order::BobFirst : sampler::Order::AliceFirst;
            if (records) {
                auto recs = sampler::run({runs, seed, order});
                std::cout << cli::render_records(recs, format);
                return cli::kExitPass;
            }
            report = cli::cmd_sample(runs, seed, order);
        } else if (decompose->parsed()) {
            report = cli::cmd_decompose();
        }
        std::cout << cli::render(report, format);
        if (report.pass == false) {
            std::cerr << report.command << ": one or more checks failed\n";
        }
        return cli::exit_code(report);
    } catch (const cli::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
}
