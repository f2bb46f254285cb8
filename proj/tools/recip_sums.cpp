// Copyright 2026 The recip-sums Authors
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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "recip/config.hpp"
#include "recip/error.hpp"
#include "recip/harness.hpp"
#include "recip/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw recip::Error(recip::ErrorKind::ConfigError, "cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exponent and character sums with reciprocals of polynomials modulo a prime.\n"
        "Logarithms are natural logarithms throughout (census bands are e^j).\n"
        "Config files are flat 'key = value' text; lists are comma separated,\n"
        "rationals are written n/d, '#' starts a comment.\n"
        "RECIP_SUMS_WORKCAP overrides the enumeration work cap.\n"
        "Exit codes: 0 success, 1 verification failure, 2 config or input error."};
    app.require_subcommand(1);

    std::string config_path, out_path, rows, level = "quick";
    std::uint64_t seed = 0;
    std::int64_t parallel = 0;
    int kmax = 64;
    bool timing = false;

    auto* table = app.add_subcommand("table-compare", "Exact exponent comparison table");
    table->add_option("--rows", rows, "Custom rows as alpha:beta;alpha:beta (default: the published rows)");
    table->add_option("--kmax", kmax, "Largest Hoelder parameter searched")->check(CLI::PositiveNumber);
    table->add_option("--out", out_path, "Write the CSV form here");

    std::vector<CLI::App*> runs;
    for (auto [name, help] : {std::pair{"eval", "Evaluate sums at one (p, U, V)"},
                              std::pair{"count", "Counting quantities with oracles"},
                              std::pair{"sweep", "Sum evaluations over an axis grid"},
                              std::pair{"pigeonhole", "Coefficient shrinking"},
                              std::pair{"discrepancy", "Discrepancy of f(u) mod p"}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "Experiment config")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Override the config seed");
        sub->add_option("--out", out_path, "CSV output path (default stdout)");
        sub->add_option("--parallel", parallel, "Worker threads for sweep cells")->check(CLI::PositiveNumber);
        sub->add_flag("--timing", timing, "Fill the wall_ms column (output no longer byte-stable)");
        runs.push_back(sub);
    }

    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*table) {
            const auto points = rows.empty() ? recip::reference_points() : recip::parse_points(rows);
            const auto res = recip::cmd_table_compare(points, kmax);
            std::cout << res.rendered;
            if (!out_path.empty()) write_output(res.csv, out_path);
            return res.exit_code == 0 ? kOk : kVerifyFailed;
        }
        if (*verify) {
            const auto report = recip::run_verify(recip::parse_level(level));
            std::cout << report.render(true);
            return report.ok() ? kOk : kVerifyFailed;
        }
        for (auto* sub : runs) {
            if (!*sub) continue;
            const auto cfg = recip::load_config(config_path);
            recip::RunOptions opts;
            if (sub->count("--seed")) opts.seed = seed;
            opts.parallel = parallel;
            opts.timing = timing;
            const std::string name = sub->get_name();
            std::string csv;
            if (name == "eval") csv = recip::cmd_eval(cfg, opts);
            else if (name == "count") csv = recip::cmd_count(cfg, opts);
            else if (name == "sweep") csv = recip::cmd_sweep(cfg, opts);
            else if (name == "pigeonhole") csv = recip::cmd_pigeonhole(cfg, opts);
            else csv = recip::cmd_discrepancy(cfg, opts);
            write_output(csv, out_path.empty() ? cfg.out : out_path);
        }
    } catch (const recip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
