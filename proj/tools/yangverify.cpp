/* Copyright 2026 The yangian-omega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// yangverify: command-line front end for the verification suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yangian/current.hpp"
#include "yangian/errors.hpp"
#include "yangian/omega.hpp"
#include "yangian/suites.hpp"

namespace {

using namespace yangian;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

OmegaPtr resolve_omega(const std::string& source) {
    if (auto b = builtin(source)) return *b;
    if (!std::filesystem::exists(source)) {
        throw ParseError("'" + source + "' is neither a builtin algebra nor an existing file");
    }
    return load_omega_file(source);
}

std::vector<Rational> parse_s_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid s value '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("--s needs at least one rational");
    return out;
}

int omega_check(const std::string& path) {
    const OmegaPtr omega = resolve_omega(path);
    std::cout << "name: " << omega->name() << "\n";
    std::cout << "dim: " << omega->dim() << "\n";
    std::cout << "basis:";
    for (const auto& l : omega->labels()) std::cout << " " << l;
    std::cout << "\n";
    std::cout << "nonzero products: " << omega->entries().size() << "\n";
    if (auto w = check_associativity(*omega)) {
        std::cout << "associative: no (" << omega->label((*w)[0]) << ", " << omega->label((*w)[1]) << ", "
                  << omega->label((*w)[2]) << ")\n";
    } else {
        std::cout << "associative: yes\n";
    }
    std::cout << "unital: " << (detect_unit(omega) ? "yes" : "no") << "\n";
    return kExitPass;
}

std::string default_out_path(const std::string& suite) {
    const char* dir = std::getenv("YANGIAN_REPORT_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return (std::filesystem::path(dir) / ("yangverify-" + suite + ".json")).string();
}

int run(SuiteConfig cfg, const std::vector<std::string>& omega_sources, const std::string& s_text, std::string out) {
    if (!omega_sources.empty()) {
        cfg.omega_source.clear();
        for (const auto& src : omega_sources) {
            cfg.omegas.push_back(resolve_omega(src));
            cfg.omega_source += (cfg.omega_source.empty() ? "" : ",") + src;
        }
    }
    if (!s_text.empty()) cfg.s_values = parse_s_list(s_text);
    const Report report = run_suite(cfg);
    std::cout << report.summary_text();
    if (out.empty()) out = default_out_path(cfg.suite);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot write report to '" + out + "'");
        f << report.to_json().dump(2) << "\n";
        std::cout << "report: " << out << "\n";
    }
    return report.failed() ? kExitFail : kExitPass;
}

int dims(const std::string& source, int d, int grade) {
    const OmegaPtr omega = resolve_omega(source);
    if (d < 1 || grade < 0) throw PreconditionError("--d must be positive and --grade nonnegative");
    std::cout << "grade formula enumerated\n";
    bool ok = true;
    for (int n = 0; n <= grade; ++n) {
        const long long formula = graded_dim(omega->dim(), d, n);
        const long long counted = enumerate_current_basis(omega->dim(), d, n);
        ok = ok && formula == counted;
        std::cout << n << " " << formula << " " << counted << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for Yangian-type algebras over a finite-dimensional algebra"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto* omega_cmd = app.add_subcommand("omega", "Inspect an algebra specification");
    omega_cmd->require_subcommand(1);
    std::string check_path;
    auto* check_cmd = omega_cmd->add_subcommand("check", "Load, validate and describe an algebra");
    check_cmd->add_option("file", check_path, "JSON file or builtin name")->required();

    SuiteConfig cfg;
    std::vector<std::string> omega_sources;
    std::string s_text;
    std::string out;
    auto* run_cmd = app.add_subcommand("run", "Run a verification suite");
    run_cmd->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    run_cmd->add_option("--omega", omega_sources, "Builtin name or JSON file (repeatable; default grid if absent)");
    run_cmd->add_option("--n-min", cfg.n_min, "Smallest N")->check(CLI::PositiveNumber);
    run_cmd->add_option("--n-max", cfg.n_max, "Largest N")->check(CLI::PositiveNumber);
    run_cmd->add_option("--d", cfg.d, "Largest d")->check(CLI::PositiveNumber);
    run_cmd->add_option("--max-len", cfg.max_len, "Word length bound")->check(CLI::PositiveNumber);
    run_cmd->add_option("--max-deg", cfg.max_deg, "Filtration degree bound")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--s", s_text, "Comma-separated rationals, e.g. 0,1,-1,5/2");
    run_cmd->add_option("--seed", cfg.seed, "Random seed");
    run_cmd->add_option("--max-basis", cfg.budget.max_basis, "Per-check basis size budget");
    run_cmd->add_option("--out", out, "JSON report path (default: $YANGIAN_REPORT_DIR/yangverify-<suite>.json)");

    std::string dims_omega = "C";
    int dims_d = 1;
    int dims_grade = 3;
    auto* dims_cmd = app.add_subcommand("dims", "Graded dimensions of gl(d) currents over the algebra");
    dims_cmd->add_option("--omega", dims_omega, "Builtin name or JSON file");
    dims_cmd->add_option("--d", dims_d, "Matrix size");
    dims_cmd->add_option("--grade", dims_grade, "Largest grade");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*check_cmd) return omega_check(check_path);
        if (*run_cmd) return run(cfg, omega_sources, s_text, out);
        if (*dims_cmd) return dims(dims_omega, dims_d, dims_grade);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
