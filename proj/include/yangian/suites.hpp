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
// Named verification suites and their machine-readable reports.

#ifndef YANGIAN_SUITES_HPP
#define YANGIAN_SUITES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "yangian/omega.hpp"
#include "yangian/rational.hpp"
#include "yangian/ugl.hpp"

namespace yangian {

inline constexpr const char* kToolVersion = "1.0.0";

struct SuiteConfig {
    std::string suite = "all";
    // Empty means the default grid C, C^2, null(2), Mat(2).
    std::vector<OmegaPtr> omegas;
    std::string omega_source = "default";
    int n_min = 2;
    int n_max = 4;
    int d = 2;
    int max_len = 3;
    int max_deg = 2;
    std::vector<Rational> s_values{Rational(0), Rational(1), Rational(-1), Rational(5, 2)};
    std::uint64_t seed = 1;
    Budget budget;
};

enum class Status { pass, fail, skipped, not_stabilized };
std::string to_string(Status s);

struct CheckRecord {
    std::string name;
    nlohmann::json config;
    Status status = Status::pass;
    nlohmann::json witness;
    double wall_time = 0.0;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckRecord> records;  // sorted by name, then configuration

    std::map<std::string, int> counts() const;
    // A failure or a non-stabilized check.
    bool failed() const;
    nlohmann::json to_json(bool include_times = true) const;
    std::string summary_text() const;
};

const std::vector<std::string>& suite_names();

// The default Omega grid.
std::vector<OmegaPtr> default_omegas();

// Throws StructuralError for an unknown suite or invalid bounds, and PreconditionError
// when a suite other than `double` receives a non-associative Omega.
Report run_suite(const SuiteConfig& cfg);

}  // namespace yangian

#endif  // YANGIAN_SUITES_HPP
