// Copyright 2026 The telechan Authors
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

#ifndef TELECHAN_ACCEPTANCE_H
#define TELECHAN_ACCEPTANCE_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace telechan {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceConfig {
    std::uint64_t seed = 42;
    /// Fidelity tolerance. The other numeric thresholds scale with it.
    double tolerance = 1e-10;
    std::size_t samples = 1000;
    std::filesystem::path data_dir;
};

/// $TELECHAN_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

/// Runs the ten acceptance checks in order. Output depends only on the
/// configuration.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig &config);

/// "PASS  3 channel lists: ..." per criterion.
std::string format_result(const CriterionResult &r);

}  // namespace telechan

#endif  // TELECHAN_ACCEPTANCE_H
