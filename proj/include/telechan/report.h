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

#ifndef TELECHAN_REPORT_H
#define TELECHAN_REPORT_H

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "telechan/classify.h"
#include "telechan/instruction_table.h"

namespace telechan {

enum class Format { kText, kJson };
std::optional<Format> parse_format(std::string_view name);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Three-column table (measurement | Bob's state | instruction) or JSON:
///   {"channel", "class", "rows": [{"bell", "canon", "state", "placement",
///    "correction": {"cnot", "p4", "p5"}}]}
/// "state" holds Bob's normalized amplitudes (index order, [re, im] pairs)
/// at the reference parameters of reference_params(); "placement" holds the
/// exact integer map from class parameters to those amplitudes.
std::string emit_table(const InstructionTable &table, Format format);
InstructionTable parse_table_json(std::string_view json);

std::vector<cplx> reference_params(int count);

std::string emit_report(const ClassificationReport &report, Format format);

/// "(|000⟩ + |111⟩)/√2" style rendering of a channel.
std::string channel_expression(const ChannelSpec &channel);
/// Support mask of an expression like "|010⟩ + |101⟩" (signs ignored).
std::uint8_t parse_support_expression(std::string_view expression);

/// Bob's state written as a sum of signed class parameters on |xy⟩ kets.
Placement parse_state_expression(std::string_view expression, const InputClass &cls);
/// "do nothing", "apply (σx)4⊗I5", "(σz)5⊗(σx)4 CNOT", ... as a 4 x 4
/// operator; factors act right to left.
LinearOp parse_instruction(std::string_view instruction);
/// The correction whose realization equals `op` up to global phase.
std::optional<CorrectionOp> identify_correction(const LinearOp &op);

struct GoldenRow {
    std::string outcome;  // as printed, e.g. "|0>1 phi-"
    std::string state;
    std::string instruction;
    bool ambiguous = false;
};

/// One transcribed reference table.
struct GoldenTable {
    std::string id;
    ChannelSpec channel;
    InputClass cls;
    std::vector<GoldenRow> rows;
};

GoldenTable parse_golden(std::string_view json);
GoldenTable load_golden(const std::filesystem::path &path);
/// table_*.json files in `dir`, sorted by name.
std::vector<std::filesystem::path> golden_table_files(const std::filesystem::path &dir);

/// Reference channel lists per class name, as support masks.
std::map<std::string, std::vector<std::uint8_t>> load_channel_lists(const std::filesystem::path &path);
/// Reference pattern counts per class name.
std::map<std::string, int> load_summary_counts(const std::filesystem::path &path);

enum class RowVerdict { kMatch, kMismatch, kAmbiguousMatch, kAmbiguousUnmatched };

struct RowCheck {
    std::size_t row = 0;
    std::string outcome;
    RowVerdict verdict = RowVerdict::kMismatch;
    std::string detail;
};

struct MatchReport {
    std::vector<RowCheck> rows;
    std::size_t matches = 0;
    std::size_t ambiguous = 0;
    std::size_t mismatches = 0;

    bool ok() const { return mismatches == 0; }
};

/// Compares rows by content: Bob's state up to global phase and the action
/// of the reference instruction on that state up to global phase. Rows
/// marked ambiguous are matched against any generated row by content and
/// reported, not failed. Throws std::invalid_argument if channel or class
/// differ.
MatchReport verify_against_golden(const InstructionTable &table, const GoldenTable &golden);

}  // namespace telechan

#endif  // TELECHAN_REPORT_H
