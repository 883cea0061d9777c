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

#include "telechan/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "telechan/corrections.h"

namespace telechan {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kKetClose = "⟩";

std::size_t display_width(std::string_view s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::string pad(std::string s, std::size_t width) {
    std::size_t w = display_width(s);
    if (w < width) {
        s.append(width - w, ' ');
    }
    return s;
}

bool consume(std::string_view &s, std::string_view token) {
    if (s.substr(0, token.size()) == token) {
        s.remove_prefix(token.size());
        return true;
    }
    return false;
}

void skip_space(std::string_view &s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
}

std::string text_outcome(Outcome o) {
    static constexpr std::array<const char *, 4> kBell = {"φ+", "φ-", "ψ+", "ψ-"};
    return "|" + std::to_string(o.canon) + "⟩1 |" + kBell[static_cast<int>(o.bell)] + "⟩23";
}

std::string instruction_text(const CorrectionOp &op) {
    return op.is_identity() ? "do nothing" : "apply " + instruction_string(op);
}

ordered_json table_json(const InstructionTable &table) {
    ordered_json j;
    j["channel"] = table.channel.to_string();
    j["class"] = std::string(table.cls.name());
    j["rows"] = ordered_json::array();
    const int k = table.cls.free_params();
    auto params = reference_params(k);
    for (const auto &row : table.rows) {
        ordered_json r;
        r["bell"] = std::string(bell_name(row.outcome.bell));
        r["canon"] = row.outcome.canon;
        std::array<cplx, 4> amps{};
        double norm = 0;
        for (int i = 0; i < 4; i++) {
            for (int p = 0; p < k; p++) {
                amps[i] += static_cast<double>(row.placement[i][p]) * params[p];
            }
            norm += std::norm(amps[i]);
        }
        r["state"] = ordered_json::array();
        for (auto a : amps) {
            if (norm > 0) {
                a /= std::sqrt(norm);
            }
            r["state"].push_back({a.real(), a.imag()});
        }
        r["placement"] = ordered_json::array();
        for (int i = 0; i < 4; i++) {
            r["placement"].push_back(std::vector<int>(row.placement[i].begin(), row.placement[i].begin() + k));
        }
        r["correction"] = {{"cnot", row.correction.cnot},
                           {"p4", std::string(local_name(row.correction.p4))},
                           {"p5", std::string(local_name(row.correction.p5))}};
        j["rows"].push_back(std::move(r));
    }
    return j;
}

std::string text_table(const InstructionTable &table) {
    std::vector<std::array<std::string, 3>> cells;
    cells.push_back({"Alice's measurements", "Bob's states", "Bob's instructions"});
    for (const auto &row : table.rows) {
        bool possible = row.placement != Placement{};
        cells.push_back({text_outcome(row.outcome), render_placement(row.placement, table.cls),
                         possible ? instruction_text(row.correction) : "impossible outcome"});
    }
    std::array<std::size_t, 3> width{};
    for (const auto &c : cells) {
        for (int i = 0; i < 3; i++) {
            width[i] = std::max(width[i], display_width(c[i]));
        }
    }
    std::ostringstream out;
    out << "channel " << table.channel.to_string() << "  " << channel_expression(table.channel) << "\n";
    out << "class   " << table.cls.name() << "  " << table.cls.expression() << "\n\n";
    for (std::size_t r = 0; r < cells.size(); r++) {
        out << pad(cells[r][0], width[0]) << " | " << pad(cells[r][1], width[1]) << " | " << cells[r][2] << "\n";
        if (r == 0) {
            out << std::string(width[0] + width[1] + width[2] + 6, '-') << "\n";
        }
    }
    return out.str();
}

const ordered_json &field(const ordered_json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

InputClass class_named(const std::string &name) {
    auto cls = InputClass::parse(name);
    if (!cls) {
        throw ParseError("unknown input class '" + name + "'");
    }
    return *cls;
}

// Bob's correction factor on one particle, embedded in the (4,5) space.
CMatrix on_particle(const CMatrix &m, int particle) {
    return particle == 4 ? kron(m, CMatrix::identity(2)) : kron(CMatrix::identity(2), m);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") {
        return Format::kText;
    }
    if (name == "json") {
        return Format::kJson;
    }
    return std::nullopt;
}

std::vector<cplx> reference_params(int count) {
    if (count == 2) {
        return {0.6, 0.8};
    }
    std::vector<cplx> p;
    double t = 0;
    for (int k = 0; k < count; k++) {
        p.emplace_back(k + 1.0, 0);
        t += (k + 1.0) * (k + 1.0);
    }
    for (auto &x : p) {
        x /= std::sqrt(t);
    }
    return p;
}

std::string emit_table(const InstructionTable &table, Format format) {
    if (format == Format::kJson) {
        return table_json(table).dump(2) + "\n";
    }
    return text_table(table);
}

InstructionTable parse_table_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        InstructionTable t{ChannelSpec::parse(field(j, "channel").get<std::string>()),
                           class_named(field(j, "class").get<std::string>()),
                           {}};
        const auto &rows = field(j, "rows");
        if (!rows.is_array() || rows.size() != kNumOutcomes) {
            throw ParseError("a table has exactly eight rows");
        }
        std::array<bool, kNumOutcomes> seen{};
        for (const auto &r : rows) {
            auto bell = parse_bell(field(r, "bell").get<std::string>());
            int canon = field(r, "canon").get<int>();
            if (!bell || (canon != 0 && canon != 1)) {
                throw ParseError("bad outcome in table row");
            }
            Outcome o{*bell, canon};
            if (seen[o.index()]) {
                throw ParseError("duplicate outcome " + outcome_label(o));
            }
            seen[o.index()] = true;
            TableRow &row = t.rows[o.index()];
            row.outcome = o;
            const auto &placement = field(r, "placement");
            if (!placement.is_array() || placement.size() != 4) {
                throw ParseError("placement must have four rows");
            }
            for (int i = 0; i < 4; i++) {
                auto values = placement[i].get<std::vector<int>>();
                if (static_cast<int>(values.size()) != t.cls.free_params()) {
                    throw ParseError("placement width does not match the class");
                }
                std::copy(values.begin(), values.end(), row.placement[i].begin());
            }
            const auto &c = field(r, "correction");
            auto p4 = parse_local(field(c, "p4").get<std::string>());
            auto p5 = parse_local(field(c, "p5").get<std::string>());
            if (!p4 || !p5) {
                throw ParseError("bad local operator in correction");
            }
            row.correction = CorrectionOp{field(c, "cnot").get<bool>(), *p4, *p5};
        }
        return t;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed table: ") + e.what());
    } catch (const InvalidChannel &e) {
        throw ParseError(e.what());
    }
}

std::string emit_report(const ClassificationReport &report, Format format) {
    if (format == Format::kJson) {
        ordered_json j;
        j["class"] = std::string(report.cls.name());
        j["expression"] = std::string(report.cls.expression());
        j["channels_scanned"] = report.channels_scanned;
        j["pattern_count"] = report.pattern_count();
        j["channel_count"] = report.channel_count();
        j["patterns"] = ordered_json::array();
        for (const auto &p : report.support_patterns) {
            ordered_json pj;
            pj["support"] = p.to_string();
            pj["canonical"] = p.channels.front().to_string();
            pj["channels"] = ordered_json::array();
            for (const auto &c : p.channels) {
                pj["channels"].push_back(c.to_string());
            }
            j["patterns"].push_back(std::move(pj));
        }
        j["tables"] = ordered_json::array();
        for (const auto &tc : report.teleporting_channels) {
            j["tables"].push_back(table_json(tc.table));
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "class " << report.cls.name() << "  " << report.cls.expression() << "\n";
    out << "channels scanned: " << report.channels_scanned << "\n";
    out << "support patterns: " << report.pattern_count() << "\n";
    out << "teleporting channels (all signs): " << report.channel_count() << "\n";
    for (const auto &p : report.support_patterns) {
        out << "  " << pad(p.to_string(), 8) << " " << channel_expression(p.channels.front()) << "  ("
            << p.channels.size() << " sign variants)\n";
    }
    for (const auto &tc : report.teleporting_channels) {
        if (tc.channel == ChannelSpec::from_support(tc.channel.support_mask())) {
            out << "\n" << text_table(tc.table);
        }
    }
    return out.str();
}

std::string channel_expression(const ChannelSpec &channel) {
    static constexpr std::array<const char *, 8> kKets = {"|000⟩", "|100⟩", "|010⟩", "|001⟩",
                                                          "|110⟩", "|101⟩", "|011⟩", "|111⟩"};
    std::string s;
    for (int i = 0; i < ChannelSpec::kSize; i++) {
        int c = channel.coeff(i);
        if (c == 0) {
            continue;
        }
        if (s.empty()) {
            s += c < 0 ? "-" : "";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        s += kKets[i];
    }
    int n = channel.support_size();
    return n == 1 ? s : "(" + s + ")/√" + std::to_string(n);
}

std::uint8_t parse_support_expression(std::string_view expression) {
    std::string_view s = expression;
    std::uint8_t mask = 0;
    skip_space(s);
    consume(s, "(");
    while (true) {
        skip_space(s);
        if (s.empty() || s.front() == ')') {
            break;
        }
        if (!consume(s, "+") && !consume(s, "-")) {
            // first term may be unsigned
        }
        skip_space(s);
        if (!consume(s, "|") || s.size() < 3) {
            throw ParseError("expected a |xyz⟩ ket in '" + std::string(expression) + "'");
        }
        std::string bits(s.substr(0, 3));
        s.remove_prefix(3);
        if (!consume(s, kKetClose) && !consume(s, ">")) {
            throw ParseError("unterminated ket in '" + std::string(expression) + "'");
        }
        bool found = false;
        for (int i = 0; i < ChannelSpec::kSize; i++) {
            auto idx = ChannelSpec::basis_index(i);
            std::string b{char('0' + ((idx >> 2) & 1)), char('0' + ((idx >> 1) & 1)), char('0' + (idx & 1))};
            if (b == bits) {
                mask |= std::uint8_t(1u << i);
                found = true;
            }
        }
        if (!found) {
            throw ParseError("bad ket |" + bits + "⟩");
        }
    }
    if (mask == 0) {
        throw ParseError("empty channel expression");
    }
    return mask;
}

Placement parse_state_expression(std::string_view expression, const InputClass &cls) {
    std::string_view s = expression;
    Placement p{};
    bool first = true;
    while (true) {
        skip_space(s);
        if (s.empty()) {
            break;
        }
        int sign = 1;
        if (consume(s, "-") || consume(s, "−")) {
            sign = -1;
        } else if (!consume(s, "+") && !first) {
            throw ParseError("expected + or - in '" + std::string(expression) + "'");
        }
        first = false;
        skip_space(s);
        int param = -1;
        for (int j = 0; j < cls.free_params(); j++) {
            if (consume(s, kSlotSymbols[cls.slots()[j]])) {
                param = j;
                break;
            }
        }
        if (param < 0) {
            throw ParseError("expected a parameter of class " + std::string(cls.name()) + " in '" +
                             std::string(expression) + "'");
        }
        if (!consume(s, "|") || s.size() < 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
            throw ParseError("expected a |xy⟩ ket in '" + std::string(expression) + "'");
        }
        int index = 2 * (s[0] - '0') + (s[1] - '0');
        s.remove_prefix(2);
        if (!consume(s, kKetClose) && !consume(s, ">")) {
            throw ParseError("unterminated ket in '" + std::string(expression) + "'");
        }
        p[index][param] += sign;
    }
    if (p == Placement{}) {
        throw ParseError("empty state expression");
    }
    return p;
}

LinearOp parse_instruction(std::string_view instruction) {
    std::string_view s = instruction;
    skip_space(s);
    if (s == "do nothing") {
        return LinearOp(CMatrix::identity(4));
    }
    consume(s, "apply");
    CMatrix total = CMatrix::identity(4);
    bool any = false;
    while (true) {
        skip_space(s);
        if (consume(s, "⊗") || consume(s, "·") || consume(s, "*")) {
            continue;
        }
        if (s.empty()) {
            break;
        }
        CMatrix f;
        if (consume(s, "CNOT")) {
            f = cnot().matrix();
        } else if (consume(s, "I4") || consume(s, "I5")) {
            f = CMatrix::identity(4);
        } else if (consume(s, "(")) {
            CMatrix m = CMatrix::identity(2);
            bool letters = false;
            while (true) {
                skip_space(s);
                if (consume(s, ")")) {
                    break;
                }
                if (consume(s, "σx")) {
                    m = m * pauli_x().matrix();
                } else if (consume(s, "σz")) {
                    m = m * pauli_z().matrix();
                } else {
                    throw ParseError("unknown operator in '" + std::string(instruction) + "'");
                }
                letters = true;
            }
            if (!letters || s.empty() || (s.front() != '4' && s.front() != '5')) {
                throw ParseError("operator factor needs a particle label 4 or 5 in '" + std::string(instruction) + "'");
            }
            f = on_particle(m, s.front() - '0');
            s.remove_prefix(1);
        } else {
            throw ParseError("cannot parse instruction '" + std::string(instruction) + "'");
        }
        total = total * f;
        any = true;
    }
    if (!any) {
        throw ParseError("empty instruction");
    }
    return LinearOp(total);
}

std::optional<CorrectionOp> identify_correction(const LinearOp &op) {
    if (op.n_qubits() != 2) {
        return std::nullopt;
    }
    for (auto c : all_corrections()) {
        if (proportional(op.matrix(), realize(c).matrix(), 1e-12)) {
            return c;
        }
    }
    return std::nullopt;
}

GoldenTable parse_golden(std::string_view text) {
    try {
        auto j = ordered_json::parse(text);
        GoldenTable g{field(j, "id").get<std::string>(), ChannelSpec::parse(field(j, "channel").get<std::string>()),
                      class_named(field(j, "class").get<std::string>()),
                      {}};
        for (const auto &r : field(j, "rows")) {
            g.rows.push_back({field(r, "outcome").get<std::string>(), field(r, "state").get<std::string>(),
                              field(r, "instruction").get<std::string>(), r.value("ambiguous", false)});
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed golden table: ") + e.what());
    } catch (const InvalidChannel &e) {
        throw ParseError(e.what());
    }
}

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

GoldenTable load_golden(const std::filesystem::path &path) {
    return parse_golden(read_file(path));
}

std::vector<std::filesystem::path> golden_table_files(const std::filesystem::path &dir) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) {
        throw ParseError("golden data directory not found: " + dir.string());
    }
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        auto name = e.path().filename().string();
        if (e.is_regular_file() && name.starts_with("table_") && name.ends_with(".json")) {
            out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::string, std::vector<std::uint8_t>> load_channel_lists(const std::filesystem::path &path) {
    std::map<std::string, std::vector<std::uint8_t>> out;
    try {
        auto j = ordered_json::parse(read_file(path));
        for (const auto &[name, list] : field(j, "channel_lists").items()) {
            for (const auto &expr : list) {
                out[name].push_back(parse_support_expression(expr.get<std::string>()));
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed channel list file: ") + e.what());
    }
    return out;
}

std::map<std::string, int> load_summary_counts(const std::filesystem::path &path) {
    std::map<std::string, int> out;
    try {
        auto j = ordered_json::parse(read_file(path));
        for (const auto &[name, count] : field(j, "summary").items()) {
            out[name] = count.get<int>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed channel list file: ") + e.what());
    }
    return out;
}

MatchReport verify_against_golden(const InstructionTable &table, const GoldenTable &golden) {
    if (table.channel != golden.channel) {
        throw std::invalid_argument("golden table " + golden.id + " is for channel " + golden.channel.to_string() +
                                    ", not " + table.channel.to_string());
    }
    if (table.cls != golden.cls) {
        throw std::invalid_argument("golden table " + golden.id + " is for a different input class");
    }
    const int k = table.cls.free_params();
    const CMatrix target = table.cls.target();

    // Content match of a reference row against one generated row.
    auto content_matches = [&](const Placement &ref_state, const LinearOp &ref_op, const TableRow &gen,
                               std::string &why) {
        CMatrix gen_state = placement_matrix(gen.placement, k);
        if (!proportional(placement_matrix(ref_state, k), gen_state, 1e-12)) {
            why = "state differs from generated " + render_placement(gen.placement, table.cls);
            return false;
        }
        if (!proportional(ref_op.matrix() * gen_state, target, 1e-12)) {
            why = "instruction does not restore the input";
            return false;
        }
        return true;
    };

    MatchReport report;
    for (std::size_t r = 0; r < golden.rows.size(); r++) {
        const auto &g = golden.rows[r];
        RowCheck check{r, g.outcome, RowVerdict::kMismatch, ""};
        try {
            Placement ref_state = parse_state_expression(g.state, table.cls);
            LinearOp ref_op = parse_instruction(g.instruction);
            if (g.ambiguous) {
                std::string candidates;
                for (const auto &gen : table.rows) {
                    std::string why;
                    if (content_matches(ref_state, ref_op, gen, why)) {
                        candidates += (candidates.empty() ? "" : ", ") + outcome_label(gen.outcome);
                    }
                }
                check.verdict = candidates.empty() ? RowVerdict::kAmbiguousUnmatched : RowVerdict::kAmbiguousMatch;
                check.detail = candidates.empty() ? "no generated row has this content"
                                                  : "label unreliable; content matches " + candidates;
            } else {
                const TableRow *gen = nullptr;
                for (const auto &row : table.rows) {
                    if (outcome_label(row.outcome) == g.outcome) {
                        gen = &row;
                    }
                }
                if (!gen) {
                    check.detail = "unknown outcome label";
                } else if (content_matches(ref_state, ref_op, *gen, check.detail)) {
                    check.verdict = RowVerdict::kMatch;
                }
            }
        } catch (const ParseError &e) {
            check.detail = e.what();
        }
        switch (check.verdict) {
            case RowVerdict::kMatch:
                report.matches++;
                break;
            case RowVerdict::kAmbiguousMatch:
                report.ambiguous++;
                break;
            default:
                report.mismatches++;
        }
        report.rows.push_back(std::move(check));
    }
    if (golden.rows.size() != kNumOutcomes) {
        report.mismatches++;
        report.rows.push_back({golden.rows.size(), "", RowVerdict::kMismatch, "reference table does not have 8 rows"});
    }
    return report;
}

}  // namespace telechan
