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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "telechan/acceptance.h"
#include "telechan/classify.h"
#include "telechan/report.h"

namespace {

using namespace telechan;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string_view::npos ? "" : std::string(s.substr(b, e - b + 1));
}

double parse_number(std::string_view s, std::string_view whole) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("cannot parse amplitude '" + std::string(whole) + "'");
    }
    return v;
}

// "re", "re+imi", "re-imi", "imi".
cplx parse_complex(std::string_view token) {
    std::string t = trim(token);
    if (t.empty()) {
        throw UsageError("empty amplitude");
    }
    if (t.back() != 'i') {
        return parse_number(t.front() == '+' ? std::string_view(t).substr(1) : std::string_view(t), t);
    }
    std::string_view body = std::string_view(t).substr(0, t.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto signed_part = [&](std::string_view p) {
        if (p == "+" || p.empty()) {
            return 1.0;
        }
        if (p == "-") {
            return -1.0;
        }
        return parse_number(p.front() == '+' ? p.substr(1) : p, t);
    };
    if (split == std::string_view::npos) {
        return {0.0, signed_part(body)};
    }
    double re = signed_part(body.substr(0, split));
    return {re, signed_part(body.substr(split))};
}

PureState parse_input(const std::string &spec) {
    std::vector<cplx> slots;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        slots.push_back(parse_complex(token));
    }
    if (slots.size() != 4) {
        throw UsageError("--input needs four amplitudes (alpha, beta, delta, gamma)");
    }
    PureState s = two_qubit_state(slots[0], slots[1], slots[2], slots[3]);
    double n = s.norm();
    if (n == 0) {
        throw UsageError("--input is the zero vector");
    }
    if (std::abs(n - 1.0) > 1e-6) {
        std::cerr << "warning: input norm " << n << " differs from 1; normalizing\n";
    }
    return s.normalized();
}

ChannelSpec parse_channel(const std::string &spec) {
    try {
        return ChannelSpec::parse(spec);
    } catch (const InvalidChannel &e) {
        throw UsageError(e.what());
    }
}

InputClass parse_class(const std::string &name) {
    auto cls = InputClass::parse(name);
    if (!cls) {
        throw UsageError("unknown class '" + name +
                         "' (general, diag, anti-diag, left-col, right-col, top-row, bottom-row)");
    }
    return *cls;
}

Format parse_fmt(const std::string &name) {
    auto f = parse_format(name);
    if (!f) {
        throw UsageError("unknown format '" + name + "' (text, json)");
    }
    return *f;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    if (s == "-0.000000000000") {
        s = "0.000000000000";
    }
    return s;
}

std::string complex_text(cplx z) {
    std::string im = fixed(std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag());
    if (im.front() != '-') {
        im = "+" + im;
    }
    return fixed(std::abs(z.real()) < 5e-13 ? 0.0 : z.real()) + im + "i";
}

std::string simulate(const PureState &input, const ChannelSpec &channel, bool use_hadamard, Format format) {
    auto branches = run_protocol(input, channel, use_hadamard);
    if (format == Format::kJson) {
        nlohmann::ordered_json j;
        j["channel"] = channel.to_string();
        j["hadamard"] = use_hadamard;
        j["input"] = nlohmann::ordered_json::array();
        for (auto a : input.amplitudes()) {
            j["input"].push_back({a.real(), a.imag()});
        }
        j["branches"] = nlohmann::ordered_json::array();
        for (const auto &b : branches) {
            nlohmann::ordered_json bj;
            bj["bell"] = std::string(bell_name(b.outcome.bell));
            bj["canon"] = b.outcome.canon;
            bj["probability"] = b.probability;
            if (b.bob_state) {
                bj["bob_state"] = nlohmann::ordered_json::array();
                for (auto a : b.bob_state->amplitudes()) {
                    bj["bob_state"].push_back({a.real(), a.imag()});
                }
            } else {
                bj["bob_state"] = nullptr;
            }
            j["branches"].push_back(std::move(bj));
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "channel " << channel.to_string() << "  " << channel_expression(channel) << "\n";
    out << "hadamard on particle 1: " << (use_hadamard ? "yes" : "no") << "\n";
    out << "Bob amplitudes in order |00>, |01>, |10>, |11> (particle 4 first)\n";
    for (const auto &b : branches) {
        out << outcome_label(b.outcome) << "  p=" << fixed(b.probability) << "  ";
        if (!b.bob_state) {
            out << "impossible\n";
            continue;
        }
        for (std::size_t i = 0; i < 4; i++) {
            out << (i ? " " : "") << complex_text((*b.bob_state)[i]);
        }
        out << "\n";
    }
    return out.str();
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write " + path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Teleportation of two-particle states through one three-particle channel"};
    app.require_subcommand(1);

    std::string input_spec, channel_spec, class_name, format_name = "text", out_path;
    std::uint64_t seed = 42;
    std::size_t samples = 1000;
    double tolerance = 1e-10;
    bool no_hadamard = false;

    auto *sim = app.add_subcommand("simulate", "Run the protocol and print all eight branches");
    sim->add_option("--input", input_spec, "alpha,beta,delta,gamma as re or re+imi")->required();
    sim->add_option("--channel", channel_spec, "8-character code over {+,0,-} for a..h")->required();
    sim->add_flag("--no-hadamard", no_hadamard, "Skip the Hadamard on particle 1");

    auto *cls_cmd = app.add_subcommand("classify", "Scan all channels for one input class");
    cls_cmd->add_option("class,--class", class_name, "Input class");

    auto *emit = app.add_subcommand("emit-table", "Print the instruction table of one channel and class");
    emit->add_option("--channel", channel_spec, "8-character code over {+,0,-}")->required();
    emit->add_option("--class", class_name, "Input class")->required();

    auto *verify = app.add_subcommand("verify-paper", "Run every acceptance check");
    verify->add_option("--seed", seed, "Seed for all random draws");
    verify->add_option("--samples", samples, "Random bases in the general-basis scan")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tolerance", tolerance, "Fidelity tolerance")->check(CLI::PositiveNumber);

    for (auto *sub : {sim, cls_cmd, emit, verify}) {
        sub->add_option("--format", format_name, "text or json");
        sub->add_option("--out", out_path, "Write to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Format format = parse_fmt(format_name);
        if (*sim) {
            PureState input = parse_input(input_spec);
            write_output(simulate(input, parse_channel(channel_spec), !no_hadamard, format), out_path);
            return kExitOk;
        }
        if (*cls_cmd) {
            if (class_name.empty()) {
                throw UsageError("classify needs a class name");
            }
            write_output(emit_report(classify_all(parse_class(class_name)), format), out_path);
            return kExitOk;
        }
        if (*emit) {
            InputClass cls = parse_class(class_name);
            ChannelSpec channel = parse_channel(channel_spec);
            auto table = is_teleportable(cls, channel);
            if (!table) {
                std::cerr << "channel " << channel.to_string() << " does not teleport class " << cls.name() << "\n";
                return kExitVerify;
            }
            write_output(emit_table(*table, format), out_path);
            return kExitOk;
        }
        AcceptanceConfig config{seed, tolerance, samples, default_data_dir()};
        auto results = run_acceptance(config);
        bool ok = true;
        std::string text;
        if (format == Format::kJson) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto &r : results) {
                j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                ok &= r.passed;
            }
            text = j.dump(2) + "\n";
        } else {
            std::size_t passed = 0;
            for (const auto &r : results) {
                text += format_result(r) + "\n";
                ok &= r.passed;
                passed += r.passed;
            }
            text += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
        }
        write_output(text, out_path);
        return ok ? kExitOk : kExitVerify;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
