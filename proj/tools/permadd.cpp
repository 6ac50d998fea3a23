// Copyright 2026 The permadd Authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permadd/commands.hpp"

namespace {

permadd::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw permadd::InvalidArgument("cannot open " + path);
    try {
        return permadd::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw permadd::InvalidArgument(path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permute-and-add network codes from group algebra ideals"};
    app.require_subcommand(1);
    bool pretty = false;
    bool as_json = true;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--json", as_json, "emit JSON (default)");

    std::string group, support, network, code, messages;
    std::uint64_t q = 2;
    std::optional<std::uint64_t> seed;
    bool truncate = false;
    std::size_t big_n = 4, h = 2;

    auto* algebra = app.add_subcommand("algebra", "group algebra structure");
    algebra->require_subcommand(1);
    auto* decompose = algebra->add_subcommand("decompose", "spectral components of GF(q)[G]");
    decompose->add_option("--group", group, "group, e.g. C15 or C3xC3")->required();
    decompose->add_option("--q", q, "field order")->required();

    auto* code_cmd = app.add_subcommand("code", "group codes");
    code_cmd->require_subcommand(1);
    auto* analyze = code_cmd->add_subcommand("analyze", "rate, annihilator and degree of an ideal");
    analyze->add_option("--group", group)->required();
    analyze->add_option("--q", q)->required();
    analyze->add_option("--support", support, "component indices, e.g. 2,3,4")->required();

    auto* table1 = app.add_subcommand("table1", "rate/degree/sinks comparison table");

    auto* solve = app.add_subcommand("solve", "construct and lift a multicast solution");
    solve->add_option("--network", network)->required()->check(CLI::ExistingFile);
    solve->add_option("--group", group)->required();
    solve->add_option("--q", q)->required();
    solve->add_option("--support", support)->required();
    solve->add_flag("--truncate", truncate, "drop the parity coordinate on edges");

    auto* verify = app.add_subcommand("verify", "check a network code");
    verify->add_option("--network", network)->required()->check(CLI::ExistingFile);
    verify->add_option("--code", code)->required()->check(CLI::ExistingFile);

    auto* run = app.add_subcommand("run", "execute a network code");
    run->add_option("--network", network)->required()->check(CLI::ExistingFile);
    run->add_option("--code", code)->required()->check(CLI::ExistingFile);
    auto* msg_opt = run->add_option("--messages", messages, "JSON file {message id: coefficients}")->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "draw random messages")->excludes(msg_opt);

    auto* gen = app.add_subcommand("gen", "network generators");
    gen->require_subcommand(1);
    auto* butterfly = gen->add_subcommand("butterfly", "two-sink butterfly");
    auto* combination = gen->add_subcommand("combination", "combination network C(N, h)");
    combination->set_help_flag("--help", "Print this help message and exit");
    combination->add_option("--N", big_n)->required();
    combination->add_option("--h", h)->required();

    for (auto* sub : {algebra, decompose, code_cmd, analyze, table1, solve, verify, run, gen, butterfly, combination}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        permadd::json out;
        int rc = 0;
        if (decompose->parsed()) {
            out = permadd::cmd_decompose(group, q);
        } else if (analyze->parsed()) {
            out = permadd::cmd_analyze(group, q, permadd::parse_support(support));
        } else if (table1->parsed()) {
            out = permadd::cmd_table1();
        } else if (solve->parsed()) {
            out = permadd::cmd_solve(read_json(network), group, q, permadd::parse_support(support), truncate);
            rc = out["result"]["verified"].get<bool>() ? 0 : 1;
        } else if (verify->parsed()) {
            out = permadd::cmd_verify(read_json(network), read_json(code));
            rc = out["result"]["verified"].get<bool>() ? 0 : 1;
        } else if (run->parsed()) {
            std::optional<permadd::json> msgs;
            if (!messages.empty()) msgs = read_json(messages);
            out = permadd::cmd_run(read_json(network), read_json(code), msgs, seed);
        } else if (butterfly->parsed()) {
            out = permadd::cmd_gen_butterfly();
        } else if (combination->parsed()) {
            out = permadd::cmd_gen_combination(big_n, h);
        }
        std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
        return rc;
    } catch (const permadd::GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const permadd::ConstructionFailure& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 1;
    } catch (const permadd::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permadd::ContextMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
