// SPDX-License-Identifier: Apache-2.0
//
// peakcap: capacity and energy-per-bit toolkit for the peak-power limited
// two-user Gaussian multiple-access channel
// Copyright (C) 2026 The peakcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
    using namespace peakcap::cli;

    CLI::App app{"Peak-power-limited Gaussian MAC: capacity regions, input optimization and wideband limits"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("-c,--config", config_path, "JSON config; flags override its values");

    std::vector<NamedCommand> commands = make_commands();
    for (auto& c : commands) {
        c.command->attach(*app.add_subcommand(c.name, c.description));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const nlohmann::json config = load_config(config_path);
        for (auto& c : commands) {
            if (app.got_subcommand(c.name)) {
                return c.command->run(config);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
