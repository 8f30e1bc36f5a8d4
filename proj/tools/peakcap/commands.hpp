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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace peakcap::cli {

/// A subcommand: declares its flags, then runs once the config file is known.
class Command {
public:
    virtual ~Command() = default;
    virtual void attach(CLI::App& sub) = 0;
    /// Returns an ExitCode.
    virtual int run(const nlohmann::json& config) = 0;
};

struct NamedCommand {
    std::string name;
    std::string description;
    std::unique_ptr<Command> command;
};

std::vector<NamedCommand> make_commands();

} // namespace peakcap::cli
