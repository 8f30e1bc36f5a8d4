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

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace peakcap::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kPartial = 2, kVerifyFailed = 3 };

/// Bad configuration: unknown key, wrong type, missing value, bad range.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loads a JSON object from `path`; an empty path yields an empty object.
nlohmann::json load_config(const std::string& path);

/// One subcommand's section of the config file, plus the options that may
/// fill fields from it. A field keeps its flag value when the flag was given,
/// otherwise takes the section value if present, otherwise its default.
class Section {
public:
    Section(const nlohmann::json& root, std::string name);

    template <class T>
    void fill(T& field, const CLI::Option* flag, const std::string& key) {
        known_.push_back(key);
        if (flag != nullptr && flag->count() > 0) {
            return;
        }
        if (!body_.contains(key)) {
            return;
        }
        try {
            field = body_.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("config: '" + name_ + "." + key + "' has the wrong type");
        }
    }

    template <class T>
    void fill(std::optional<T>& field, const CLI::Option* flag, const std::string& key) {
        T value = field.value_or(T{});
        const bool present = field.has_value() || body_.contains(key);
        fill(value, flag, key);
        if (present) {
            field = value;
        }
    }

    /// Throws ConfigError on keys that no fill() call asked for.
    void reject_unknown() const;

private:
    nlohmann::json body_;
    std::string name_;
    std::vector<std::string> known_;
};

/// Worker count from PEAKCAP_THREADS, else the hardware concurrency.
std::size_t thread_count();

/// Calls fn(i) for i in [0, n) on up to thread_count() workers. Every index
/// runs; the first exception by index order is rethrown afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace peakcap::cli
