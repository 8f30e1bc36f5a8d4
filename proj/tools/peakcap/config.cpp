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

#include "config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace peakcap::cli {

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) {
        return nlohmann::json::object();
    }
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config: top level of '" + path + "' must be an object");
    }
    return j;
}

Section::Section(const nlohmann::json& root, std::string name) : body_(nlohmann::json::object()), name_(std::move(name)) {
    if (root.contains(name_)) {
        body_ = root.at(name_);
        if (!body_.is_object()) {
            throw ConfigError("config: section '" + name_ + "' must be an object");
        }
    }
}

void Section::reject_unknown() const {
    for (const auto& [key, value] : body_.items()) {
        if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
            throw ConfigError("config: unknown key '" + name_ + "." + key + "'");
        }
    }
}

std::size_t thread_count() {
    if (const char* env = std::getenv("PEAKCAP_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) {
            throw ConfigError("PEAKCAP_THREADS must be a positive integer, got '" + std::string(env) + "'");
        }
        return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min(n, thread_count());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace peakcap::cli
