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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "peakcap/ba.hpp"
#include "peakcap/channel.hpp"
#include "peakcap/distributions.hpp"
#include "peakcap/errors.hpp"
#include "peakcap/regions.hpp"
#include "peakcap/serialization.hpp"
#include "peakcap/verify.hpp"
#include "peakcap/wideband.hpp"

namespace peakcap::cli {
namespace {

const std::map<std::string, BaInit> kInits{
    {"random", BaInit::random}, {"uniform", BaInit::uniform}, {"antipodal", BaInit::antipodal}};

const std::map<std::string, DomainMode> kModes{{"strict", DomainMode::strict}, {"permissive", DomainMode::permissive}};

template <class T>
T lookup(const std::map<std::string, T>& table, const std::string& key, const char* field) {
    const auto it = table.find(key);
    if (it == table.end()) {
        std::string names;
        for (const auto& [name, value] : table) {
            names += (names.empty() ? "" : ", ") + name;
        }
        throw ConfigError(std::string(field) + ": '" + key + "' is not one of " + names);
    }
    return it->second;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    return out;
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out = open_output(path);
    out << j.dump(2) << '\n';
}

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string describe_support(const DiscreteDistribution& d, double floor) {
    const DiscreteDistribution p = prune(d, floor);
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i == 0 ? "" : " ") + fixed(p.points()[i], 3) + ":" + fixed(p.probs()[i], 4);
    }
    return s;
}

// Quadrature node count, shared by every subcommand.
struct QuadratureOption {
    int nodes = 64;
    CLI::Option* flag = nullptr;

    void attach(CLI::App& sub) {
        flag = sub.add_option("--nodes", nodes, "Gauss-Hermite node count")->capture_default_str();
    }
    QuadratureSpec apply(Section& section) {
        section.fill(nodes, flag, "nodes");
        QuadratureSpec spec = QuadratureSpec::hermite(nodes);
        try {
            spec.validate();
        } catch (const std::exception&) {
            throw ConfigError("nodes: must be >= 2");
        }
        return spec;
    }
};

// The BaConfig fields other than sigma.
struct BaOptions {
    BaConfig config;
    std::string init = "random";
    std::map<std::string, CLI::Option*> flags;

    void attach(CLI::App& sub) {
        flags["k1"] = sub.add_option("--k1", config.k1, "grid size, user 1")->capture_default_str();
        flags["k2"] = sub.add_option("--k2", config.k2, "grid size, user 2")->capture_default_str();
        flags["rho1"] = sub.add_option("--rho1", config.rho1, "peak power, user 1")->capture_default_str();
        flags["rho2"] = sub.add_option("--rho2", config.rho2, "peak power, user 2")->capture_default_str();
        flags["epsilon"] =
            sub.add_option("--epsilon", config.epsilon, "stop when I changes by less (nats)")->capture_default_str();
        flags["max_iters"] = sub.add_option("--max-iters", config.max_iters, "iteration cap")->capture_default_str();
        flags["seed"] = sub.add_option("--seed", config.seed, "seed for random starts")->capture_default_str();
        flags["init"] = sub.add_option("--init", init, "random, uniform or antipodal")->capture_default_str();
    }
    void apply(Section& s) {
        s.fill(config.k1, flags["k1"], "k1");
        s.fill(config.k2, flags["k2"], "k2");
        s.fill(config.rho1, flags["rho1"], "rho1");
        s.fill(config.rho2, flags["rho2"], "rho2");
        s.fill(config.epsilon, flags["epsilon"], "epsilon");
        s.fill(config.max_iters, flags["max_iters"], "max_iters");
        s.fill(config.seed, flags["seed"], "seed");
        s.fill(init, flags["init"], "init");
        config.init = lookup(kInits, init, "init");
    }
};

void validate_ba(const BaConfig& c) {
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

class OptimizeCommand final : public Command {
public:
    void attach(CLI::App& sub) override {
        ba_.attach(sub);
        sigma_flag_ = sub.add_option("--sigma", sigma_, "noise standard deviation (required)");
        out_flag_ = sub.add_option("--out", out_, "BaResult JSON path")->capture_default_str();
        trace_flag_ = sub.add_option("--trace", trace_, "trace CSV path")->capture_default_str();
        prune_flag_ = sub.add_option("--prune", prune_, "mass floor for the printed supports")->capture_default_str();
        quad_.attach(sub);
    }

    int run(const nlohmann::json& config) override {
        Section s(config, "optimize");
        ba_.apply(s);
        s.fill(sigma_, sigma_flag_, "sigma");
        s.fill(out_, out_flag_, "out");
        s.fill(trace_, trace_flag_, "trace");
        s.fill(prune_, prune_flag_, "prune");
        const QuadratureSpec spec = quad_.apply(s);
        s.reject_unknown();
        if (!sigma_) {
            throw ConfigError("optimize: missing required parameter 'sigma'");
        }
        ba_.config.sigma = *sigma_;
        validate_ba(ba_.config);

        const BaResult r = run_ba(ba_.config, spec);
        write_json(out_, to_json(r));
        std::ofstream trace = open_output(trace_);
        write_trace_csv(trace, r);

        std::cout << "I(X1, X2; Y) = " << fixed(r.achieved_mi, 9) << " nats (" << fixed(r.achieved_mi / std::log(2.0), 9)
                  << " bits)\n"
                  << "iterations " << r.iterations << (r.converged ? ", converged" : ", not converged") << '\n'
                  << "user 1: " << describe_support(r.dist1, prune_) << '\n'
                  << "user 2: " << describe_support(r.dist2, prune_) << '\n';
        if (!r.converged) {
            std::cerr << "optimize: no convergence within " << ba_.config.max_iters << " iterations\n";
            return kPartial;
        }
        return kOk;
    }

private:
    BaOptions ba_;
    QuadratureOption quad_;
    std::optional<double> sigma_;
    std::string out_ = "ba_result.json";
    std::string trace_ = "trace.csv";
    double prune_ = 1e-6;
    CLI::Option* sigma_flag_ = nullptr;
    CLI::Option* out_flag_ = nullptr;
    CLI::Option* trace_flag_ = nullptr;
    CLI::Option* prune_flag_ = nullptr;
};

struct SweepOutcome {
    std::optional<BaResult> result;
    std::string error;
};

void write_distribution_rows(std::ostream& os, double sigma, const BaResult& r) {
    for (int user = 1; user <= 2; ++user) {
        const DiscreteDistribution& d = user == 1 ? r.dist1 : r.dist2;
        for (std::size_t i = 0; i < d.size(); ++i) {
            os << format_double(sigma) << ',' << user << ',' << format_double(d.points()[i]) << ','
               << format_double(d.probs()[i]) << '\n';
        }
    }
}

class SweepSigmaCommand final : public Command {
public:
    void attach(CLI::App& sub) override {
        ba_.attach(sub);
        sigmas_flag_ = sub.add_option("--sigmas", sigmas_, "strictly decreasing noise levels")->capture_default_str();
        out_flag_ = sub.add_option("--out", out_, "CSV sigma,user,point,prob")->capture_default_str();
        mi_flag_ = sub.add_option("--mi-out", mi_out_, "CSV sigma,mi_ba,mi_antipodal,mi_uniform")->capture_default_str();
        rho2_prefix_flag_ = sub.add_option("--rho2-sweep-prefix", rho2_prefix_,
                                           "also run sigma=0.2, rho1=1, sqrt(rho2) in {2, 4, 100}; writes <prefix><sqrt rho2>.csv");
        quad_.attach(sub);
    }

    int run(const nlohmann::json& config) override {
        Section s(config, "sweep_sigma");
        ba_.apply(s);
        s.fill(sigmas_, sigmas_flag_, "sigmas");
        s.fill(out_, out_flag_, "out");
        s.fill(mi_out_, mi_flag_, "mi_out");
        s.fill(rho2_prefix_, rho2_prefix_flag_, "rho2_sweep_prefix");
        const QuadratureSpec spec = quad_.apply(s);
        s.reject_unknown();
        if (sigmas_.empty()) {
            throw ConfigError("sigmas: grid is empty");
        }
        for (std::size_t i = 0; i < sigmas_.size(); ++i) {
            if (!(sigmas_[i] > 0.0) || (i > 0 && !(sigmas_[i] < sigmas_[i - 1]))) {
                throw ConfigError("sigmas: values must be positive and strictly decreasing");
            }
        }
        BaConfig probe = ba_.config;
        probe.sigma = sigmas_.front();
        validate_ba(probe);

        std::vector<SweepOutcome> runs(sigmas_.size());
        parallel_for(sigmas_.size(), [&](std::size_t i) {
            BaConfig c = ba_.config;
            c.sigma = sigmas_[i];
            try {
                runs[i].result = run_ba(c, spec);
            } catch (const std::exception& e) {
                runs[i].error = e.what();
            }
        });

        bool partial = false;
        std::ofstream dist = open_output(out_);
        std::ofstream mi = open_output(mi_out_);
        dist << "sigma,user,point,prob\n";
        mi << "sigma,mi_ba,mi_antipodal,mi_uniform\n";
        const DiscreteDistribution a1 = antipodal(ba_.config.rho1);
        const DiscreteDistribution a2 = antipodal(ba_.config.rho2);
        const DiscreteDistribution u1 = uniform_grid(ba_.config.k1, ba_.config.rho1);
        const DiscreteDistribution u2 = uniform_grid(ba_.config.k2, ba_.config.rho2);
        for (std::size_t i = 0; i < sigmas_.size(); ++i) {
            const double sigma = sigmas_[i];
            if (!runs[i].result) {
                std::cerr << "sweep-sigma: sigma=" << format_double(sigma) << " skipped: " << runs[i].error << '\n';
                partial = true;
                continue;
            }
            const BaResult& r = *runs[i].result;
            write_distribution_rows(dist, sigma, r);
            const double anti = mutual_information_joint(a1, a2, sigma, spec);
            const double uni = mutual_information_joint(u1, u2, sigma, spec);
            mi << format_double(sigma) << ',' << format_double(r.achieved_mi) << ',' << format_double(anti) << ','
               << format_double(uni) << '\n';
            std::cout << "sigma=" << format_double(sigma) << "  I=" << fixed(r.achieved_mi, 6) << "  support(>=1e-4) "
                      << prune(r.dist1, 1e-4).size() << '/' << prune(r.dist2, 1e-4).size()
                      << (r.converged ? "" : "  (not converged)") << '\n';
            if (!r.converged) {
                partial = true;
            }
            if (r.achieved_mi < std::max(anti, uni) - 1e-6) {
                std::cerr << "sweep-sigma: sigma=" << format_double(sigma) << ": BA value " << r.achieved_mi
                          << " is below a fixed input law (" << std::max(anti, uni) << ")\n";
                partial = true;
            }
        }
        if (!rho2_prefix_.empty()) {
            partial = run_rho2_sweep(spec) || partial;
        }
        return partial ? kPartial : kOk;
    }

private:
    // Returns true when any case failed or did not converge.
    bool run_rho2_sweep(const QuadratureSpec& spec) {
        const std::vector<double> roots{2.0, 4.0, 100.0};
        std::vector<SweepOutcome> runs(roots.size());
        parallel_for(roots.size(), [&](std::size_t i) {
            BaConfig c = ba_.config;
            c.rho1 = 1.0;
            c.rho2 = roots[i] * roots[i];
            c.sigma = 0.2;
            try {
                runs[i].result = run_ba(c, spec);
            } catch (const std::exception& e) {
                runs[i].error = e.what();
            }
        });
        bool partial = false;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (!runs[i].result) {
                std::cerr << "sweep-sigma: sqrt(rho2)=" << roots[i] << " skipped: " << runs[i].error << '\n';
                partial = true;
                continue;
            }
            const BaResult& r = *runs[i].result;
            std::ofstream out = open_output(rho2_prefix_ + format_double(roots[i]) + ".csv");
            out << "sigma,user,point,prob\n";
            write_distribution_rows(out, 0.2, r);
            std::cout << "sqrt(rho2)=" << format_double(roots[i]) << "  I=" << fixed(r.achieved_mi, 6)
                      << "  user 2 max mass " << fixed(r.dist2.max_prob(), 4) << " (3/K = "
                      << fixed(3.0 / static_cast<double>(r.dist2.size()), 4) << ")\n";
            partial = partial || !r.converged;
        }
        return partial;
    }

    BaOptions ba_;
    QuadratureOption quad_;
    std::vector<double> sigmas_{1.0, 0.5, 0.34, 0.3};
    std::string out_ = "sweep.csv";
    std::string mi_out_ = "sweep_mi.csv";
    std::string rho2_prefix_;
    CLI::Option* sigmas_flag_ = nullptr;
    CLI::Option* out_flag_ = nullptr;
    CLI::Option* mi_flag_ = nullptr;
    CLI::Option* rho2_prefix_flag_ = nullptr;
};

class RegionCommand final : public Command {
public:
    void attach(CLI::App& sub) override {
        flags_["snr1"] = sub.add_option("--snr1", snr1_, "peak SNR, user 1")->capture_default_str();
        flags_["snr2"] = sub.add_option("--snr2", snr2_, "peak SNR, user 2")->capture_default_str();
        flags_["alpha_points"] =
            sub.add_option("--alpha-points", alpha_points_, "alpha grid size on [0, 1]")->capture_default_str();
        flags_["mode"] = sub.add_option("--mode", mode_, "strict or permissive")->capture_default_str();
        flags_["out"] = sub.add_option("--out", out_, "CSV alpha,r1,r2,kind,units")->capture_default_str();
        flags_["sum_out"] =
            sub.add_option("--sum-out", sum_out_, "CSV rho1,rho2,sum_antipodal,sum_gaussian")->capture_default_str();
        flags_["rho2"] = sub.add_option("--rho2", rho2_, "rho2 values for the sum-rate sweep")->capture_default_str();
        flags_["rho1_max"] = sub.add_option("--rho1-max", rho1_max_, "sum-rate sweep upper end")->capture_default_str();
        flags_["rho1_step"] = sub.add_option("--rho1-step", rho1_step_, "sum-rate sweep step")->capture_default_str();
        quad_.attach(sub);
    }

    int run(const nlohmann::json& config) override {
        Section s(config, "region");
        s.fill(snr1_, flags_["snr1"], "snr1");
        s.fill(snr2_, flags_["snr2"], "snr2");
        s.fill(alpha_points_, flags_["alpha_points"], "alpha_points");
        s.fill(mode_, flags_["mode"], "mode");
        s.fill(out_, flags_["out"], "out");
        s.fill(sum_out_, flags_["sum_out"], "sum_out");
        s.fill(rho2_, flags_["rho2"], "rho2");
        s.fill(rho1_max_, flags_["rho1_max"], "rho1_max");
        s.fill(rho1_step_, flags_["rho1_step"], "rho1_step");
        const QuadratureSpec spec = quad_.apply(s);
        s.reject_unknown();
        const DomainMode mode = lookup(kModes, mode_, "mode");
        if (alpha_points_ < 1) {
            throw ConfigError("alpha_points: must be >= 1");
        }
        if (!(rho1_step_ > 0.0) || !(rho1_max_ >= rho1_step_)) {
            throw ConfigError("rho1_step: must be positive and no larger than rho1_max");
        }

        const std::vector<double> alphas = alpha_grid(alpha_points_);
        std::vector<RegionSample> samples(3);
        parallel_for(3, [&](std::size_t k) {
            if (k == 0) {
                samples[0] = successive_region(snr1_, snr2_, alphas, mode, spec);
            } else if (k == 1) {
                samples[1] = tdma_region(snr1_, snr2_, alphas, mode, spec);
            } else {
                samples[2] = gaussian_baseline_region(snr1_, snr2_, alphas);
            }
        });
        std::ofstream out = open_output(out_);
        write_region_csv(out, samples);

        const auto steps = static_cast<std::size_t>(std::floor(rho1_max_ / rho1_step_ + 1e-9));
        std::vector<std::vector<std::pair<double, double>>> sweep(rho2_.size());
        parallel_for(rho2_.size(), [&](std::size_t j) {
            for (std::size_t i = 1; i <= steps; ++i) {
                const double rho1 = static_cast<double>(i) * rho1_step_;
                sweep[j].emplace_back(sum_rate_antipodal(rho1, rho2_[j], mode, spec), gaussian_sum_rate(rho1, rho2_[j]));
            }
        });
        std::ofstream sum = open_output(sum_out_);
        sum << "rho1,rho2,sum_antipodal,sum_gaussian\n";
        std::size_t above = 0;
        for (std::size_t j = 0; j < rho2_.size(); ++j) {
            for (std::size_t i = 1; i <= steps; ++i) {
                const auto [anti, gauss] = sweep[j][i - 1];
                above += anti > gauss ? 1 : 0;
                sum << format_double(static_cast<double>(i) * rho1_step_) << ',' << format_double(rho2_[j]) << ','
                    << format_double(anti) << ',' << format_double(gauss) << '\n';
            }
        }
        std::cout << "region: " << alphas.size() << " alpha values per kind written to " << out_ << '\n'
                  << "sum-rate sweep: " << steps * rho2_.size() << " points, antipodal above Gaussian at " << above
                  << '\n';
        return kOk;
    }

private:
    QuadratureOption quad_;
    std::map<std::string, CLI::Option*> flags_;
    double snr1_ = 0.6;
    double snr2_ = 0.4;
    int alpha_points_ = 101;
    std::string mode_ = "strict";
    std::string out_ = "region.csv";
    std::string sum_out_ = "region_sum.csv";
    std::vector<double> rho2_{0.2, 0.5, 1.0};
    double rho1_max_ = 1.1;
    double rho1_step_ = 0.01;
};

class WidebandCommand final : public Command {
public:
    void attach(CLI::App& sub) override {
        alphas_flag_ = sub.add_option("--alphas", request_.alphas, "time-sharing values")->capture_default_str();
        thetas_flag_ = sub.add_option("--thetas", request_.thetas, "SNR ratios snr1 / snr2")->capture_default_str();
        out_flag_ = sub.add_option("--out", out_, "WidebandReport JSON path")->capture_default_str();
        table_flag_ = sub.add_option("--table-out", table_out_, "CSV snr,estimate")->capture_default_str();
        quad_.attach(sub);
    }

    int run(const nlohmann::json& config) override {
        Section s(config, "wideband");
        s.fill(request_.alphas, alphas_flag_, "alphas");
        s.fill(request_.thetas, thetas_flag_, "thetas");
        s.fill(out_, out_flag_, "out");
        s.fill(table_out_, table_flag_, "table_out");
        const QuadratureSpec spec = quad_.apply(s);
        s.reject_unknown();

        WidebandReport r;
        try {
            r = wideband_report(request_, spec);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        write_json(out_, to_json(r));
        std::ofstream table = open_output(table_out_);
        write_convergence_csv(table, r.convergence_table);

        std::cout << "Eb/N0 min       " << fixed(r.eb_n0_min_db, 4) << " dB (per-use rate: "
                  << fixed(r.eb_n0_per_use_db, 4) << " dB)\n"
                  << "slope S0        " << fixed(r.slope_s0, 6) << '\n';
        for (const auto& p : r.energy_points) {
            std::cout << "alpha=" << format_double(p.alpha) << " theta=" << format_double(p.theta) << "  Eb/N0 ("
                      << fixed(p.db.first, 4) << ", " << fixed(p.db.second, 4) << ") dB\n";
        }
        for (const auto& p : r.slope_points) {
            std::cout << "alpha=" << format_double(p.alpha) << " theta=" << format_double(p.theta)
                      << "  slopes successive (" << fixed(p.successive.first, 4) << ", "
                      << fixed(p.successive.second, 4) << ") tdma (" << fixed(p.tdma.first, 4) << ", "
                      << fixed(p.tdma.second, 4) << ")\n";
        }
        for (const auto& g : r.tdma_gaps) {
            std::cout << "alpha=" << format_double(g.alpha) << "  TDMA gap (" << fixed(g.db.first, 4) << ", "
                      << fixed(g.db.second, 4) << ") dB\n";
        }
        return kOk;
    }

private:
    QuadratureOption quad_;
    WidebandRequest request_;
    std::string out_ = "wideband.json";
    std::string table_out_ = "convergence.csv";
    CLI::Option* alphas_flag_ = nullptr;
    CLI::Option* thetas_flag_ = nullptr;
    CLI::Option* out_flag_ = nullptr;
    CLI::Option* table_flag_ = nullptr;
};

class VerifyCommand final : public Command {
public:
    void attach(CLI::App& sub) override {
        only_flag_ = sub.add_option("--only", only_, "check ids or module names (c1 ... c11, numerics, ba, ...)");
        quad_.attach(sub);
    }

    int run(const nlohmann::json& config) override {
        Section s(config, "verify");
        s.fill(only_, only_flag_, "only");
        const QuadratureSpec spec = quad_.apply(s);
        s.reject_unknown();

        const std::vector<const verify::Check*> checks = verify::select(only_);
        if (checks.empty()) {
            throw ConfigError("only: no check matches");
        }
        std::vector<verify::CheckResult> results(checks.size());
        parallel_for(checks.size(), [&](std::size_t i) { results[i] = verify::run_check(*checks[i], spec); });

        std::string failed;
        for (const auto& r : results) {
            std::cout << verify::format_line(r) << '\n';
            if (!r.passed) {
                failed += (failed.empty() ? "" : ", ") + r.id;
            }
        }
        if (!failed.empty()) {
            std::cout << "verification failed: " << failed << '\n';
            return kVerifyFailed;
        }
        std::cout << "all " << results.size() << " checks passed\n";
        return kOk;
    }

private:
    QuadratureOption quad_;
    std::vector<std::string> only_;
    CLI::Option* only_flag_ = nullptr;
};

} // namespace

std::vector<NamedCommand> make_commands() {
    std::vector<NamedCommand> out;
    out.push_back({"optimize", "Blahut-Arimoto optimization of both input laws", std::make_unique<OptimizeCommand>()});
    out.push_back({"sweep-sigma", "optimize over a grid of noise levels", std::make_unique<SweepSigmaCommand>()});
    out.push_back({"region", "achievable regions and the sum-rate sweep", std::make_unique<RegionCommand>()});
    out.push_back({"wideband", "energy per bit, slopes and TDMA gaps", std::make_unique<WidebandCommand>()});
    out.push_back({"verify", "run the invariant and acceptance checks", std::make_unique<VerifyCommand>()});
    return out;
}

} // namespace peakcap::cli
