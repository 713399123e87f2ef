// Copyright 2026 The thermosim Authors
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thermosim/errors.h"
#include "thermosim/tempop.h"

using namespace thermosim;
using namespace thermosim::cli;
using json = nlohmann::ordered_json;

namespace {

/// Value that serializes as its 9-significant-digit form.
double rounded(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

double require_number(const nlohmann::json &doc, const char *key) {
    const auto &v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string("Field '") + key + "' must be a number.");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ConfigError(std::string("Field '") + key + "' must be finite.");
    }
    return d;
}

std::array<double, 2> require_pair(const nlohmann::json &doc, const char *key) {
    const auto &v = doc.at(key);
    if (!v.is_array() || v.size() != 2) {
        throw ConfigError(std::string("Field '") + key + "' must be an array of two numbers.");
    }
    std::array<double, 2> out{};
    for (size_t k = 0; k < 2; k++) {
        if (!v[k].is_number() || !std::isfinite(v[k].get<double>())) {
            throw ConfigError(std::string("Field '") + key + "' must contain finite numbers.");
        }
        out[k] = v[k].get<double>();
    }
    return out;
}

json report_to_json(const EigenReport &r) {
    json j;
    j["rayleigh"] = rounded(r.rayleigh);
    j["residual"] = rounded(r.residual);
    if (r.expected_deviation) {
        j["expected_deviation"] = rounded(*r.expected_deviation);
    }
    return j;
}

/// Largest of residual and deviation from the expected eigenvalue.
double worst_error(const EigenReport &r) {
    return std::max(r.residual, r.expected_deviation.value_or(0));
}

int cmd_protocol(const std::string &config_path, std::optional<uint64_t> samples, uint64_t seed, std::ostream &out) {
    RunConfig rc = load_run_config(config_path);
    ProtocolConfig cfg = rc.to_protocol();

    json doc;
    doc["config"] = {
        {"beta_a", rc.beta_a},
        {"beta_b", rc.beta_b},
        {"energies_a", rc.energies_a},
        {"energies_b", rc.energies_b},
        {"phi", rc.phi},
    };
    json outcomes = json::object();
    for (auto o : ALL_BELL_OUTCOMES) {
        outcomes[std::string(outcome_name(o))] = rounded(post_select(cfg, o).probability);
    }
    doc["outcome_probabilities"] = outcomes;
    doc["success_probability"] = {
        {"phi_branch", rounded(success_probability(cfg, Branch::Phi))},
        {"psi_branch", rounded(success_probability(cfg, Branch::Psi))},
    };
    json amps = json::array();
    StateVector s = post_select(cfg, BellOutcome::PhiPlus).state;
    const char *labels[] = {"00", "01", "10", "11"};
    for (size_t k = 0; k < 4; k++) {
        amps.push_back({{"basis", labels[k]}, {"re", rounded(s[k].real())}, {"im", rounded(s[k].imag())}});
    }
    doc["phi_plus_state"] = amps;
    if (samples) {
        OutcomeCounts counts = sample_outcomes(cfg, *samples, seed);
        json c = json::object();
        for (auto o : ALL_BELL_OUTCOMES) {
            c[std::string(outcome_name(o))] = counts[o];
        }
        doc["samples"] = {{"n", *samples}, {"seed", seed}, {"counts", c}};
    }
    out << doc.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_interference(
    const std::string &config_path,
    size_t phi_steps,
    const std::string &out_path,
    std::optional<Convention> convention,
    std::ostream &out,
    std::ostream &err) {
    if (phi_steps < 2) {
        throw ConfigError("--phi-steps must be at least 2.");
    }
    ProtocolConfig cfg = load_run_config(config_path).to_protocol();
    SweepSpec spec{
        .cfg = cfg,
        .phi_points = linspace(0, 2 * std::numbers::pi, phi_steps),
        .beta_b_axis = std::nullopt,
    };
    std::string csv = interference_csv(sweep(spec, convention));

    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return EXIT_CONFIG;
    }
    f << csv;
    f.close();
    if (!f) {
        err << "error: failed writing '" << out_path << "'\n";
        return EXIT_CONFIG;
    }

    json doc;
    doc["out"] = out_path;
    doc["rows"] = phi_steps;
    doc["method"] = convention ? std::string(convention_name(*convention)) : std::string("circuit");
    out << doc.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_eigencheck(
    size_t dim,
    double beta,
    std::optional<double> fd_step,
    std::optional<double> assert_tol,
    std::ostream &out,
    std::ostream &err) {
    if (dim < 2) {
        throw ConfigError("--dim must be at least 2.");
    }
    std::vector<double> energies = eigencheck_energies(dim);
    ThermalSpec spec(beta, QuditHamiltonian(energies));

    EigenReport analytic = eigencheck_purified(spec, DerivativeMode::analytic());
    std::optional<EigenReport> fd;
    if (fd_step) {
        fd = eigencheck_purified(spec, DerivativeMode::finite_difference(*fd_step));
    }

    json doc;
    doc["dim"] = dim;
    doc["beta"] = beta;
    json e = json::array();
    for (double x : energies) {
        e.push_back(rounded(x));
    }
    doc["energies"] = e;
    doc["expected"] = rounded(*analytic.expected);
    doc["analytic"] = report_to_json(analytic);
    if (fd) {
        json j = report_to_json(*fd);
        j["step"] = *fd_step;
        doc["finite_difference"] = j;
    }

    int code = EXIT_OK;
    if (assert_tol) {
        double worst = worst_error(analytic);
        if (fd) {
            worst = std::max(worst, worst_error(*fd));
        }
        bool ok = worst <= *assert_tol;
        doc["assert"] = {{"tolerance", *assert_tol}, {"worst_error", rounded(worst)}, {"passed", ok}};
        if (!ok) {
            err << "error: eigen residual " << format_number(worst) << " exceeds tolerance "
                << format_number(*assert_tol) << "\n";
            code = EXIT_ASSERTION;
        }
    }
    out << doc.dump(2) << "\n";
    return code;
}

}  // namespace

ProtocolConfig RunConfig::to_protocol() const {
    return ProtocolConfig(
        ThermalSpec(beta_a, QuditHamiltonian({energies_a[0], energies_a[1]})),
        ThermalSpec(beta_b, QuditHamiltonian({energies_b[0], energies_b[1]})),
        phi);
}

RunConfig cli::parse_run_config(const std::string &json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("Config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("Config must be a JSON object.");
    }
    static const std::set<std::string> known = {"beta_a", "beta_b", "energies_a", "energies_b", "phi"};
    for (const auto &[key, value] : doc.items()) {
        if (!known.contains(key)) {
            throw ConfigError("Unknown config field '" + key + "'.");
        }
    }
    for (const auto &key : known) {
        if (!doc.contains(key)) {
            throw ConfigError("Missing config field '" + key + "'.");
        }
    }
    return RunConfig{
        .beta_a = require_number(doc, "beta_a"),
        .beta_b = require_number(doc, "beta_b"),
        .energies_a = require_pair(doc, "energies_a"),
        .energies_b = require_pair(doc, "energies_b"),
        .phi = require_number(doc, "phi"),
    };
}

RunConfig cli::load_run_config(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("Cannot read config file '" + path + "'.");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_run_config(buf.str());
}

std::string cli::format_number(double value) {
    if (value == 0) {
        value = 0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string cli::interference_csv(const std::vector<SweepRow> &rows) {
    std::string out = "phi,probability\n";
    for (const auto &r : rows) {
        out += format_number(r.phi);
        out += ',';
        out += format_number(r.probability);
        out += '\n';
    }
    return out;
}

std::vector<double> cli::eigencheck_energies(size_t dim, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(dim);
    for (auto &e : out) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        e = -10 + 20 * u;
    }
    return out;
}

int cli::run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Superposition-of-temperatures simulator", "thermosim"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<uint64_t> samples;
    uint64_t seed = 1;
    auto *protocol = app.add_subcommand("protocol", "Bell-measurement post-selection report");
    protocol->add_option("--config", config_path, "Run config JSON")->required();
    protocol->add_option("--samples", samples, "Number of sampled Bell outcomes");
    protocol->add_option("--seed", seed, "Sampler seed");

    size_t phi_steps = 0;
    std::string out_path;
    std::string convention_text;
    auto *interference = app.add_subcommand("interference", "Interference sweep over phi in [0, 2pi] as CSV");
    interference->add_option("--config", config_path, "Run config JSON")->required();
    interference->add_option("--phi-steps", phi_steps, "Number of grid points")->required();
    interference->add_option("--out", out_path, "CSV output path")->required();
    interference->add_option("--convention", convention_text, "Closed form to use instead of the circuit")
        ->check(CLI::IsMember({"paper", "corrected"}));

    size_t dim = 0;
    double beta = 0;
    std::optional<double> fd_step;
    std::optional<double> assert_tol;
    auto *eigencheck = app.add_subcommand("eigencheck", "Inverse temperature operator eigencheck");
    eigencheck->add_option("--dim", dim, "Hilbert space dimension")->required();
    eigencheck->add_option("--beta", beta, "Inverse temperature")->required();
    eigencheck->add_option("--fd-step", fd_step, "Also check with central differences of this step");
    eigencheck->add_option("--assert-tol", assert_tol, "Exit 2 if any residual exceeds this");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_CONFIG;
    }

    std::ostringstream buffer;
    try {
        int code = EXIT_OK;
        if (*protocol) {
            code = cmd_protocol(config_path, samples, seed, buffer);
        } else if (*interference) {
            std::optional<Convention> convention;
            if (!convention_text.empty()) {
                convention = parse_convention(convention_text);
            }
            code = cmd_interference(config_path, phi_steps, out_path, convention, buffer, err);
        } else {
            code = cmd_eigencheck(dim, beta, fd_step, assert_tol, buffer, err);
        }
        if (code != EXIT_CONFIG) {
            out << buffer.str();
        }
        return code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_CONFIG;
    }
}
