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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "thermosim/errors.h"

using namespace thermosim;
using namespace thermosim::cli;

namespace {

const std::string FIXTURES = THERMOSIM_FIXTURE_DIR;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("thermosim_cli_test_" + name);
}

}  // namespace

TEST(parse_run_config, valid) {
    auto rc = parse_run_config(R"({"beta_a":1.0,"beta_b":2,"energies_a":[5.0,0.0],"energies_b":[0.0,1.0],"phi":0.5})");
    EXPECT_EQ(rc.beta_a, 1);
    EXPECT_EQ(rc.beta_b, 2);
    EXPECT_EQ(rc.energies_a[0], 5);
    EXPECT_EQ(rc.energies_b[1], 1);
    EXPECT_EQ(rc.phi, 0.5);
}

TEST(parse_run_config, rejects_bad_documents) {
    const char *bad[] = {
        R"({"beta_a":1,"beta_b":1,"energies_a":[5,0],"energies_B":[0,1],"phi":0})",
        R"({"beta_a":1,"beta_b":1,"energies_a":[5,0],"phi":0})",
        R"({"beta_a":"1","beta_b":1,"energies_a":[5,0],"energies_b":[0,1],"phi":0})",
        R"({"beta_a":1,"beta_b":1,"energies_a":[5,0,1],"energies_b":[0,1],"phi":0})",
        R"({"beta_a":1,"beta_b":1,"energies_a":[5,"x"],"energies_b":[0,1],"phi":0})",
        R"({"beta_a":1e999,"beta_b":1,"energies_a":[5,0],"energies_b":[0,1],"phi":0})",
        R"([1, 2])",
        R"({"beta_a":1,)",
    };
    for (const char *doc : bad) {
        EXPECT_THROW(parse_run_config(doc), ConfigError) << doc;
    }
}

TEST(format_number, nine_significant_digits) {
    EXPECT_EQ(format_number(0.63290111441703984), "0.632901114");
    EXPECT_EQ(format_number(0.49999999999999983), "0.5");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(6.283185307179586), "6.28318531");
}

TEST(cmd_protocol, figure_configuration) {
    auto r = run_cli({"protocol", "--config", FIXTURES + "/fig1.json"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["outcome_probabilities"]["PhiPlus"].get<double>(), 0.136017151, 1e-9);
    EXPECT_NEAR(doc["success_probability"]["phi_branch"].get<double>(), 0.272034303, 1e-9);
    EXPECT_NEAR(doc["success_probability"]["psi_branch"].get<double>(), 0.727965697, 1e-9);
    ASSERT_EQ(doc["phi_plus_state"].size(), 4u);
    EXPECT_EQ(doc["phi_plus_state"][3]["basis"], "11");
    EXPECT_FALSE(doc.contains("samples"));
}

TEST(cmd_protocol, infinite_temperature_and_samples) {
    auto r = run_cli({"protocol", "--config", FIXTURES + "/infinite_temperature.json", "--samples", "1000", "--seed",
                      "5"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    for (const char *o : {"PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"}) {
        EXPECT_EQ(doc["outcome_probabilities"][o].get<double>(), 0.25);
    }
    uint64_t total = 0;
    for (const auto &[k, v] : doc["samples"]["counts"].items()) {
        total += v.get<uint64_t>();
    }
    EXPECT_EQ(total, 1000u);
    EXPECT_EQ(run_cli({"protocol", "--config", FIXTURES + "/infinite_temperature.json", "--samples", "1000", "--seed",
                       "5"})
                  .out,
              r.out);
}

TEST(cmd_protocol, missing_and_malformed_config) {
    auto missing = run_cli({"protocol", "--config", FIXTURES + "/does_not_exist.json"});
    EXPECT_EQ(missing.code, EXIT_CONFIG);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());
    EXPECT_EQ(missing.err.find('\n'), missing.err.size() - 1);

    auto malformed = run_cli({"protocol", "--config", FIXTURES + "/malformed.json"});
    EXPECT_EQ(malformed.code, EXIT_CONFIG);
    EXPECT_TRUE(malformed.out.empty());
    EXPECT_NE(malformed.err.find("energies_B"), std::string::npos);
}

TEST(cmd_interference, five_point_grid) {
    auto path = temp_path("five.csv");
    auto r = run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "5", "--out", path.string()});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    EXPECT_EQ(read_file(path),
              "phi,probability\n"
              "0,0.632901114\n"
              "1.57079633,0.5\n"
              "3.14159265,0.367098886\n"
              "4.71238898,0.5\n"
              "6.28318531,0.632901114\n");
    std::filesystem::remove(path);
}

TEST(cmd_interference, two_point_grid_is_periodic) {
    auto path = temp_path("two.csv");
    ASSERT_EQ(run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "2", "--out", path.string()})
                  .code,
              EXIT_OK);
    EXPECT_EQ(read_file(path), "phi,probability\n0,0.632901114\n6.28318531,0.632901114\n");
    std::filesystem::remove(path);
}

TEST(cmd_interference, printed_convention) {
    auto path = temp_path("paper.csv");
    ASSERT_EQ(run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "3", "--out", path.string(),
                       "--convention", "paper"})
                  .code,
              EXIT_OK);
    auto text = read_file(path);
    EXPECT_EQ(text.substr(0, text.find('\n', 16) + 1), "phi,probability\n0,0.566450557\n");
    std::filesystem::remove(path);
}

TEST(cmd_interference, errors) {
    auto path = temp_path("err.csv");
    EXPECT_EQ(run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "1", "--out", path.string()})
                  .code,
              EXIT_CONFIG);
    EXPECT_EQ(run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "5", "--out",
                       "/nonexistent_dir/x.csv"})
                  .code,
              EXIT_CONFIG);
    EXPECT_EQ(run_cli({"interference", "--config", FIXTURES + "/fig1.json", "--phi-steps", "5", "--out", path.string(),
                       "--convention", "sideways"})
                  .code,
              EXIT_CONFIG);
    // The printed closed form is out of regime for E_0' != 0.
    auto cfg = temp_path("offregime.json");
    std::ofstream(cfg) << R"({"beta_a":1,"beta_b":1,"energies_a":[5,0],"energies_b":[0.5,1],"phi":0})";
    EXPECT_EQ(run_cli({"interference", "--config", cfg.string(), "--phi-steps", "5", "--out", path.string(),
                       "--convention", "corrected"})
                  .code,
              EXIT_CONFIG);
    std::filesystem::remove(cfg);
    std::filesystem::remove(path);
}

TEST(cmd_eigencheck, qubit_beta_2) {
    auto r = run_cli({"eigencheck", "--dim", "2", "--beta", "2", "--assert-tol", "1e-10"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["expected"].get<double>(), 0.25);
    EXPECT_LE(doc["analytic"]["residual"].get<double>(), 1e-10);
    EXPECT_EQ(doc["energies"].size(), 2u);
}

TEST(cmd_eigencheck, zero_beta) {
    auto r = run_cli({"eigencheck", "--dim", "4", "--beta", "0"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["expected"].get<double>(), 0);
    EXPECT_LE(doc["analytic"]["residual"].get<double>(), 1e-12);
}

TEST(cmd_eigencheck, finite_difference_within_tolerance) {
    auto r = run_cli({"eigencheck", "--dim", "3", "--beta", "0.7", "--fd-step", "1e-5", "--assert-tol", "1e-6"});
    EXPECT_EQ(r.code, EXIT_OK) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["assert"]["passed"].get<bool>());
    EXPECT_NEAR(doc["finite_difference"]["rayleigh"].get<double>(), 0.030625, 1e-6);
}

TEST(cmd_eigencheck, tight_tolerance_fails_with_exit_2) {
    auto r = run_cli({"eigencheck", "--dim", "3", "--beta", "8", "--fd-step", "1e-2", "--assert-tol", "1e-9"});
    EXPECT_EQ(r.code, EXIT_ASSERTION);
    EXPECT_FALSE(r.out.empty());
    EXPECT_FALSE(nlohmann::json::parse(r.out)["assert"]["passed"].get<bool>());
    EXPECT_FALSE(r.err.empty());
}

TEST(cmd_eigencheck, invalid_arguments) {
    EXPECT_EQ(run_cli({"eigencheck", "--dim", "1", "--beta", "1"}).code, EXIT_CONFIG);
    EXPECT_EQ(run_cli({"eigencheck", "--dim", "3", "--beta", "-1"}).code, EXIT_CONFIG);
    EXPECT_EQ(run_cli({"eigencheck", "--dim", "3", "--beta", "1", "--fd-step", "0"}).code, EXIT_CONFIG);
    EXPECT_EQ(run_cli({"eigencheck", "--dim", "x", "--beta", "1"}).code, EXIT_CONFIG);
}

TEST(run, usage_errors_and_help) {
    EXPECT_EQ(run_cli({}).code, EXIT_CONFIG);
    EXPECT_EQ(run_cli({"frobnicate"}).code, EXIT_CONFIG);
    EXPECT_EQ(run_cli({"protocol"}).code, EXIT_CONFIG);
    auto help = run_cli({"--help"});
    EXPECT_EQ(help.code, EXIT_OK);
    EXPECT_NE(help.out.find("eigencheck"), std::string::npos);
}

TEST(eigencheck_energies, deterministic_and_in_range) {
    auto a = eigencheck_energies(5);
    EXPECT_EQ(a, eigencheck_energies(5));
    for (double e : a) {
        EXPECT_GE(e, -10);
        EXPECT_LT(e, 10);
    }
}
