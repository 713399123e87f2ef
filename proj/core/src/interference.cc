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

#include "thermosim/interference.h"

#include <cmath>
#include <string>

#include "thermosim/errors.h"

using namespace thermosim;

double thermosim::circuit_probability(const ProtocolConfig &cfg) {
    StateVector ab = post_select(cfg, BellOutcome::PhiPlus).state;
    StateVector entangled = apply(Operator::cnot(), ab, {0, 1});
    DensityMatrix rho_a = partial_trace(entangled, {0});
    DensityMatrix out = apply(Operator::hadamard(), rho_a, {0});
    return out(0, 0).real();
}

std::string_view thermosim::convention_name(Convention c) {
    return c == Convention::Paper ? "paper" : "corrected";
}

Convention thermosim::parse_convention(std::string_view text) {
    if (text == "paper") {
        return Convention::Paper;
    }
    if (text == "corrected") {
        return Convention::Corrected;
    }
    throw ConfigError("Unknown convention '" + std::string(text) + "'; expected paper or corrected.");
}

double thermosim::closed_form_probability(const ProtocolConfig &cfg, Convention convention) {
    const auto &ea = cfg.spec_a().hamiltonian().energies();
    const auto &eb = cfg.spec_b().hamiltonian().energies();
    if (eb[0] != 0 || ea[1] != 0) {
        throw ConfigError("The closed form requires E_0' = 0 and E_1 = 0.");
    }
    double beta_a = cfg.spec_a().beta();
    double beta_b = cfg.spec_b().beta();
    double log_za = gibbs_weights(cfg.spec_a()).log_partition;
    double log_zb = gibbs_weights(cfg.spec_b()).log_partition;
    double n_sq = success_probability(cfg, Branch::Phi);

    double cross = std::exp(-(beta_a * ea[0] + beta_b * eb[1]) / 2 - log_za - log_zb) / n_sq;
    if (convention == Convention::Corrected) {
        cross *= 2;
    }
    return 0.5 * (1 + cross * std::cos(cfg.phi()));
}

double thermosim::visibility(const ProtocolConfig &cfg) {
    const auto &p = cfg.p();
    const auto &f = cfg.f();
    double root = std::sqrt(p[0]) * std::sqrt(f[0]) * std::sqrt(p[1]) * std::sqrt(f[1]);
    return 2 * root / success_probability(cfg, Branch::Phi);
}

std::vector<SweepRow> thermosim::sweep(const SweepSpec &spec, std::optional<Convention> convention) {
    if (spec.phi_points.empty()) {
        throw ConfigError("A sweep needs at least one phi point.");
    }
    auto eval = [&](const ProtocolConfig &c) {
        return convention ? closed_form_probability(c, *convention) : circuit_probability(c);
    };

    std::vector<SweepRow> rows;
    if (!spec.beta_b_axis) {
        rows.reserve(spec.phi_points.size());
        for (double phi : spec.phi_points) {
            rows.push_back({phi, std::nullopt, eval(spec.cfg.with_phi(phi))});
        }
        return rows;
    }

    for (double beta_b : spec.beta_b_axis->values) {
        if (!(beta_b > 0)) {
            throw ConfigError("beta_B sweep values must be positive.");
        }
    }
    rows.reserve(spec.phi_points.size() * spec.beta_b_axis->values.size());
    for (double beta_b : spec.beta_b_axis->values) {
        ProtocolConfig base = spec.cfg.with_beta_b(beta_b);
        for (double phi : spec.phi_points) {
            rows.push_back({phi, beta_b, eval(base.with_phi(phi))});
        }
    }
    return rows;
}

std::vector<double> thermosim::linspace(double lo, double hi, size_t n) {
    if (n < 2) {
        throw ConfigError("linspace needs at least two points.");
    }
    std::vector<double> out(n);
    for (size_t k = 0; k < n; k++) {
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    out.back() = hi;
    return out;
}
