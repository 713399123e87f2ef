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

#include "thermosim/qcore.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermosim/errors.h"
#include "thermosim/tolerances.h"

using namespace thermosim;

namespace {

bool is_finite(const Complex &c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_finite(std::span<const Complex> values, const char *what) {
    for (const auto &v : values) {
        if (!is_finite(v)) {
            throw ConfigError(std::string(what) + " contains a non-finite entry.");
        }
    }
}

/// For each value of the sub-index over `indices` (first index most
/// significant), the offset it contributes to the flat index of `shape`.
std::vector<size_t> offset_table(const SubsystemShape &shape, const std::vector<size_t> &indices) {
    std::vector<size_t> table{0};
    for (size_t k : indices) {
        size_t d = shape.dim(k);
        size_t s = shape.stride(k);
        std::vector<size_t> next;
        next.reserve(table.size() * d);
        for (size_t base : table) {
            for (size_t v = 0; v < d; v++) {
                next.push_back(base + v * s);
            }
        }
        table = std::move(next);
    }
    return table;
}

/// Validates a list of distinct in-range subsystem indices.
void check_indices(const SubsystemShape &shape, const std::vector<size_t> &indices, const char *what) {
    if (indices.empty()) {
        throw ConfigError(std::string(what) + " must name at least one subsystem.");
    }
    std::vector<bool> seen(shape.num_subsystems(), false);
    for (size_t k : indices) {
        if (k >= shape.num_subsystems()) {
            throw ConfigError(
                std::string(what) + " index " + std::to_string(k) + " out of range for " +
                std::to_string(shape.num_subsystems()) + " subsystems.");
        }
        if (seen[k]) {
            throw ConfigError(std::string(what) + " index " + std::to_string(k) + " repeated.");
        }
        seen[k] = true;
    }
}

std::vector<size_t> complement(const SubsystemShape &shape, const std::vector<size_t> &indices) {
    std::vector<size_t> result;
    for (size_t k = 0; k < shape.num_subsystems(); k++) {
        if (std::find(indices.begin(), indices.end(), k) == indices.end()) {
            result.push_back(k);
        }
    }
    return result;
}

}  // namespace

SubsystemShape::SubsystemShape(std::vector<size_t> dims) : dims_(std::move(dims)), total_(1) {
    if (dims_.empty()) {
        throw ConfigError("A subsystem shape needs at least one subsystem.");
    }
    for (size_t d : dims_) {
        if (d < 2) {
            throw ConfigError("Subsystem dimension " + std::to_string(d) + " is below 2.");
        }
        total_ *= d;
    }
}

size_t SubsystemShape::stride(size_t k) const {
    size_t s = 1;
    for (size_t j = dims_.size(); j-- > k + 1;) {
        s *= dims_[j];
    }
    return s;
}

SubsystemShape SubsystemShape::select(const std::vector<size_t> &indices) const {
    std::vector<size_t> out;
    out.reserve(indices.size());
    for (size_t k : indices) {
        out.push_back(dims_.at(k));
    }
    return SubsystemShape(std::move(out));
}

SubsystemShape SubsystemShape::concat(const SubsystemShape &other) const {
    std::vector<size_t> out = dims_;
    out.insert(out.end(), other.dims_.begin(), other.dims_.end());
    return SubsystemShape(std::move(out));
}

StateVector::StateVector(SubsystemShape shape, std::vector<Complex> amps)
    : shape_(std::move(shape)), amps_(std::move(amps)) {
    if (amps_.size() != shape_.total_dim()) {
        throw ConfigError(
            "State has " + std::to_string(amps_.size()) + " amplitudes but its shape needs " +
            std::to_string(shape_.total_dim()) + ".");
    }
    require_finite(amps_, "State vector");
}

StateVector StateVector::basis(SubsystemShape shape, size_t index) {
    std::vector<Complex> amps(shape.total_dim());
    amps.at(index) = 1;
    return StateVector(std::move(shape), std::move(amps));
}

double StateVector::squared_norm() const {
    double t = 0;
    for (const auto &a : amps_) {
        t += std::norm(a);
    }
    return t;
}

double StateVector::norm() const {
    return std::sqrt(squared_norm());
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0) {
        throw ConfigError("Cannot normalize the zero vector.");
    }
    return scaled(1.0 / n);
}

StateVector StateVector::scaled(Complex factor) const {
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(shape_, std::move(out));
}

Operator::Operator(SubsystemShape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    size_t d = shape_.total_dim();
    if (entries_.size() != d * d) {
        throw ConfigError(
            "Operator has " + std::to_string(entries_.size()) + " entries but its shape needs " +
            std::to_string(d * d) + ".");
    }
    require_finite(entries_, "Operator");
}

Operator Operator::identity(SubsystemShape shape) {
    size_t d = shape.total_dim();
    std::vector<Complex> e(d * d);
    for (size_t k = 0; k < d; k++) {
        e[k * d + k] = 1;
    }
    return Operator(std::move(shape), std::move(e));
}

Operator Operator::pauli_z() {
    return Operator(SubsystemShape({2}), {1, 0, 0, -1});
}

Operator Operator::hadamard() {
    double s = 1 / std::sqrt(2.0);
    return Operator(SubsystemShape({2}), {s, s, s, -s});
}

Operator Operator::cnot() {
    return Operator(
        SubsystemShape({2, 2}),
        {
            1, 0, 0, 0,  //
            0, 1, 0, 0,  //
            0, 0, 0, 1,  //
            0, 0, 1, 0,  //
        });
}

Operator Operator::projector(const StateVector &s) {
    size_t d = s.size();
    std::vector<Complex> e(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            e[r * d + c] = s[r] * std::conj(s[c]);
        }
    }
    return Operator(s.shape(), std::move(e));
}

Operator Operator::adjoint() const {
    size_t d = dim();
    std::vector<Complex> e(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            e[c * d + r] = std::conj((*this)(r, c));
        }
    }
    return Operator(shape_, std::move(e));
}

Operator Operator::operator*(const Operator &rhs) const {
    if (dim() != rhs.dim()) {
        throw ConfigError("Operator product with mismatched dimensions.");
    }
    size_t d = dim();
    std::vector<Complex> e(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t k = 0; k < d; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < d; c++) {
                e[r * d + c] += a * rhs(k, c);
            }
        }
    }
    return Operator(shape_, std::move(e));
}

double Operator::unitarity_defect() const {
    Operator p = (*this) * adjoint();
    double worst = 0;
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = 0; c < dim(); c++) {
            Complex expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(p(r, c) - expected));
        }
    }
    return worst;
}

DensityMatrix::DensityMatrix(SubsystemShape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    size_t d = shape_.total_dim();
    if (entries_.size() != d * d) {
        throw ConfigError(
            "Density matrix has " + std::to_string(entries_.size()) + " entries but its shape needs " +
            std::to_string(d * d) + ".");
    }
    require_finite(entries_, "Density matrix");
    for (size_t r = 0; r < d; r++) {
        for (size_t c = r; c < d; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > EQ_TOL) {
                throw ConfigError("Density matrix is not Hermitian.");
            }
        }
    }
    if (std::abs(trace() - 1.0) > EQ_TOL) {
        throw ConfigError("Density matrix trace differs from 1.");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &s) {
    size_t d = s.size();
    std::vector<Complex> e(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            e[r * d + c] = s[r] * std::conj(s[c]);
        }
    }
    return DensityMatrix(s.shape(), std::move(e));
}

DensityMatrix DensityMatrix::diagonal(SubsystemShape shape, std::span<const double> weights) {
    size_t d = shape.total_dim();
    if (weights.size() != d) {
        throw ConfigError("Diagonal weights do not match the shape.");
    }
    std::vector<Complex> e(d * d);
    for (size_t k = 0; k < d; k++) {
        e[k * d + k] = weights[k];
    }
    return DensityMatrix(std::move(shape), std::move(e));
}

Complex DensityMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim(); k++) {
        t += (*this)(k, k);
    }
    return t;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
    double t = 0;
    for (const auto &e : entries_) {
        t += std::norm(e);
    }
    return t;
}

StateVector thermosim::tensor_product(const StateVector &a, const StateVector &b) {
    std::vector<Complex> amps;
    amps.reserve(a.size() * b.size());
    for (const auto &x : a.amps()) {
        for (const auto &y : b.amps()) {
            amps.push_back(x * y);
        }
    }
    return StateVector(a.shape().concat(b.shape()), std::move(amps));
}

Operator thermosim::tensor_product(const Operator &a, const Operator &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    size_t d = da * db;
    std::vector<Complex> e(d * d);
    for (size_t r1 = 0; r1 < da; r1++) {
        for (size_t c1 = 0; c1 < da; c1++) {
            Complex x = a(r1, c1);
            for (size_t r2 = 0; r2 < db; r2++) {
                for (size_t c2 = 0; c2 < db; c2++) {
                    e[(r1 * db + r2) * d + (c1 * db + c2)] = x * b(r2, c2);
                }
            }
        }
    }
    return Operator(a.shape().concat(b.shape()), std::move(e));
}

Complex thermosim::inner_product(const StateVector &a, const StateVector &b) {
    if (a.shape() != b.shape()) {
        throw ConfigError("Inner product of states with different shapes.");
    }
    Complex t = 0;
    for (size_t k = 0; k < a.size(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

double thermosim::fidelity_pure(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

Operator thermosim::embed(const Operator &op, const SubsystemShape &shape, const std::vector<size_t> &targets) {
    check_indices(shape, targets, "Target");
    if (op.shape().total_dim() != shape.select(targets).total_dim()) {
        throw ConfigError("Operator dimension does not match the product of the target dimensions.");
    }
    auto target_offsets = offset_table(shape, targets);
    auto rest_offsets = offset_table(shape, complement(shape, targets));
    size_t d = shape.total_dim();
    size_t td = op.dim();
    std::vector<Complex> e(d * d);
    for (size_t base : rest_offsets) {
        for (size_t r = 0; r < td; r++) {
            for (size_t c = 0; c < td; c++) {
                e[(base + target_offsets[r]) * d + base + target_offsets[c]] = op(r, c);
            }
        }
    }
    return Operator(shape, std::move(e));
}

StateVector thermosim::apply(const Operator &op, const StateVector &s, const std::vector<size_t> &targets) {
    const auto &shape = s.shape();
    check_indices(shape, targets, "Target");
    if (op.shape().total_dim() != shape.select(targets).total_dim()) {
        throw ConfigError("Operator dimension does not match the product of the target dimensions.");
    }
    auto target_offsets = offset_table(shape, targets);
    auto rest_offsets = offset_table(shape, complement(shape, targets));
    size_t td = op.dim();
    std::vector<Complex> out(s.size());
    for (size_t base : rest_offsets) {
        for (size_t r = 0; r < td; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < td; c++) {
                acc += op(r, c) * s[base + target_offsets[c]];
            }
            out[base + target_offsets[r]] = acc;
        }
    }
    return StateVector(shape, std::move(out));
}

DensityMatrix thermosim::apply(const Operator &op, const DensityMatrix &rho, const std::vector<size_t> &targets) {
    Operator u = embed(op, rho.shape(), targets);
    size_t d = rho.dim();
    std::vector<Complex> rho_entries(rho.entries().begin(), rho.entries().end());
    Operator r = u * Operator(rho.shape(), std::move(rho_entries)) * u.adjoint();
    std::vector<Complex> e(r.entries().begin(), r.entries().end());
    // Re-symmetrize to remove rounding asymmetry before the Hermitian check.
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i; j < d; j++) {
            Complex m = 0.5 * (e[i * d + j] + std::conj(e[j * d + i]));
            e[i * d + j] = m;
            e[j * d + i] = std::conj(m);
        }
    }
    return DensityMatrix(rho.shape(), std::move(e));
}

DensityMatrix thermosim::partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep) {
    const auto &shape = rho.shape();
    check_indices(shape, keep, "Keep");
    if (keep.size() >= shape.num_subsystems()) {
        throw ConfigError("Keep must be a proper subset of the subsystems.");
    }
    std::vector<size_t> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    auto keep_offsets = offset_table(shape, sorted_keep);
    auto traced_offsets = offset_table(shape, complement(shape, sorted_keep));
    size_t kd = keep_offsets.size();
    std::vector<Complex> e(kd * kd);
    for (size_t r = 0; r < kd; r++) {
        for (size_t c = 0; c < kd; c++) {
            Complex acc = 0;
            for (size_t t : traced_offsets) {
                acc += rho(keep_offsets[r] + t, keep_offsets[c] + t);
            }
            e[r * kd + c] = acc;
        }
    }
    return DensityMatrix(shape.select(sorted_keep), std::move(e));
}

DensityMatrix thermosim::partial_trace(const StateVector &s, const std::vector<size_t> &keep) {
    const auto &shape = s.shape();
    check_indices(shape, keep, "Keep");
    if (keep.size() >= shape.num_subsystems()) {
        throw ConfigError("Keep must be a proper subset of the subsystems.");
    }
    std::vector<size_t> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    auto keep_offsets = offset_table(shape, sorted_keep);
    auto traced_offsets = offset_table(shape, complement(shape, sorted_keep));
    size_t kd = keep_offsets.size();
    std::vector<Complex> e(kd * kd);
    for (size_t r = 0; r < kd; r++) {
        for (size_t c = r; c < kd; c++) {
            Complex acc = 0;
            for (size_t t : traced_offsets) {
                acc += s[keep_offsets[r] + t] * std::conj(s[keep_offsets[c] + t]);
            }
            e[r * kd + c] = acc;
            e[c * kd + r] = std::conj(acc);
        }
    }
    return DensityMatrix(shape.select(sorted_keep), std::move(e));
}
