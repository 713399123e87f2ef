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

#ifndef THERMOSIM_QCORE_H
#define THERMOSIM_QCORE_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace thermosim {

using Complex = std::complex<double>;

/// Dimensions of the tensor factors of a composite system.
///
/// Basis states of the composite system are ordered lexicographically with
/// the FIRST subsystem as the most significant digit. For a four-qubit
/// register (A', A, B', B) the index of |a' a b' b> is 8a' + 4a + 2b' + b.
/// Every routine in this library relies on that convention.
class SubsystemShape {
   public:
    explicit SubsystemShape(std::vector<size_t> dims);

    const std::vector<size_t> &dims() const {
        return dims_;
    }
    size_t num_subsystems() const {
        return dims_.size();
    }
    size_t dim(size_t k) const {
        return dims_.at(k);
    }
    size_t total_dim() const {
        return total_;
    }

    /// Distance in the flat index between consecutive values of subsystem k.
    size_t stride(size_t k) const;

    /// Shape of the subsystems named by `indices`, in the order given.
    SubsystemShape select(const std::vector<size_t> &indices) const;

    SubsystemShape concat(const SubsystemShape &other) const;

    bool operator==(const SubsystemShape &other) const = default;

   private:
    std::vector<size_t> dims_;
    size_t total_;
};

/// Dense complex amplitude vector over a SubsystemShape.
///
/// Amplitudes must be finite. Normalization is not enforced here because
/// some results (e.g. an operator applied to a state) are legitimately
/// unnormalized; the public state-producing operations document when they
/// return unit-norm vectors.
class StateVector {
   public:
    StateVector(SubsystemShape shape, std::vector<Complex> amps);

    static StateVector basis(SubsystemShape shape, size_t index);

    const SubsystemShape &shape() const {
        return shape_;
    }
    std::span<const Complex> amps() const {
        return amps_;
    }
    const Complex &operator[](size_t i) const {
        return amps_[i];
    }
    size_t size() const {
        return amps_.size();
    }

    double squared_norm() const;
    double norm() const;

    /// Unit-norm copy. Throws ConfigError for the zero vector.
    StateVector normalized() const;
    StateVector scaled(Complex factor) const;

   private:
    SubsystemShape shape_;
    std::vector<Complex> amps_;
};

/// Dense square complex matrix over a SubsystemShape, row-major.
class Operator {
   public:
    Operator(SubsystemShape shape, std::vector<Complex> entries);

    static Operator identity(SubsystemShape shape);
    static Operator pauli_z();
    static Operator hadamard();
    /// Two-qubit CNOT, control on the first (most significant) qubit.
    static Operator cnot();
    /// |s><s| for the (not necessarily normalized) vector s.
    static Operator projector(const StateVector &s);

    const SubsystemShape &shape() const {
        return shape_;
    }
    size_t dim() const {
        return shape_.total_dim();
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim() + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Operator adjoint() const;
    Operator operator*(const Operator &rhs) const;

    /// Max |U U^dag - I| entry; zero for an exactly unitary operator.
    double unitarity_defect() const;

   private:
    SubsystemShape shape_;
    std::vector<Complex> entries_;
};

/// Unit-trace Hermitian matrix over a SubsystemShape, row-major.
///
/// The constructor checks Hermiticity and trace against EQ_TOL. Positive
/// semidefiniteness is not checked on construction; every operation that
/// returns a DensityMatrix preserves it.
class DensityMatrix {
   public:
    DensityMatrix(SubsystemShape shape, std::vector<Complex> entries);

    static DensityMatrix from_pure(const StateVector &s);
    static DensityMatrix diagonal(SubsystemShape shape, std::span<const double> weights);

    const SubsystemShape &shape() const {
        return shape_;
    }
    size_t dim() const {
        return shape_.total_dim();
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim() + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Complex trace() const;
    /// Tr(rho^2); equals 1 exactly for pure states.
    double purity() const;

   private:
    SubsystemShape shape_;
    std::vector<Complex> entries_;
};

StateVector tensor_product(const StateVector &a, const StateVector &b);
Operator tensor_product(const Operator &a, const Operator &b);

/// <a|b>.
Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2. Insensitive to global phase.
double fidelity_pure(const StateVector &a, const StateVector &b);

/// Lifts `op`, acting on the ordered `targets`, to the full space of `shape`
/// (identity on the remaining subsystems).
Operator embed(const Operator &op, const SubsystemShape &shape, const std::vector<size_t> &targets);

StateVector apply(const Operator &op, const StateVector &s, const std::vector<size_t> &targets);

/// rho -> U rho U^dag with U = op on `targets`. `op` must be unitary for the
/// result to remain a density matrix.
DensityMatrix apply(const Operator &op, const DensityMatrix &rho, const std::vector<size_t> &targets);

/// Reduced state on `keep` (a nonempty proper subset of subsystem indices).
/// The kept subsystems retain their original relative order.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep);
DensityMatrix partial_trace(const StateVector &s, const std::vector<size_t> &keep);

}  // namespace thermosim

#endif
