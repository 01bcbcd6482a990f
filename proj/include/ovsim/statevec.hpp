// Copyright 2026 The ovsim authors
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

#ifndef OVSIM_STATEVEC_HPP
#define OVSIM_STATEVEC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ovsim/errors.hpp"

namespace ovsim {

using cnum = std::complex<double>;

/// Unitarity / normalization tolerance for double precision at dim <= 2^12.
inline constexpr double kNormTol = 1e-12;
/// Below this probability a measurement outcome has no defined residual.
inline constexpr double kZeroProbCutoff = 1e-15;

/// Label of a single photonic mode. The protocol uses the fixed labels
/// 1, 2, 3, 3', 4, 4', C; the Hadamard-test circuit adds an ancilla label.
class Mode {
  public:
    explicit Mode(std::string name) : name_(std::move(name)) {}
    const std::string& name() const { return name_; }
    friend bool operator==(const Mode& a, const Mode& b) { return a.name_ == b.name_; }
    friend bool operator!=(const Mode& a, const Mode& b) { return a.name_ != b.name_; }

  private:
    std::string name_;
};

inline const Mode kMode1{"1"};
inline const Mode kMode2{"2"};
inline const Mode kMode3{"3"};
inline const Mode kMode3p{"3'"};
inline const Mode kMode4{"4"};
inline const Mode kMode4p{"4'"};
inline const Mode kModeC{"C"};

/// Global mode order (1, 2, 3, 3', 4, 4', C); every basis-index packing of
/// the 7-mode joint state follows it.
const std::vector<Mode>& canonical_mode_order();

/// Dense complex state vector over an ordered list of labeled modes.
///
/// Basis-index packing: bit k of an amplitude index is the polarization of
/// modes()[k], encoded H -> 0 and V -> 1, with modes()[0] owning the most
/// significant bit. States are immutable values; every operation returns a
/// new state, so measurement branching and parallel sampling never share
/// mutable data.
class StateVector {
  public:
    /// Builds a state from explicit amplitudes. Requires unique mode labels,
    /// amps.size() == 2^modes.size(), finite entries, and unit norm within
    /// kNormTol (throws NotNormalizableError otherwise).
    StateVector(std::vector<Mode> modes, std::vector<cnum> amps);

    /// Same layout checks, but skips the unit-norm requirement. Intended for
    /// intermediate arithmetic (sums of branches) that is normalized later.
    static StateVector unnormalized(std::vector<Mode> modes, std::vector<cnum> amps);

    /// Computational basis state |index> over the given modes.
    static StateVector basis(std::vector<Mode> modes, std::uint64_t index);

    const std::vector<Mode>& modes() const { return modes_; }
    const std::vector<cnum>& amps() const { return amps_; }
    std::size_t num_modes() const { return modes_.size(); }
    std::size_t dim() const { return amps_.size(); }
    cnum amp(std::uint64_t index) const { return amps_.at(index); }

    double norm() const;
    /// Returns this state scaled to unit norm. Throws ZeroStateError when
    /// the norm is (numerically) zero.
    StateVector normalized() const;

    bool has_mode(const Mode& m) const;
    /// Position of `m` in modes(); throws UnknownModeError when absent.
    std::size_t mode_position(const Mode& m) const;

  private:
    StateVector() = default;
    std::vector<Mode> modes_;
    std::vector<cnum> amps_;
};

/// Square operator on `arity` modes, stored row-major with the same
/// MSB-first index packing as StateVector: when applied to a target list,
/// targets[0] owns the most significant bit of the operator index.
class Operator {
  public:
    Operator(std::size_t arity, std::vector<cnum> row_major);

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }
    cnum entry(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }

    bool is_unitary(double tol = kNormTol) const;
    /// Throws NonUnitaryError unless U†U = I within tol.
    void assert_unitary(double tol = kNormTol) const;

    static Operator identity(std::size_t arity);
    static Operator pauli_z();
    static Operator hadamard();
    /// diag(1, e^{i radians}) on one mode.
    static Operator phase(double radians);
    static Operator swap();
    /// Controlled-U on 1 + arity(u) modes; the control is the first
    /// (most significant) target.
    static Operator controlled(const Operator& u);

  private:
    std::size_t arity_;
    std::size_t dim_;
    std::vector<cnum> m_;
};

/// Outcome of projecting onto a target-subspace state: the Born probability
/// and, when the probability is above kZeroProbCutoff, the renormalized
/// residual state on the untouched modes.
class ProjectionResult {
  public:
    ProjectionResult(double prob, std::optional<StateVector> residual)
        : prob_(prob), residual_(std::move(residual)) {}

    double prob() const { return prob_; }
    bool has_residual() const { return residual_.has_value(); }
    /// Throws ZeroProbabilityCollapseError when the outcome probability was
    /// below the cutoff and no residual exists.
    const StateVector& residual() const;

  private:
    double prob_;
    std::optional<StateVector> residual_;
};

/// Tensor product; modes(a) ++ modes(b), amplitudes multiply.
/// Throws DuplicateModeError when the label sets intersect.
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c);

/// <a|b> over an identical ordered mode list (ModeMismatchError otherwise).
cnum inner(const StateVector& a, const StateVector& b);

/// Applies `op` on the listed target modes, identity elsewhere.
StateVector apply(const Operator& op, std::span<const Mode> targets, const StateVector& s);

/// Projects the target modes of `s` onto `onto` (a normalized state whose
/// mode list equals `targets`). The residual keeps the remaining modes in
/// their original order.
ProjectionResult project(const StateVector& s, std::span<const Mode> targets,
                         const StateVector& onto);

/// Reorders the mode list (a permutation of the existing one), repacking
/// amplitudes accordingly. Pure relabeling of the same physical state.
StateVector permute_modes(const StateVector& s, const std::vector<Mode>& new_order);

/// Element-wise sum over an identical mode list. The result is generally
/// not normalized.
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator*(cnum scale, const StateVector& s);

/// True when both states have the same ordered mode list and every
/// amplitude agrees within tol.
bool approx_equal(const StateVector& a, const StateVector& b, double tol = kNormTol);

}  // namespace ovsim

#endif
