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

#include "ovsim/statevec.hpp"

#include <algorithm>
#include <cmath>

namespace ovsim {

namespace {

void check_layout(const std::vector<Mode>& modes, const std::vector<cnum>& amps) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
        for (std::size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) {
                throw DuplicateModeError("duplicate mode label '" + modes[i].name() + "'");
            }
        }
    }
    if (amps.size() != (std::size_t{1} << modes.size())) {
        throw std::invalid_argument("amplitude count must be 2^(number of modes)");
    }
    for (const cnum& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
    }
}

double norm_of(const std::vector<cnum>& amps) {
    double s = 0.0;
    for (const cnum& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

}  // namespace

const std::vector<Mode>& canonical_mode_order() {
    static const std::vector<Mode> order = {kMode1, kMode2, kMode3, kMode3p,
                                            kMode4, kMode4p, kModeC};
    return order;
}

StateVector::StateVector(std::vector<Mode> modes, std::vector<cnum> amps) {
    check_layout(modes, amps);
    const double n = norm_of(amps);
    if (std::abs(n - 1.0) > kNormTol) {
        throw NotNormalizableError("state norm " + std::to_string(n) + " is not 1");
    }
    modes_ = std::move(modes);
    amps_ = std::move(amps);
}

StateVector StateVector::unnormalized(std::vector<Mode> modes, std::vector<cnum> amps) {
    check_layout(modes, amps);
    StateVector s;
    s.modes_ = std::move(modes);
    s.amps_ = std::move(amps);
    return s;
}

StateVector StateVector::basis(std::vector<Mode> modes, std::uint64_t index) {
    std::vector<cnum> amps(std::size_t{1} << modes.size(), cnum{0.0, 0.0});
    amps.at(index) = cnum{1.0, 0.0};
    return StateVector(std::move(modes), std::move(amps));
}

double StateVector::norm() const { return norm_of(amps_); }

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n < 1e-15) {
        throw ZeroStateError("cannot normalize a zero state");
    }
    std::vector<cnum> amps = amps_;
    for (cnum& a : amps) a /= n;
    return StateVector(modes_, std::move(amps));
}

bool StateVector::has_mode(const Mode& m) const {
    return std::find(modes_.begin(), modes_.end(), m) != modes_.end();
}

std::size_t StateVector::mode_position(const Mode& m) const {
    const auto it = std::find(modes_.begin(), modes_.end(), m);
    if (it == modes_.end()) {
        throw UnknownModeError("mode '" + m.name() + "' not present in state");
    }
    return static_cast<std::size_t>(it - modes_.begin());
}

Operator::Operator(std::size_t arity, std::vector<cnum> row_major)
    : arity_(arity), dim_(std::size_t{1} << arity), m_(std::move(row_major)) {
    if (m_.size() != dim_ * dim_) {
        throw std::invalid_argument("operator matrix must be 2^arity x 2^arity");
    }
    for (const cnum& a : m_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite operator entry");
        }
    }
}

bool Operator::is_unitary(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            cnum acc{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += std::conj(entry(k, r)) * entry(k, c);
            }
            const cnum want = (r == c) ? cnum{1.0, 0.0} : cnum{0.0, 0.0};
            if (std::abs(acc - want) > tol) return false;
        }
    }
    return true;
}

void Operator::assert_unitary(double tol) const {
    if (!is_unitary(tol)) {
        throw NonUnitaryError("operator is not unitary within tolerance");
    }
}

Operator Operator::identity(std::size_t arity) {
    const std::size_t d = std::size_t{1} << arity;
    std::vector<cnum> m(d * d, cnum{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = cnum{1.0, 0.0};
    return Operator(arity, std::move(m));
}

Operator Operator::pauli_z() {
    return Operator(1, {cnum{1.0, 0.0}, cnum{0.0, 0.0}, cnum{0.0, 0.0}, cnum{-1.0, 0.0}});
}

Operator Operator::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return Operator(1, {cnum{h, 0.0}, cnum{h, 0.0}, cnum{h, 0.0}, cnum{-h, 0.0}});
}

Operator Operator::phase(double radians) {
    return Operator(1, {cnum{1.0, 0.0}, cnum{0.0, 0.0}, cnum{0.0, 0.0},
                        std::polar(1.0, radians)});
}

Operator Operator::swap() {
    std::vector<cnum> m(16, cnum{0.0, 0.0});
    m[0 * 4 + 0] = m[1 * 4 + 2] = m[2 * 4 + 1] = m[3 * 4 + 3] = cnum{1.0, 0.0};
    return Operator(2, std::move(m));
}

Operator Operator::controlled(const Operator& u) {
    const std::size_t ud = u.dim();
    const std::size_t d = 2 * ud;
    std::vector<cnum> m(d * d, cnum{0.0, 0.0});
    for (std::size_t i = 0; i < ud; ++i) m[i * d + i] = cnum{1.0, 0.0};
    for (std::size_t r = 0; r < ud; ++r) {
        for (std::size_t c = 0; c < ud; ++c) {
            m[(ud + r) * d + (ud + c)] = u.entry(r, c);
        }
    }
    return Operator(u.arity() + 1, std::move(m));
}

const StateVector& ProjectionResult::residual() const {
    if (!residual_.has_value()) {
        throw ZeroProbabilityCollapseError(
            "outcome probability below cutoff; collapsed state undefined");
    }
    return *residual_;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    for (const Mode& m : b.modes()) {
        if (a.has_mode(m)) {
            throw DuplicateModeError("mode '" + m.name() + "' present in both factors");
        }
    }
    std::vector<Mode> modes = a.modes();
    modes.insert(modes.end(), b.modes().begin(), b.modes().end());
    const std::size_t nb = b.num_modes();
    std::vector<cnum> amps(a.dim() * b.dim());
    for (std::size_t ia = 0; ia < a.dim(); ++ia) {
        for (std::size_t ib = 0; ib < b.dim(); ++ib) {
            amps[(ia << nb) | ib] = a.amps()[ia] * b.amps()[ib];
        }
    }
    return StateVector::unnormalized(std::move(modes), std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b, const StateVector& c) {
    return tensor(tensor(a, b), c);
}

cnum inner(const StateVector& a, const StateVector& b) {
    if (a.modes() != b.modes()) {
        throw ModeMismatchError("inner product requires identical ordered mode lists");
    }
    cnum acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amps()[i]) * b.amps()[i];
    }
    return acc;
}

StateVector apply(const Operator& op, std::span<const Mode> targets, const StateVector& s) {
    if (targets.size() != op.arity()) {
        throw ArityMismatchError("operator arity does not match target count");
    }
    const std::size_t n = s.num_modes();
    std::vector<std::size_t> shift(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) {
        const std::size_t pos = s.mode_position(targets[j]);
        shift[j] = n - 1 - pos;  // modes()[0] owns the MSB
    }
    const std::size_t k = targets.size();
    const std::size_t op_dim = std::size_t{1} << k;
    std::vector<cnum> out(s.dim(), cnum{0.0, 0.0});
    for (std::size_t i = 0; i < s.dim(); ++i) {
        // Operator row index from the target bits of i, targets[0] = MSB.
        std::size_t row = 0;
        for (std::size_t j = 0; j < k; ++j) {
            row |= ((i >> shift[j]) & 1u) << (k - 1 - j);
        }
        cnum acc{0.0, 0.0};
        for (std::size_t col = 0; col < op_dim; ++col) {
            std::size_t src = i;
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t bit = (col >> (k - 1 - j)) & 1u;
                src = (src & ~(std::size_t{1} << shift[j])) | (bit << shift[j]);
            }
            acc += op.entry(row, col) * s.amps()[src];
        }
        out[i] = acc;
    }
    return StateVector::unnormalized(s.modes(), std::move(out));
}

ProjectionResult project(const StateVector& s, std::span<const Mode> targets,
                         const StateVector& onto) {
    if (onto.num_modes() != targets.size()) {
        throw ModeMismatchError("projection target state must cover exactly the target modes");
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (!(onto.modes()[j] == targets[j])) {
            throw ModeMismatchError("projection target state modes must match the target list");
        }
    }
    if (std::abs(onto.norm() - 1.0) > kNormTol) {
        throw NotNormalizableError("projection target state must be normalized");
    }

    const std::size_t n = s.num_modes();
    const std::size_t k = targets.size();
    std::vector<std::size_t> tshift(k);
    std::vector<bool> is_target(n, false);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t pos = s.mode_position(targets[j]);
        tshift[j] = n - 1 - pos;
        is_target[pos] = true;
    }
    std::vector<Mode> rest_modes;
    std::vector<std::size_t> rshift;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (!is_target[pos]) {
            rest_modes.push_back(s.modes()[pos]);
            rshift.push_back(n - 1 - pos);
        }
    }
    const std::size_t r_count = rest_modes.size();
    const std::size_t rest_dim = std::size_t{1} << r_count;
    const std::size_t onto_dim = std::size_t{1} << k;

    std::vector<cnum> partial(rest_dim, cnum{0.0, 0.0});
    for (std::size_t r = 0; r < rest_dim; ++r) {
        std::size_t base = 0;
        for (std::size_t j = 0; j < r_count; ++j) {
            base |= ((r >> (r_count - 1 - j)) & 1u) << rshift[j];
        }
        cnum acc{0.0, 0.0};
        for (std::size_t t = 0; t < onto_dim; ++t) {
            std::size_t idx = base;
            for (std::size_t j = 0; j < k; ++j) {
                idx |= ((t >> (k - 1 - j)) & 1u) << tshift[j];
            }
            acc += std::conj(onto.amps()[t]) * s.amps()[idx];
        }
        partial[r] = acc;
    }

    double prob = 0.0;
    for (const cnum& c : partial) prob += std::norm(c);

    if (prob < kZeroProbCutoff) {
        return ProjectionResult(prob, std::nullopt);
    }
    const double inv = 1.0 / std::sqrt(prob);
    for (cnum& c : partial) c *= inv;
    return ProjectionResult(prob, StateVector(std::move(rest_modes), std::move(partial)));
}

StateVector permute_modes(const StateVector& s, const std::vector<Mode>& new_order) {
    const std::size_t n = s.num_modes();
    if (new_order.size() != n) {
        throw ModeMismatchError("mode permutation must list every mode exactly once");
    }
    std::vector<std::size_t> old_shift(n);
    for (std::size_t q = 0; q < n; ++q) {
        old_shift[q] = n - 1 - s.mode_position(new_order[q]);  // throws UnknownModeError
    }
    std::vector<cnum> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::size_t j = 0;
        for (std::size_t q = 0; q < n; ++q) {
            j |= ((i >> old_shift[q]) & 1u) << (n - 1 - q);
        }
        out[j] = s.amps()[i];
    }
    return StateVector::unnormalized(new_order, std::move(out));
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    if (a.modes() != b.modes()) {
        throw ModeMismatchError("state sum requires identical ordered mode lists");
    }
    std::vector<cnum> amps(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) amps[i] = a.amps()[i] + b.amps()[i];
    return StateVector::unnormalized(a.modes(), std::move(amps));
}

StateVector operator*(cnum scale, const StateVector& s) {
    std::vector<cnum> amps(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) amps[i] = scale * s.amps()[i];
    return StateVector::unnormalized(s.modes(), std::move(amps));
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
    if (a.modes() != b.modes()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amps()[i] - b.amps()[i]) > tol) return false;
    }
    return true;
}

}  // namespace ovsim
