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

#include "ovsim/hadamard_test.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ovsim {

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw std::invalid_argument("ensemble needs at least one member");
    }
    double total = 0.0;
    for (const EnsembleMember& m : members_) {
        if (!(m.weight >= 0.0) || !std::isfinite(m.weight)) {
            throw std::invalid_argument("ensemble weights must be non-negative");
        }
        if (m.state.num_modes() != 2) {
            throw ModeMismatchError("ensemble members must be two-mode states");
        }
        if (m.state.modes() != members_.front().state.modes()) {
            throw ModeMismatchError("ensemble members must share one mode list");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw std::invalid_argument("ensemble weights must sum to 1, got " +
                                    std::to_string(total));
    }
}

Ensemble Ensemble::pure(StateVector state) {
    std::vector<EnsembleMember> members;
    members.push_back({1.0, std::move(state)});
    return Ensemble(std::move(members));
}

const std::vector<Mode>& Ensemble::system_modes() const {
    return members_.front().state.modes();
}

namespace {

Mode fresh_ancilla_label(const std::vector<Mode>& taken) {
    Mode candidate{"anc"};
    int suffix = 0;
    while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) {
        candidate = Mode("anc" + std::to_string(suffix++));
    }
    return candidate;
}

}  // namespace

AncillaProbs hadamard_test_probs(const Operator& u, const Ensemble& rho,
                                 PhaseAngle phase) {
    if (!std::isfinite(phase.radians)) {
        throw std::invalid_argument("phase angle must be finite");
    }
    if (u.arity() != rho.system_modes().size()) {
        throw ModeMismatchError("operator arity must match the system mode count");
    }
    u.assert_unitary();

    const Mode anc = fresh_ancilla_label(rho.system_modes());
    const std::array<Mode, 1> anc_target = {anc};
    std::vector<Mode> cu_targets = {anc};
    cu_targets.insert(cu_targets.end(), rho.system_modes().begin(),
                      rho.system_modes().end());

    const Operator h = Operator::hadamard();
    const Operator cu = Operator::controlled(u);
    const Operator ph = Operator::phase(phase.radians);
    const StateVector anc0 = StateVector::basis({anc}, 0);

    double p0 = 0.0;
    for (const EnsembleMember& m : rho.members()) {
        StateVector s = tensor(anc0, m.state);
        s = apply(h, anc_target, s);
        s = apply(cu, cu_targets, s);
        s = apply(ph, anc_target, s);
        s = apply(h, anc_target, s);
        p0 += m.weight * project(s, anc_target, anc0).prob();
    }
    return {p0, 1.0 - p0};
}

cnum estimate_trace(const Operator& u, const Ensemble& rho) {
    const double re = 2.0 * hadamard_test_probs(u, rho, PhaseAngle{0.0}).p0 - 1.0;
    const double im =
        2.0 * hadamard_test_probs(u, rho, PhaseAngle{-1.5707963267948966}).p0 - 1.0;
    return cnum{re, im};
}

}  // namespace ovsim
