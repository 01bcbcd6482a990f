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

#include "ovsim/protocol.hpp"

#include <array>

namespace ovsim {

namespace {

const std::vector<Mode> kChiModes = {kMode3, kMode4, kModeC};

BellKind branch_kind(ChiBranch branch, bool first) {
    switch (branch) {
        case ChiBranch::PlusPlus: return BellKind::PsiPlus;
        case ChiBranch::MinusMinus: return BellKind::PsiMinus;
        case ChiBranch::PlusMinus: return first ? BellKind::PsiPlus : BellKind::PsiMinus;
        case ChiBranch::MinusPlus: return first ? BellKind::PsiMinus : BellKind::PsiPlus;
    }
    return BellKind::PsiPlus;
}

struct BranchCollapse {
    double weight;
    StateVector chi;
};

BranchCollapse collapse_branch(const StateVector& full, ChiBranch branch) {
    const ProjectionResult first =
        bell_project(full, kMode1, kMode3p, branch_kind(branch, true));
    const ProjectionResult second =
        bell_project(first.residual(), kMode2, kMode4p, branch_kind(branch, false));
    return {first.prob() * second.prob(), second.residual()};
}

}  // namespace

std::optional<ChiBranch> chi_branch(BellKind first, BellKind second) {
    const bool first_psi = first == BellKind::PsiPlus || first == BellKind::PsiMinus;
    const bool second_psi = second == BellKind::PsiPlus || second == BellKind::PsiMinus;
    if (!first_psi || !second_psi) return std::nullopt;
    if (first == BellKind::PsiPlus) {
        return second == BellKind::PsiPlus ? ChiBranch::PlusPlus : ChiBranch::PlusMinus;
    }
    return second == BellKind::PsiMinus ? ChiBranch::MinusMinus : ChiBranch::MinusPlus;
}

bool branch_accepted(ChiBranch branch) {
    return branch == ChiBranch::PlusPlus || branch == ChiBranch::MinusMinus;
}

StateVector collapse_accepted(const PolarizationState& phi,
                              const PolarizationState& psi, ChiBranch branch,
                              bool apply_correction) {
    if (!branch_accepted(branch)) {
        throw std::invalid_argument("only the equal-signed branches can be collapsed");
    }
    const StateVector full = build_full_state(phi, psi);
    StateVector chi = collapse_branch(full, branch).chi;
    if (apply_correction && branch == ChiBranch::MinusMinus) {
        chi = z_correction(chi);
    }
    return chi;
}

StateVector z_correction(const StateVector& chi) {
    if (chi.modes() != kChiModes) {
        throw ModeMismatchError("correction expects the (3, 4, C) conditional state");
    }
    const Operator z = Operator::pauli_z();
    const std::array<Mode, 1> m3 = {kMode3};
    const std::array<Mode, 1> m4 = {kMode4};
    return apply(z, m4, apply(z, m3, chi));
}

ControlProbs measure_control(const StateVector& chi) {
    if (chi.num_modes() != 3 || !chi.has_mode(kModeC)) {
        throw ModeMismatchError("control measurement expects a 3-mode state with mode C");
    }
    const std::array<Mode, 1> target = {kModeC};
    const double p_plus = project(chi, target, pm_state(PmSign::Plus, kModeC)).prob();
    const double p_minus = project(chi, target, pm_state(PmSign::Minus, kModeC)).prob();
    return {p_plus, p_minus};
}

double overlap_from_distribution(const ProtocolDistribution& d) {
    return d.p_plus_given_accept - d.p_minus_given_accept;
}

ProtocolDistribution run_exact(const PolarizationState& phi,
                               const PolarizationState& psi, bool apply_correction) {
    const StateVector full = build_full_state(phi, psi);

    double p_accept = 0.0;
    double p_plus_joint = 0.0;
    double p_minus_joint = 0.0;
    for (ChiBranch branch : {ChiBranch::PlusPlus, ChiBranch::MinusMinus}) {
        BranchCollapse c = collapse_branch(full, branch);
        if (apply_correction && branch == ChiBranch::MinusMinus) {
            c.chi = z_correction(c.chi);
        }
        const ControlProbs cp = measure_control(c.chi);
        p_accept += c.weight;
        p_plus_joint += c.weight * cp.p_plus;
        p_minus_joint += c.weight * cp.p_minus;
    }

    return ProtocolDistribution{
        p_accept,
        p_plus_joint / p_accept,
        p_minus_joint / p_accept,
        phi.overlap_with(psi),
    };
}

ShotSampler::ShotSampler(const PolarizationState& phi, const PolarizationState& psi) {
    const StateVector full = build_full_state(phi, psi);
    p_plus_plusplus_ = 0.0;
    p_plus_minusminus_ = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const BellKind k1 = kBellDrawOrder[i];
        const ProjectionResult first = bell_project(full, kMode1, kMode3p, k1);
        bell1_probs_[i] = first.prob();
        for (std::size_t j = 0; j < 4; ++j) {
            const BellKind k2 = kBellDrawOrder[j];
            if (!first.has_residual()) {
                bell2_given_1_[i][j] = 0.0;
                continue;
            }
            const ProjectionResult second =
                bell_project(first.residual(), kMode2, kMode4p, k2);
            bell2_given_1_[i][j] = second.prob();
            const auto branch = chi_branch(k1, k2);
            if (branch && branch_accepted(*branch) && second.has_residual()) {
                const ControlProbs cp = measure_control(second.residual());
                if (*branch == ChiBranch::PlusPlus) {
                    p_plus_plusplus_ = cp.p_plus;
                } else {
                    p_plus_minusminus_ = cp.p_plus;
                }
            }
        }
    }
}

ProtocolOutcome ShotSampler::draw(RandomStream& rng) const {
    const auto draw_index = [&rng](const std::array<double, 4>& probs) {
        const double u = rng.next_unit();
        double cum = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            cum += probs[i];
            if (u < cum) return i;
        }
        return std::size_t{3};
    };

    const std::size_t i1 = draw_index(bell1_probs_);
    const std::size_t i2 = draw_index(bell2_given_1_[i1]);
    const BellKind k1 = kBellDrawOrder[i1];
    const BellKind k2 = kBellDrawOrder[i2];

    // Linear-optics analyzers label only the Psi pair.
    const auto report = [](BellKind k) {
        if (k == BellKind::PhiPlus || k == BellKind::PhiMinus) {
            return BellOutcome::Inconclusive;
        }
        return to_outcome(k);
    };

    ProtocolOutcome outcome{report(k1), report(k2), false, std::nullopt};
    const auto branch = chi_branch(k1, k2);
    if (branch && branch_accepted(*branch)) {
        outcome.accepted = true;
        const double p_plus = *branch == ChiBranch::PlusPlus ? p_plus_plusplus_
                                                             : p_plus_minusminus_;
        outcome.control = rng.next_unit() < p_plus ? PmSign::Plus : PmSign::Minus;
    }
    return outcome;
}

ProtocolOutcome run_shot(const PolarizationState& phi, const PolarizationState& psi,
                         RandomStream& rng) {
    return ShotSampler(phi, psi).draw(rng);
}

}  // namespace ovsim
