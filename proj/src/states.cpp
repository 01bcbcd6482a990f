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

#include "ovsim/states.hpp"

#include <cmath>

namespace ovsim {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

const char* to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
    }
    return "?";
}

const char* to_string(PmSign sign) {
    return sign == PmSign::Plus ? "+" : "-";
}

PolarizationState::PolarizationState(cnum alpha_h, cnum alpha_v) {
    if (!std::isfinite(alpha_h.real()) || !std::isfinite(alpha_h.imag()) ||
        !std::isfinite(alpha_v.real()) || !std::isfinite(alpha_v.imag())) {
        throw NotNormalizableError("non-finite polarization amplitude");
    }
    const double n = std::sqrt(std::norm(alpha_h) + std::norm(alpha_v));
    if (n * n < 1e-30) {
        throw ZeroStateError("polarization amplitudes are both zero");
    }
    if (std::abs(n - 1.0) > 1e-6) {
        throw NotNormalizableError("polarization norm deviates from 1 by " +
                                   std::to_string(std::abs(n - 1.0)) +
                                   "; refusing to renormalize");
    }
    h_ = alpha_h / n;
    v_ = alpha_v / n;
}

PolarizationState PolarizationState::normalized(cnum alpha_h, cnum alpha_v) {
    if (!std::isfinite(alpha_h.real()) || !std::isfinite(alpha_h.imag()) ||
        !std::isfinite(alpha_v.real()) || !std::isfinite(alpha_v.imag())) {
        throw NotNormalizableError("non-finite polarization amplitude");
    }
    const double n = std::sqrt(std::norm(alpha_h) + std::norm(alpha_v));
    if (n * n < 1e-30) {
        throw ZeroStateError("polarization amplitudes are both zero");
    }
    PolarizationState p;
    p.h_ = alpha_h / n;
    p.v_ = alpha_v / n;
    return p;
}

StateVector PolarizationState::on(const Mode& mode) const {
    return StateVector({mode}, {h_, v_});
}

double PolarizationState::overlap_with(const PolarizationState& other) const {
    return std::norm(std::conj(h_) * other.h_ + std::conj(v_) * other.v_);
}

StateVector polarization(cnum a, cnum b, const Mode& mode) {
    return PolarizationState(a, b).on(mode);
}

StateVector bell(BellKind kind, const Mode& mu, const Mode& nu) {
    if (mu == nu) {
        throw DuplicateModeError("Bell state needs two distinct modes");
    }
    std::vector<cnum> amps(4, cnum{0.0, 0.0});
    switch (kind) {
        case BellKind::PsiPlus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = kInvSqrt2;
            break;
        case BellKind::PsiMinus:
            amps[0b01] = kInvSqrt2;
            amps[0b10] = -kInvSqrt2;
            break;
        case BellKind::PhiPlus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = kInvSqrt2;
            break;
        case BellKind::PhiMinus:
            amps[0b00] = kInvSqrt2;
            amps[0b11] = -kInvSqrt2;
            break;
    }
    return StateVector({mu, nu}, std::move(amps));
}

StateVector pm_state(PmSign sign, const Mode& mode) {
    const double v = sign == PmSign::Plus ? kInvSqrt2 : -kInvSqrt2;
    return StateVector({mode}, {cnum{kInvSqrt2, 0.0}, cnum{v, 0.0}});
}

StateVector build_resource() {
    const StateVector h_c = StateVector::basis({kModeC}, 0);
    const StateVector v_c = StateVector::basis({kModeC}, 1);
    // Control H: inputs go to (3, 4); control V: inputs go to (4, 3).
    const StateVector straight =
        tensor(bell(BellKind::PsiPlus, kMode3, kMode3p),
               bell(BellKind::PsiPlus, kMode4, kMode4p), h_c);
    const StateVector crossed =
        tensor(bell(BellKind::PsiPlus, kMode4, kMode3p),
               bell(BellKind::PsiPlus, kMode3, kMode4p), v_c);
    const std::vector<Mode> order = {kMode3, kMode3p, kMode4, kMode4p, kModeC};
    const StateVector sum = permute_modes(straight, order) + permute_modes(crossed, order);
    // Re-enter through the validating constructor; the two branches are
    // orthogonal in the control mode, so the sum has norm sqrt(2).
    return StateVector(sum.modes(), (cnum{kInvSqrt2, 0.0} * sum).amps());
}

StateVector build_full_state(const PolarizationState& phi, const PolarizationState& psi) {
    const StateVector raw = tensor(phi.on(kMode1), psi.on(kMode2), build_resource());
    return StateVector(raw.modes(), raw.amps());
}

}  // namespace ovsim
