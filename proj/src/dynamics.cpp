#include "gravent/dynamics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "gravent/errors.hpp"
#include "gravent/potential.hpp"

namespace gravent {
namespace {

constexpr Complex kMinusI{0.0, -1.0};

Complex phase_factor(double angle) { return std::polar(1.0, -angle); }

}  // namespace

double TwoQubitState::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    return sum;
}

TwoQubitState TwoQubitState::with_global_phase(double theta) const {
    TwoQubitState out = *this;
    const Complex factor = std::polar(1.0, theta);
    for (auto& a : out.amplitudes) a *= factor;
    return out;
}

TwoQubitState TwoQubitState::product(const std::array<Complex, 2>& first,
                                     const std::array<Complex, 2>& second) {
    TwoQubitState out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out.amplitudes[2 * a + b] = first[a] * second[b];
    return out;
}

TwoQubitState initial_product_state() { return {{0.5, 0.5, 0.5, 0.5}}; }

Complex amplitude_determinant(const TwoQubitState& s) {
    return s.amplitudes[0] * s.amplitudes[3] - s.amplitudes[1] * s.amplitudes[2];
}

bool is_product_state(const TwoQubitState& state, double tolerance) {
    return std::abs(amplitude_determinant(state)) < tolerance;
}

std::array<double, 4> PotentialOperator::diagonal() const {
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = reference_energy + offsets[i];
    return out;
}

PotentialOperator build_operator(const PairSystem& system, OperatorForm form) {
    validate(system);
    const double v0 = newtonian_potential(system.body1.mass, system.body2.mass, system.separation,
                                          system.constants);
    const double dv = quantum_correction(system);

    // Same-direction branches sit at V_g - dV_g = v0.
    PotentialOperator op;
    op.reference_energy = v0;
    op.hbar = system.constants.hbar;
    const double cross = form == OperatorForm::kPhaseConsistent ? dv : dv - v0;
    op.offsets = {0.0, cross, cross, 0.0};
    return op;
}

PhaseSet PhaseSet::relative(double delta_phi) { return {0.0, -delta_phi, delta_phi}; }

PhaseSet accumulated_phase(const PairSystem& system, double tau) {
    validate(system);
    if (!std::isfinite(tau) || tau < 0.0)
        throw DomainError("accumulated_phase: tau must be finite and non-negative");
    if (system.constants.hbar <= 0.0)
        throw DomainError("accumulated_phase: hbar must be positive");

    const auto& b1 = system.body1;
    const auto& b2 = system.body2;
    const double d = system.separation;
    const double p1 = b1.mass * b1.omega;
    const double p2 = b2.mass * b2.omega;

    PhaseSet out;
    // hbar cancels: the phase depends only on G, masses, frequencies, d and tau.
    out.delta_phi = system.constants.G * b1.mass * b2.mass * tau / (d * d * d) *
                    (1.0 / p1 + 1.0 / p2 + 2.0 / (std::sqrt(p1) * std::sqrt(p2)));

    const double v0 = newtonian_potential(b1.mass, b2.mass, d, system.constants);
    const double dv = quantum_correction(system);
    out.phi = v0 * tau / system.constants.hbar;
    out.phi_prime = (v0 + dv) * tau / system.constants.hbar;
    return out;
}

TwoQubitState evolve_closed_form(const TwoQubitState& psi0, const PhaseSet& phases) {
    // phi' = phi + signed delta; factor it so the small relative phase is not
    // recovered from a difference of two large angles.
    const Complex global = phase_factor(phases.phi);
    const Complex relative = phase_factor(phases.signed_delta_phi());
    TwoQubitState out;
    out.amplitudes[0] = global * psi0.amplitudes[0];
    out.amplitudes[1] = global * relative * psi0.amplitudes[1];
    out.amplitudes[2] = global * relative * psi0.amplitudes[2];
    out.amplitudes[3] = global * psi0.amplitudes[3];
    return out;
}

TwoQubitState evolve_numeric(const TwoQubitState& psi0,
                             const PotentialOperator& op,
                             double tau,
                             int steps,
                             Propagator method,
                             Diagnostics* diagnostics) {
    if (steps < 1) throw DomainError("evolve_numeric: steps must be >= 1");
    if (!std::isfinite(tau) || tau < 0.0)
        throw DomainError("evolve_numeric: tau must be finite and non-negative");
    if (!(op.hbar > 0.0)) throw DomainError("evolve_numeric: hbar must be positive");
    if (tau == 0.0) return psi0;

    // Angular rates of the offsets, rad/s.
    std::array<double, 4> rate{};
    for (std::size_t i = 0; i < 4; ++i) rate[i] = op.offsets[i] / op.hbar;

    TwoQubitState psi = psi0;
    if (method == Propagator::kExactDiagonal) {
        for (std::size_t i = 0; i < 4; ++i) psi.amplitudes[i] *= phase_factor(rate[i] * tau);
    } else {
        const double h = tau / steps;
        if (diagnostics) {
            const double max_rate = std::abs(*std::max_element(
                rate.begin(), rate.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
            if (h < DBL_MIN || h <= tau * DBL_EPSILON)
                diagnostics->warn("evolve_numeric: step size underflow (tau/steps = " +
                                  std::to_string(h) + ")");
            if (max_rate * h > 0.5)
                diagnostics->warn("evolve_numeric: phase per step " + std::to_string(max_rate * h) +
                                  " rad exceeds 0.5; RK4 accuracy degraded");
        }
        auto deriv = [&](const std::array<Complex, 4>& y) {
            std::array<Complex, 4> dy{};
            for (std::size_t i = 0; i < 4; ++i) dy[i] = kMinusI * rate[i] * y[i];
            return dy;
        };
        auto axpy = [](const std::array<Complex, 4>& y, double a, const std::array<Complex, 4>& k) {
            std::array<Complex, 4> out{};
            for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + a * k[i];
            return out;
        };
        auto& y = psi.amplitudes;
        for (int s = 0; s < steps; ++s) {
            const auto k1 = deriv(y);
            const auto k2 = deriv(axpy(y, 0.5 * h, k1));
            const auto k3 = deriv(axpy(y, 0.5 * h, k2));
            const auto k4 = deriv(axpy(y, h, k3));
            for (std::size_t i = 0; i < 4; ++i)
                y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }

    const Complex global = phase_factor(op.reference_energy * tau / op.hbar);
    for (auto& a : psi.amplitudes) a *= global;
    return psi;
}

}  // namespace gravent
