#include "gravent/measures.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gravent/errors.hpp"

namespace gravent {

template <int N>
DensityMatrix<N> DensityMatrix<N>::checked(const Matrix& entries, double tolerance) {
    if (!entries.allFinite()) throw DomainError("density matrix has non-finite entries");
    const DensityDefects d = inspect<N>(entries);
    if (d.hermiticity > tolerance)
        throw DomainError("density matrix is not Hermitian (defect " + std::to_string(d.hermiticity) + ")");
    if (d.trace > tolerance)
        throw DomainError("density matrix trace differs from 1 by " + std::to_string(d.trace));
    if (d.min_eigenvalue < -tolerance)
        throw PositivityError("density matrix has eigenvalue " + std::to_string(d.min_eigenvalue));
    return DensityMatrix(entries);
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

DensityMatrix4 density_from_state(const TwoQubitState& psi) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = psi.amplitudes[static_cast<std::size_t>(i)];
    return DensityMatrix4::checked(v * v.adjoint());
}

DensityMatrix2 partial_trace(const DensityMatrix4& rho, Subsystem keep) {
    // Index of |a b> is 2a + b, a for particle 1, b for particle 2.
    ComplexMatrix<2> out = ComplexMatrix<2>::Zero();
    const auto& m = rho.entries();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Subsystem::kFirst ? m(2 * i + k, 2 * j + k)
                                                       : m(2 * k + i, 2 * k + j);
            }
        }
    }
    return DensityMatrix2::checked(out);
}

double linear_entropy(const DensityMatrix2& rho_reduced) { return 1.0 - purity(rho_reduced); }

Entropy von_neumann_entropy(const DensityMatrix2& rho_reduced) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<2>> solver(rho_reduced.entries(),
                                                           Eigen::EigenvaluesOnly);
    double nats = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lambda = solver.eigenvalues()(i);
        if (lambda < -kPositivityFloor)
            throw PositivityError("reduced density matrix has eigenvalue " + std::to_string(lambda));
        if (lambda > 0.0) nats -= lambda * std::log(lambda);
    }
    return {nats, nats / std::numbers::ln2};
}

double distance_to_full_turn(double delta_phi) {
    constexpr double kTurn = 2.0 * std::numbers::pi;
    const double r = std::fmod(std::abs(delta_phi), kTurn);
    return std::min(r, kTurn - r);
}

EntanglementReport report_from_state(const TwoQubitState& evolved, double delta_phi) {
    const DensityMatrix4 rho = density_from_state(evolved);
    const DensityMatrix2 rho1 = partial_trace(rho, Subsystem::kFirst);
    const DensityMatrix2 rho2 = partial_trace(rho, Subsystem::kSecond);
    const Entropy s = von_neumann_entropy(rho1);

    EntanglementReport out;
    out.delta_phi = delta_phi;
    out.purity_full = purity(rho);
    out.purity_reduced = purity(rho1);
    out.epsilon = linear_entropy(rho1);
    out.entropy_nats = s.nats;
    out.entropy_bits = s.bits;
    out.separable_by_measures = out.epsilon < kSeparabilityTolerance;
    out.paper_condition_violated = distance_to_full_turn(delta_phi) < kPhaseConditionTolerance;
    out.condition_discrepancy = out.separable_by_measures && !out.paper_condition_violated;
    out.amplitude_rank_one = is_product_state(evolved, kSeparabilityTolerance);
    out.rho = rho.entries();
    out.rho1 = rho1.entries();
    out.rho2 = rho2.entries();
    return out;
}

EntanglementReport report(const PairSystem& system, double tau) {
    const PhaseSet phases = accumulated_phase(system, tau);
    const TwoQubitState evolved = evolve_closed_form(initial_product_state(), phases);
    return report_from_state(evolved, phases.delta_phi);
}

}  // namespace gravent
