#include "gravent/scenario.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gravent/errors.hpp"
#include "gravent/measures.hpp"
#include "gravent/potential.hpp"

namespace gravent {
namespace {

constexpr std::array<std::string_view, kParameterCount> kParameterNames = {
    "m1", "m2", "omega1", "omega2", "d", "tau"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Precomputed axis values and strides for index -> point decoding.
class Grid {
public:
    explicit Grid(const SweepSpec& spec) : base_(spec.base) {
        for (std::size_t p = 0; p < kParameterCount; ++p)
            if (spec.axes[p]) values_[p] = spec.axes[p]->values();
    }

    SystemParams point(std::size_t index) const {
        SystemParams out = base_;
        for (std::size_t p = kParameterCount; p-- > 0;) {
            const auto& v = values_[p];
            if (v.empty()) continue;
            out.set(static_cast<Parameter>(p), v[index % v.size()]);
            index /= v.size();
        }
        return out;
    }

private:
    SystemParams base_;
    std::array<std::vector<double>, kParameterCount> values_{};
};

}  // namespace

std::string_view to_string(Parameter p) { return kParameterNames[static_cast<std::size_t>(p)]; }

std::optional<Parameter> parameter_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kParameterCount; ++i)
        if (kParameterNames[i] == name) return static_cast<Parameter>(i);
    return std::nullopt;
}

std::vector<double> Axis::values() const {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / last;
        if (spacing == Spacing::kLinear) {
            out[i] = start + (stop - start) * t;
        } else {
            out[i] = std::exp(std::log(start) + (std::log(stop) - std::log(start)) * t);
        }
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

void Axis::validate(std::string_view name) const {
    const std::string n(name);
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw DomainError("axis " + n + ": start and stop must be finite");
    if (count < 1) throw DomainError("axis " + n + ": count must be >= 1");
    if (spacing == Spacing::kLog && (start <= 0.0 || stop <= 0.0))
        throw DomainError("axis " + n + ": log spacing needs positive start and stop");
}

double SystemParams::get(Parameter p) const {
    switch (p) {
        case Parameter::kM1: return m1;
        case Parameter::kM2: return m2;
        case Parameter::kOmega1: return omega1;
        case Parameter::kOmega2: return omega2;
        case Parameter::kD: return d;
        case Parameter::kTau: return tau;
    }
    return kNaN;
}

void SystemParams::set(Parameter p, double value) {
    switch (p) {
        case Parameter::kM1: m1 = value; break;
        case Parameter::kM2: m2 = value; break;
        case Parameter::kOmega1: omega1 = value; break;
        case Parameter::kOmega2: omega2 = value; break;
        case Parameter::kD: d = value; break;
        case Parameter::kTau: tau = value; break;
    }
}

PairSystem SystemParams::to_system(const PhysicalConstants& constants) const {
    return {{m1, r1, omega1}, {m2, r2, omega2}, d, constants};
}

std::size_t SweepSpec::size() const {
    std::size_t n = 1;
    for (const auto& axis : axes) {
        if (!axis) continue;
        if (axis->count != 0 && n > std::numeric_limits<std::size_t>::max() / axis->count)
            return std::numeric_limits<std::size_t>::max();
        n *= axis->count;
    }
    return n;
}

void SweepSpec::validate() const {
    gravent::validate(constants);
    for (std::size_t p = 0; p < kParameterCount; ++p)
        if (axes[p]) axes[p]->validate(kParameterNames[p]);
    if (size() > max_points)
        throw DomainError("sweep grid has more than " + std::to_string(max_points) + " points");
}

SystemParams SweepSpec::point(std::size_t index) const { return Grid(*this).point(index); }

SweepRow evaluate_point(std::size_t index,
                        const SystemParams& params,
                        const PhysicalConstants& constants,
                        const ModelOptions& options) {
    SweepRow row;
    row.index = index;
    row.params = params;
    row.threshold = options.regime_threshold;
    try {
        const PairSystem system = params.to_system(constants);
        const ValidityAssessment validity = assess_validity(system, options.regime_threshold);
        row.ratio_x = validity.ratio_x;
        row.in_regime = validity.in_regime;

        const EntanglementReport r = report(system, params.tau);
        row.delta_phi = r.delta_phi;
        row.purity_full = r.purity_full;
        row.purity_reduced = r.purity_reduced;
        row.epsilon = r.epsilon;
        row.entropy_nats = r.entropy_nats;
        row.entropy_bits = r.entropy_bits;
        row.separable_by_measures = r.separable_by_measures;
        row.paper_condition_violated = r.paper_condition_violated;
        row.condition_discrepancy = r.condition_discrepancy;

        const ForceEstimate force = entanglement_force(system, {options.symmetrize_force});
        row.force_as_printed = force.as_printed;
        row.force_gradient = force.gradient_based;
    } catch (const Error& e) {
        row.ratio_x = row.delta_phi = row.purity_full = row.purity_reduced = kNaN;
        row.epsilon = row.entropy_nats = row.entropy_bits = kNaN;
        row.force_as_printed = row.force_gradient = kNaN;
        row.in_regime = row.separable_by_measures = false;
        row.paper_condition_violated = row.condition_discrepancy = false;
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    spec.validate();
    const Grid grid(spec);
    const auto n = static_cast<std::ptrdiff_t>(spec.size());
    std::vector<SweepRow> rows(static_cast<std::size_t>(n));
    const int workers = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(workers)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        rows[idx] = evaluate_point(idx, grid.point(idx), spec.constants, spec.options);
    }
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
    spec.validate();
    const Grid grid(spec);
    const std::size_t n = spec.size();
    std::vector<SweepRow> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(evaluate_point(i, grid.point(i), spec.constants, spec.options));
    return rows;
}

double time_to_max_entanglement(const PairSystem& system) {
    const double dv = quantum_correction(system);
    if (dv == 0.0) throw NoEntanglementError("quantum correction vanishes; entanglement never builds up");
    return 0.5 * std::numbers::pi * system.constants.hbar / std::abs(dv);
}

}  // namespace gravent
