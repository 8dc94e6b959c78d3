#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <numbers>

#include "gravent/errors.hpp"
#include "gravent/measures.hpp"
#include "gravent/potential.hpp"
#include "gravent/scenario.hpp"
#include "oracle.hpp"

using namespace gravent;
using std::numbers::pi;

namespace {

SystemParams reference_params(double tau = 1.0) { return {1e-14, 1e-14, 0.0, 0.0, 1e5, 1e5, 1e-6, tau}; }

std::optional<Axis>& axis(SweepSpec& spec, Parameter p) { return spec.axes[static_cast<std::size_t>(p)]; }

// Bitwise row equality (NaN-safe).
bool same_bits(const SweepRow& a, const SweepRow& b) {
    auto bits = [](double x) {
        std::uint64_t u;
        std::memcpy(&u, &x, sizeof u);
        return u;
    };
    const double da[] = {a.params.m1, a.params.m2, a.params.r1, a.params.r2, a.params.omega1, a.params.omega2,
                         a.params.d, a.params.tau, a.ratio_x, a.threshold, a.delta_phi, a.purity_full,
                         a.purity_reduced, a.epsilon, a.entropy_nats, a.entropy_bits, a.force_as_printed,
                         a.force_gradient};
    const double db[] = {b.params.m1, b.params.m2, b.params.r1, b.params.r2, b.params.omega1, b.params.omega2,
                         b.params.d, b.params.tau, b.ratio_x, b.threshold, b.delta_phi, b.purity_full,
                         b.purity_reduced, b.epsilon, b.entropy_nats, b.entropy_bits, b.force_as_printed,
                         b.force_gradient};
    for (std::size_t i = 0; i < std::size(da); ++i)
        if (bits(da[i]) != bits(db[i])) return false;
    return a.index == b.index && a.in_regime == b.in_regime &&
           a.separable_by_measures == b.separable_by_measures &&
           a.paper_condition_violated == b.paper_condition_violated &&
           a.condition_discrepancy == b.condition_discrepancy && a.status == b.status;
}

}  // namespace

TEST_CASE("axis values") {
    const auto lin = Axis{0.0, 1.0, 5, Spacing::kLinear}.values();
    CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto log = Axis{1e-6, 1e-3, 4, Spacing::kLog}.values();
    REQUIRE(log.size() == 4);
    CHECK(log.front() == 1e-6);
    CHECK(log[1] == doctest::Approx(1e-5).epsilon(1e-13));
    CHECK(log[2] == doctest::Approx(1e-4).epsilon(1e-13));
    CHECK(log.back() == 1e-3);
    CHECK(Axis{3.0, 9.0, 1}.values() == std::vector<double>{3.0});
    CHECK_THROWS_AS(Axis({0.0, 1.0, 3, Spacing::kLog}).validate("m1"), DomainError);
    CHECK_THROWS_AS(Axis({1.0, 2.0, 0}).validate("m1"), DomainError);
}

TEST_CASE("grid order: tau varies fastest") {
    SweepSpec spec;
    spec.base = reference_params();
    axis(spec, Parameter::kD) = Axis{1e-6, 2e-6, 2};
    axis(spec, Parameter::kTau) = Axis{1.0, 3.0, 3};
    REQUIRE(spec.size() == 6);
    const auto rows = run_sweep_serial(spec);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i].index == i);
        CHECK(rows[i].params.d == (i < 3 ? 1e-6 : 2e-6));
        CHECK(rows[i].params.tau == 1.0 + static_cast<double>(i % 3));
    }
}

TEST_CASE("single-point sweep equals a direct report") {
    SweepSpec spec;
    spec.base = reference_params(3.0e10);
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 1);
    const auto sys = spec.base.to_system(spec.constants);
    const auto r = report(sys, 3.0e10);
    CHECK(rows[0].delta_phi == r.delta_phi);
    CHECK(rows[0].epsilon == r.epsilon);
    CHECK(rows[0].entropy_nats == r.entropy_nats);
    CHECK(rows[0].purity_reduced == r.purity_reduced);
    CHECK(rows[0].ratio_x == assess_validity(sys).ratio_x);
    CHECK(rows[0].force_gradient == entanglement_force(sys).gradient_based);
    CHECK(rows[0].ok());
}

TEST_CASE("tau sweep: delta_phi linear in tau") {
    SweepSpec spec;
    spec.base = reference_params();
    axis(spec, Parameter::kTau) = Axis{0.0, 1e11, 21};
    const auto rows = run_sweep(spec);
    const double rate = rows.back().delta_phi / rows.back().params.tau;
    for (const auto& r : rows) CHECK(r.delta_phi == doctest::Approx(rate * r.params.tau).epsilon(1e-14));
}

TEST_CASE("d sweep: log-log slope -3") {
    SweepSpec spec;
    spec.base = reference_params();
    axis(spec, Parameter::kD) = Axis{1e-6, 1e-5, 11, Spacing::kLog};
    const auto rows = run_sweep(spec);
    // Least-squares slope of log(delta_phi) vs log(d).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        const double x = std::log(r.params.d), y = std::log(r.delta_phi);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(std::abs(slope + 3.0) <= 0.01);
}

TEST_CASE("failures are recorded, not thrown") {
    SweepSpec spec;
    spec.base = reference_params();
    spec.base.m2 = -1.0; // invalid for every point
    axis(spec, Parameter::kTau) = Axis{0.0, 1.0, 3};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK_FALSE(r.ok());
        CHECK(r.status.find("mass") != std::string::npos);
        CHECK(std::isnan(r.delta_phi));
    }
}

TEST_CASE("out-of-regime rows are kept and flagged") {
    SweepSpec spec;
    spec.base = reference_params();
    axis(spec, Parameter::kD) = Axis{1e-13, 1e-6, 8, Spacing::kLog};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 8);
    std::size_t flagged = 0;
    for (const auto& r : rows) {
        CHECK(r.in_regime == (r.ratio_x < 0.1));
        if (!r.in_regime) ++flagged;
        CHECK(r.ok());
    }
    CHECK(flagged > 0);
    CHECK(flagged < rows.size());
}

TEST_CASE("grid cap") {
    SweepSpec spec;
    spec.base = reference_params();
    spec.max_points = 100;
    axis(spec, Parameter::kD) = Axis{1e-6, 1e-5, 11};
    axis(spec, Parameter::kTau) = Axis{1.0, 2.0, 10};
    CHECK_THROWS_AS(run_sweep(spec), DomainError);
    axis(spec, Parameter::kTau)->count = 9;
    CHECK(run_sweep(spec).size() == 99);
}

TEST_CASE("parallel and serial sweeps are bitwise identical for any worker count") {
    SweepSpec spec;
    spec.base = reference_params();
    axis(spec, Parameter::kM1) = Axis{1e-15, 1e-12, 5, Spacing::kLog};
    axis(spec, Parameter::kOmega2) = Axis{1e3, 1e6, 4, Spacing::kLog};
    axis(spec, Parameter::kD) = Axis{1e-7, 1e-5, 5, Spacing::kLog};
    axis(spec, Parameter::kTau) = Axis{0.0, 1e12, 10};
    const auto serial = run_sweep_serial(spec);
    for (int threads : {1, 2, 3, 8}) {
        const auto parallel = run_sweep(spec, threads);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_bits(parallel[i], serial[i]));
    }
}

TEST_CASE("time_to_max_entanglement") {
    const auto ref = oracle::reference_system();
    const double tau_star = time_to_max_entanglement(ref);
    CHECK(tau_star == doctest::Approx(oracle::frozen::kTauStar).epsilon(1e-12));

    auto doubled = ref;
    doubled.separation *= 2;
    CHECK(time_to_max_entanglement(doubled) == doctest::Approx(8 * tau_star).epsilon(1e-14));

    CHECK(report(ref, tau_star).entropy_nats == doctest::Approx(std::numbers::ln2).epsilon(1e-9));

    oracle::SystemSampler sample(51);
    for (int i = 0; i < 50; ++i) {
        const auto sys = sample();
        const double t = time_to_max_entanglement(sys);
        CHECK(accumulated_phase(sys, t).delta_phi == doctest::Approx(pi / 2).epsilon(1e-12));
        CHECK(std::abs(report(sys, t).entropy_nats - std::numbers::ln2) < 1e-9);
    }

    auto classical = ref;
    classical.constants.hbar = 0.0;
    CHECK_THROWS_AS(time_to_max_entanglement(classical), NoEntanglementError);
}
