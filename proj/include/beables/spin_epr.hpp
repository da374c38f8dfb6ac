#pragma once

#include <map>
#include <string>

#include "beables/context.hpp"
#include "beables/report.hpp"
#include "beables/symmetry.hpp"

namespace beables {

// Canned two-spin scenario: the singlet state, the spin observables and
// single-spin eigenprojections, and the three product event spaces for the
// first-spin x measurement.
struct SpinScenario {
    MeasurementContext ctx;  // (singlet, sigma_x (x) I)

    std::map<std::string, Vector> kets;          // xp, xm, yp, ym, zp, zm (2-dim)
    std::map<std::string, Matrix> projections;   // Pxp ... Pzm (2x2)
    std::map<std::string, Matrix> observables;   // sx1, sy1, sz1, sx2, sy2, sz2
    std::map<std::string, EventSpace> event_spaces;  // S_xx, S_xy, S_xz

    const Vector& singlet() const { return ctx.state.amplitudes; }
    // full product eigenbasis of sigma_x (x) I built on the second-spin
    // basis named by axis ("x", "y", "z")
    std::vector<Vector> product_eigenbasis(const std::string& axis) const;
};

SpinScenario build_spin_scenario(const TolerancePolicy& tol = {});

struct AnticorrelationReport {
    struct Axis {
        double correlation = 0.0;  // <psi, (sigma_a (x) I)(I (x) sigma_a) psi>
        double dispersion = 0.0;   // dispersion of sigma_a (x) I + I (x) sigma_a
    };
    std::map<std::string, Axis> axes;
    double cross_xy = 0.0;  // <psi, (sigma_x (x) I)(I (x) sigma_y) psi>
};

AnticorrelationReport anticorrelation_check(const SpinScenario& scenario);

// The unitary from the uniqueness argument: difference of the two
// rank-2 projections that split the x-product basis by anticorrelation.
Matrix proof_symmetry(const SpinScenario& scenario);

// A derived witness fixing the state and the observable while mapping the
// x/y product projections onto x/z ones (in-block quarter rotations about
// the second-spin x axis).
Matrix derived_xy_to_xz_witness(const SpinScenario& scenario);

// Full verification of the scenario: event-space validity, mixtures,
// anticorrelations, definability and uniqueness, reality-criterion facts,
// classical representation, and the maximality probe.
std::vector<Assertion> spin_epr_assertions(const SpinScenario& scenario, std::size_t samples,
                                           std::uint64_t seed);

Report spin_epr_report(std::size_t samples, std::uint64_t seed, const TolerancePolicy& tol = {});

}  // namespace beables
