#pragma once

#include <optional>
#include <vector>

#include "beables/matrix.hpp"
#include "beables/spectral.hpp"
#include "beables/tolerance.hpp"

namespace beables {

// Unit vector on a finite-dimensional Hilbert space.
struct State {
    Vector amplitudes;

    Index dim() const { return amplitudes.size(); }
};

State make_state(Vector amplitudes, const TolerancePolicy& tol);

// A pure state together with the measured observable; the observable's
// spectral resolution is computed once at construction.
struct MeasurementContext {
    State state;
    Matrix observable;
    SpectralDecomposition spectral;
    TolerancePolicy tol;

    Index dim() const { return state.dim(); }
};

MeasurementContext make_context(State state, Matrix observable, const TolerancePolicy& tol = {});

// Convex mixture of rank-1 eigenprojections of the context observable that
// reproduces the state's distribution over the observable's values.
struct AppropriateMixture {
    std::vector<double> weights;
    std::vector<Matrix> projectors;

    Matrix density() const;
};

// Mutually orthogonal unit vectors, each standing for the rank-1
// projection onto its ray.
struct EventSpace {
    std::vector<Vector> members;

    std::size_t size() const { return members.size(); }
    Index dim() const { return members.empty() ? 0 : members.front().size(); }
    Matrix projector(std::size_t i) const { return rank1(members.at(i)); }
    // sum of all member projections
    Matrix sum_projector() const;
};

// Per-condition validity report for an event space against a context:
// (1) members are eigenvectors of the observable, (2) members are mutually
// orthogonal, (3) members are nonorthogonal to the state, plus maximality
// (no further eigenvector nonorthogonal to the state can be adjoined).
struct EventSpaceValidation {
    struct Condition {
        bool passed = true;
        double worst_residual = 0.0;
        std::vector<std::size_t> offenders;
    };

    Condition eigenvectors;    // condition (1)
    Condition orthogonality;   // condition (2)
    Condition overlap;         // condition (3)
    Condition maximality;

    bool valid() const {
        return eigenvectors.passed && orthogonality.passed && overlap.passed &&
               maximality.passed;
    }
};

// Weights lambda_i = |<psi, phi_i>|^2 over the given eigenbasis of the
// observable; zero-weight members are dropped.
AppropriateMixture appropriate_mixture(const MeasurementContext& ctx,
                                       const std::vector<Vector>& eigenbasis);

// The event space {phi_i : |<psi, phi_i>|^2 > 0} for the given eigenbasis.
EventSpace canonical_event_space(const MeasurementContext& ctx,
                                 const std::vector<Vector>& eigenbasis);

EventSpaceValidation validate_event_space(const MeasurementContext& ctx, const EventSpace& s);

// Largest squared overlap below which a member counts as orthogonal to the
// state (the numerical reading of condition (3)).
inline bool overlap_negligible(Complex overlap, const TolerancePolicy& tol) {
    return std::norm(overlap) <= tol.eps_eq;
}

}  // namespace beables
