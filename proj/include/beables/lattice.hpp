#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beables/algebra.hpp"
#include "beables/context.hpp"
#include "beables/matrix.hpp"

namespace beables {

// Membership in Def(S): every event-space atom is either below the tested
// projection or orthogonal to it.
struct DefMembership {
    bool member = false;
    // index of the first atom violating both alternatives, when not a member
    std::optional<std::size_t> witness;
    double residual = 0.0;
};

DefMembership def_membership(const EventSpace& s, const Matrix& p, const TolerancePolicy& tol);

// Structure of a Def(S) member: the atoms below it plus the remainder
// supported on the orthocomplement of the whole event space.
struct DefDecomposition {
    std::vector<std::size_t> atoms;  // indices of atoms below p
    Matrix residual_projection;      // p minus those atoms; lives under I - sum(S)
};

DefDecomposition def_decompose(const EventSpace& s, const Matrix& p, const TolerancePolicy& tol);

// Two-valued assignment determined by one atom of the event space being
// "true": a projection holds iff it dominates that atom.
struct Valuation {
    std::size_t atom_index = 0;
    Vector atom;

    // requires p to be a Def(S) member for the owning event space
    bool operator()(const Matrix& p, const TolerancePolicy& tol) const;
};

// Mixture of valuations reproducing the Born weights of the context state.
struct ClassicalRepresentation {
    std::vector<double> weights;
    std::vector<Valuation> valuations;

    // sum_i lambda_i v_i(p)
    double expectation(const Matrix& p, const TolerancePolicy& tol) const;
};

ClassicalRepresentation classical_representation(const MeasurementContext& ctx,
                                                 const EventSpace& s,
                                                 const std::vector<Matrix>& probes);

enum class ClassicalityMode { pairwise, algebra };

// Whether the family can be described classically in the given state:
// all commutators annihilate the state, either over the family as given
// (pairwise) or over the *-algebra it generates (algebra).
struct ClassicalityResult {
    bool classical = true;
    Matrix witness_a, witness_b;
    double residual = 0.0;
};

ClassicalityResult is_classical_family(const State& psi, const std::vector<Matrix>& ops,
                                       ClassicalityMode mode, const TolerancePolicy& tol);

// Contextual reality-criterion membership: the projection commutes with
// every spectral projection of the observable on the state, and is strictly
// correlated with a projection in the lattice generated by the spectral
// projections.
struct RealityMembership {
    bool member = false;
    bool candidate = false;     // state-commutation with all spectral projections
    bool correlated = false;    // exists P' with P' psi = P psi
    double candidacy_residual = 0.0;
    double correlation_residual = 0.0;
    std::vector<std::size_t> correlate_blocks;  // eigenvalue indices forming P'
};

RealityMembership reality_criterion_membership(const MeasurementContext& ctx, const Matrix& p);

// Randomized search for counterexamples to the maximality of Def(S):
// every sampled rank-1 projection outside Def(S) must break algebra-mode
// classicality when adjoined to the Def(S) atoms and their orthocomplement
// block.
struct MaximalityProbeReport {
    std::size_t samples = 0;
    std::size_t members_hit = 0;
    std::uint64_t seed = 0;
    struct Violation {
        Matrix projection;
        double commutator_residual;
    };
    std::vector<Violation> violations;
};

MaximalityProbeReport maximality_probe(const MeasurementContext& ctx, const EventSpace& s,
                                       std::size_t samples, std::uint64_t seed);

// Generators of the *-algebra reached from Def(S): the atoms plus an
// orthonormal operator basis of the orthocomplement block.
std::vector<Matrix> def_algebra_generators(const EventSpace& s, const TolerancePolicy& tol);

// Seeded sample from Def(S): a random subset of atoms plus a random
// subprojection of the orthocomplement of the event space.
Matrix random_def_member(const EventSpace& s, Rng& rng);

}  // namespace beables
