#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beables/algebra.hpp"
#include "beables/context.hpp"

namespace beables {

// Generating set for the group of unitaries that fix the context state and
// commute with the observable. Phase and pair-swap generators act on the
// orthogonal complement of the state's component inside each eigenspace,
// so every invariant operator of the generated group is invariant under the
// whole stabilizer group.
struct SymmetryGenerators {
    std::vector<Matrix> unitaries;
    std::vector<std::string> descriptions;

    std::size_t size() const { return unitaries.size(); }
};

SymmetryGenerators symmetry_generators(const MeasurementContext& ctx);

// Commutant of the algebra generated by the context symmetries,
// cross-checked against the closed-form block answer: matrix units on the
// normalized in-block state components plus a scalar block on each in-block
// complement.
OperatorAlgebra invariant_algebra(const MeasurementContext& ctx);

struct DefinabilityResult {
    bool definable = true;
    std::optional<std::size_t> witness_member;
    Matrix witness_symmetry;    // a group element that moves the member
    double residual = 0.0;      // ||U* P U - P|| for the witness
};

// An event space is definable when every member projection is invariant
// under all context symmetries, equivalently lies in the invariant algebra.
DefinabilityResult is_definable(const MeasurementContext& ctx, const EventSpace& s);
DefinabilityResult is_definable(const MeasurementContext& ctx, const EventSpace& s,
                                const OperatorAlgebra& invariants,
                                const SymmetryGenerators& gens);

// The normalized eigenspace components of the state: the only appropriate
// event space whose members all lie in the invariant algebra. Verifies its
// own validity, definability, and the absence of alternatives among the
// rank-1 elements of the invariant algebra.
EventSpace unique_definable_event_space(const MeasurementContext& ctx);

}  // namespace beables
