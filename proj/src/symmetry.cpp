#include "beables/symmetry.hpp"

#include <cmath>
#include <string>

#include "beables/errors.hpp"

namespace beables {

namespace {

// Orthonormal basis of the orthogonal complement of psi_k inside the
// eigenspace (the whole eigenspace when psi_k vanishes).
std::vector<Vector> block_complement_basis(const SpectralDecomposition& spectral,
                                           std::size_t r, const Vector& psi,
                                           const TolerancePolicy& tol) {
    const Matrix block_basis = spectral.eigenbasis(r);
    const Vector component = spectral.eigenprojections[r] * psi;
    const double norm = component.norm();

    std::vector<Vector> out;
    std::vector<Vector> kept;
    if (norm > tol.eps_eq) kept.push_back(component / norm);
    for (Index c = 0; c < block_basis.cols(); ++c) {
        Vector v = block_basis.col(c);
        for (const Vector& u : kept) v -= u.dot(v) * u;
        for (const Vector& u : kept) v -= u.dot(v) * u;
        if (v.norm() > 0.5 / std::sqrt(static_cast<double>(block_basis.cols()) + 1.0)) {
            v.normalize();
            kept.push_back(v);
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

SymmetryGenerators symmetry_generators(const MeasurementContext& ctx) {
    const Index n = ctx.dim();
    SymmetryGenerators gens;
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const std::vector<Vector> comp =
            block_complement_basis(ctx.spectral, r, ctx.state.amplitudes, ctx.tol);
        for (std::size_t j = 0; j < comp.size(); ++j) {
            // phase i on one complement direction
            Matrix phase = Matrix::Identity(n, n) + (Complex(0, 1) - 1.0) * rank1(comp[j]);
            gens.unitaries.push_back(std::move(phase));
            gens.descriptions.push_back("phase(block " + std::to_string(r) + ", dir " +
                                        std::to_string(j) + ")");
            if (j + 1 < comp.size()) {
                Matrix swap = Matrix::Identity(n, n) - rank1(comp[j]) - rank1(comp[j + 1]) +
                              comp[j] * comp[j + 1].adjoint() + comp[j + 1] * comp[j].adjoint();
                gens.unitaries.push_back(std::move(swap));
                gens.descriptions.push_back("swap(block " + std::to_string(r) + ", dirs " +
                                            std::to_string(j) + "," + std::to_string(j + 1) +
                                            ")");
            }
        }
    }
    return gens;
}

namespace {

// Closed-form invariant algebra: matrix units on the normalized nonzero
// state components, plus one scalar element per nonempty in-block
// complement.
OperatorAlgebra closed_form_invariants(const MeasurementContext& ctx) {
    const Index n = ctx.dim();
    std::vector<Vector> hats;
    std::vector<Matrix> complements;
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const Matrix& e = ctx.spectral.eigenprojections[r];
        const Vector component = e * ctx.state.amplitudes;
        const double norm = component.norm();
        Matrix comp_proj = e;
        if (norm > ctx.tol.eps_eq) {
            hats.push_back(component / norm);
            comp_proj -= rank1(hats.back());
        }
        if (comp_proj.norm() > 0.5) complements.push_back(comp_proj);
    }

    OperatorAlgebra out;
    out.dim = n;
    SpanBasis span(n);
    for (const Vector& a : hats)
        for (const Vector& b : hats) span.append(a * b.adjoint(), 1e-12);
    for (const Matrix& c : complements) span.append(c, 1e-12);
    out.basis = span.elements();
    return out;
}

}  // namespace

OperatorAlgebra invariant_algebra(const MeasurementContext& ctx) {
    const SymmetryGenerators gens = symmetry_generators(ctx);
    const OperatorAlgebra group_algebra = algebra_closure(ctx.dim(), gens.unitaries, ctx.tol);
    OperatorAlgebra numeric = commutant(group_algebra, ctx.tol);
    const OperatorAlgebra closed = closed_form_invariants(ctx);
    if (!same_span(numeric, closed, 10.0 * ctx.tol.eps_eq))
        throw ConsistencyError("invariant_algebra: numeric commutant (dim " +
                               std::to_string(numeric.size()) +
                               ") disagrees with the closed-form block answer (dim " +
                               std::to_string(closed.size()) + ")");
    return numeric;
}

DefinabilityResult is_definable(const MeasurementContext& ctx, const EventSpace& s,
                                const OperatorAlgebra& invariants,
                                const SymmetryGenerators& gens) {
    DefinabilityResult out;
    const SpanBasis span = invariants.span();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Matrix q = s.projector(i);
        if (span.contains(q, ctx.tol.eps_eq)) continue;
        out.definable = false;
        out.witness_member = i;
        // invariance under the group fails at some generator
        double best = 0.0;
        for (const Matrix& u : gens.unitaries) {
            const double moved = (u.adjoint() * q * u - q).norm();
            if (moved > best) {
                best = moved;
                out.witness_symmetry = u;
            }
        }
        out.residual = best;
        if (best <= ctx.tol.eps_eq)
            throw ConsistencyError(
                "is_definable: member outside the invariant algebra but fixed by every "
                "generator");
        return out;
    }
    return out;
}

DefinabilityResult is_definable(const MeasurementContext& ctx, const EventSpace& s) {
    return is_definable(ctx, s, invariant_algebra(ctx), symmetry_generators(ctx));
}

EventSpace unique_definable_event_space(const MeasurementContext& ctx) {
    EventSpace out;
    std::vector<std::size_t> blocks;
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const Vector component = ctx.spectral.eigenprojections[r] * ctx.state.amplitudes;
        const double norm = component.norm();
        if (norm > ctx.tol.eps_eq) {
            out.members.push_back(fix_phase(component / norm));
            blocks.push_back(r);
        }
    }

    const EventSpaceValidation validation = validate_event_space(ctx, out);
    if (!validation.valid())
        throw ConsistencyError("unique_definable_event_space: constructed space fails validation");
    if (!is_definable(ctx, out).definable)
        throw ConsistencyError("unique_definable_event_space: constructed space not definable");

    // No alternative exists among the rank-1 elements of the invariant
    // algebra: a rank-1 projection there is either a unit combination of the
    // normalized state components or a one-dimensional block complement.
    // Mixed combinations fail the eigenvector condition because the block
    // eigenvalues are distinct; complements are orthogonal to the state.
    for (std::size_t a = 0; a < out.size(); ++a) {
        for (std::size_t b = a + 1; b < out.size(); ++b) {
            const Vector mix = (out.members[a] + out.members[b]) / std::sqrt(2.0);
            const Complex rayleigh = mix.dot(ctx.observable * mix);
            const double res = (ctx.observable * mix - rayleigh * mix).norm();
            if (res <= ctx.tol.eps_eig)
                throw ConsistencyError(
                    "unique_definable_event_space: a cross-block combination passes the "
                    "eigenvector test; uniqueness is void");
        }
    }
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const Matrix& e = ctx.spectral.eigenprojections[r];
        const Vector component = e * ctx.state.amplitudes;
        Matrix comp_proj = e;
        if (component.norm() > ctx.tol.eps_eq)
            comp_proj -= rank1(Vector(component / component.norm()));
        const Index rank = static_cast<Index>(std::llround(comp_proj.trace().real()));
        if (rank == 1) {
            // the complement direction must be orthogonal to the state
            Eigen::SelfAdjointEigenSolver<Matrix> solver(comp_proj);
            const Vector dir = solver.eigenvectors().col(ctx.dim() - 1);
            if (std::abs(ctx.state.amplitudes.dot(dir)) > ctx.tol.eps_eq)
                throw ConsistencyError(
                    "unique_definable_event_space: rank-1 block complement overlaps the state");
        }
    }
    return out;
}

}  // namespace beables
