#include "beables/context.hpp"

#include <cmath>
#include <string>

#include "beables/errors.hpp"

namespace beables {

State make_state(Vector amplitudes, const TolerancePolicy& tol) {
    if (amplitudes.size() == 0) throw BadDimension("make_state: empty amplitude vector");
    if (!amplitudes.allFinite()) throw Error("make_state: non-finite amplitudes");
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > tol.eps_eq)
        throw Error("make_state: state norm " + std::to_string(norm) + " outside tolerance");
    return State{std::move(amplitudes)};
}

MeasurementContext make_context(State state, Matrix observable, const TolerancePolicy& tol) {
    tol.validate();
    require_square(observable, "make_context observable");
    if (observable.rows() != state.dim())
        throw DimensionMismatch("make_context: observable dimension " +
                                std::to_string(observable.rows()) + " vs state dimension " +
                                std::to_string(state.dim()));
    SpectralDecomposition spectral = spectral_decomposition(observable, tol);
    return MeasurementContext{std::move(state), std::move(observable), std::move(spectral), tol};
}

Matrix AppropriateMixture::density() const {
    if (projectors.empty()) return Matrix();
    Matrix w = Matrix::Zero(projectors.front().rows(), projectors.front().cols());
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * projectors[i];
    return w;
}

Matrix EventSpace::sum_projector() const {
    if (members.empty()) return Matrix();
    Matrix sum = Matrix::Zero(dim(), dim());
    for (const Vector& phi : members) sum += rank1(phi);
    return sum;
}

namespace {

double eigenvector_residual(const Matrix& h, const Vector& phi) {
    const Complex rayleigh = phi.dot(h * phi);  // <phi, H phi>
    return (h * phi - rayleigh * phi).norm();
}

// Shared precondition of appropriate_mixture and canonical_event_space.
void check_eigenbasis(const MeasurementContext& ctx, const std::vector<Vector>& eigenbasis) {
    const Index n = ctx.dim();
    const double h_scale = ctx.observable.norm();
    for (std::size_t i = 0; i < eigenbasis.size(); ++i) {
        const Vector& phi = eigenbasis[i];
        if (phi.size() != n)
            throw DimensionMismatch("eigenbasis vector " + std::to_string(i) +
                                    " has dimension " + std::to_string(phi.size()));
        if (std::abs(phi.norm() - 1.0) > ctx.tol.eps_eq)
            throw NotEigenbasis("eigenbasis vector " + std::to_string(i) + " is not unit norm");
        const double res = eigenvector_residual(ctx.observable, phi);
        if (res > ctx.tol.eq(h_scale))
            throw NotEigenbasis("eigenbasis vector " + std::to_string(i) +
                                " fails the eigenvector residual test: " + std::to_string(res));
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(eigenbasis[j].dot(phi)) > ctx.tol.eps_eq)
                throw NotEigenbasis("eigenbasis vectors " + std::to_string(j) + " and " +
                                    std::to_string(i) + " are not orthogonal");
    }
    if (static_cast<Index>(eigenbasis.size()) != n)
        throw IncompleteBasis("eigenbasis spans " + std::to_string(eigenbasis.size()) +
                              " of " + std::to_string(n) + " dimensions");
}

}  // namespace

AppropriateMixture appropriate_mixture(const MeasurementContext& ctx,
                                       const std::vector<Vector>& eigenbasis) {
    check_eigenbasis(ctx, eigenbasis);
    AppropriateMixture mix;
    for (const Vector& phi : eigenbasis) {
        const Complex overlap = ctx.state.amplitudes.dot(phi);  // <psi, phi>
        if (overlap_negligible(overlap, ctx.tol)) continue;
        mix.weights.push_back(std::norm(overlap));
        mix.projectors.push_back(rank1(phi));
    }
    return mix;
}

EventSpace canonical_event_space(const MeasurementContext& ctx,
                                 const std::vector<Vector>& eigenbasis) {
    check_eigenbasis(ctx, eigenbasis);
    EventSpace s;
    for (const Vector& phi : eigenbasis)
        if (!overlap_negligible(ctx.state.amplitudes.dot(phi), ctx.tol)) s.members.push_back(phi);
    return s;
}

EventSpaceValidation validate_event_space(const MeasurementContext& ctx, const EventSpace& s) {
    const Index n = ctx.dim();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.members[i].size() != n)
            throw DimensionMismatch("event space member " + std::to_string(i) +
                                    " has dimension " + std::to_string(s.members[i].size()));

    EventSpaceValidation report;
    const double h_scale = ctx.observable.norm();

    for (std::size_t i = 0; i < s.size(); ++i) {
        const double res = eigenvector_residual(ctx.observable, s.members[i]);
        if (res > ctx.tol.eq(h_scale)) {
            report.eigenvectors.passed = false;
            report.eigenvectors.offenders.push_back(i);
        }
        report.eigenvectors.worst_residual = std::max(report.eigenvectors.worst_residual, res);
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const double res = std::abs(s.members[i].dot(s.members[j]));
            if (res > ctx.tol.eps_eq) {
                report.orthogonality.passed = false;
                report.orthogonality.offenders.push_back(j);
            }
            report.orthogonality.worst_residual =
                std::max(report.orthogonality.worst_residual, res);
        }
    }

    for (std::size_t i = 0; i < s.size(); ++i) {
        const Complex overlap = ctx.state.amplitudes.dot(s.members[i]);
        if (overlap_negligible(overlap, ctx.tol)) {
            report.overlap.passed = false;
            report.overlap.offenders.push_back(i);
        }
    }

    // Maximality: within each eigenspace, the members assigned to it must
    // already absorb the state's component; otherwise a further eigenvector
    // nonorthogonal to the state could be adjoined.
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const Matrix& e_r = ctx.spectral.eigenprojections[r];
        Matrix covered = Matrix::Zero(n, n);
        for (const Vector& phi : s.members)
            if ((e_r * phi - phi).norm() <= 0.5) covered += rank1(phi);
        const double res = ((e_r - covered) * ctx.state.amplitudes).norm();
        if (res > ctx.tol.eps_eq) {
            report.maximality.passed = false;
            report.maximality.offenders.push_back(r);
        }
        report.maximality.worst_residual = std::max(report.maximality.worst_residual, res);
    }

    return report;
}

}  // namespace beables
