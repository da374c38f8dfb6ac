#include "beables/lattice.hpp"

#include <cmath>
#include <string>

#include "beables/errors.hpp"

namespace beables {

namespace {

void require_projection(const Matrix& p, const TolerancePolicy& tol, const char* what) {
    require_square(p, what);
    if (!is_projection(p, 10.0 * tol.eps_eq))
        throw NotProjection(std::string(what) + ": input is not an orthogonal projection");
}

}  // namespace

DefMembership def_membership(const EventSpace& s, const Matrix& p, const TolerancePolicy& tol) {
    require_projection(p, tol, "def_membership");
    if (!s.members.empty() && p.rows() != s.dim())
        throw DimensionMismatch("def_membership: projection dimension mismatch");

    DefMembership out;
    out.member = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vector& phi = s.members[i];
        const Vector image = p * phi;
        const double below = (image - phi).norm();  // Q <= P  <=>  P phi = phi
        const double killed = image.norm();         // QP = 0  <=>  P phi = 0
        const double res = std::min(below, killed);
        if (res > tol.eps_eq) {
            out.member = false;
            out.witness = i;
            out.residual = res;
            return out;
        }
        out.residual = std::max(out.residual, res);
    }
    return out;
}

DefDecomposition def_decompose(const EventSpace& s, const Matrix& p, const TolerancePolicy& tol) {
    const DefMembership m = def_membership(s, p, tol);
    if (!m.member)
        throw NotMember("def_decompose: projection is not a Def(S) member (atom " +
                        std::to_string(m.witness.value_or(0)) + " violates both alternatives)");

    DefDecomposition out;
    Matrix below_sum = Matrix::Zero(p.rows(), p.cols());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((p * s.members[i] - s.members[i]).norm() <= tol.eps_eq) {
            out.atoms.push_back(i);
            below_sum += s.projector(i);
        }
    }
    out.residual_projection = p - below_sum;
    return out;
}

bool Valuation::operator()(const Matrix& p, const TolerancePolicy& tol) const {
    const Vector image = p * atom;
    const double below = (image - atom).norm();
    if (below <= tol.eps_eq) return true;
    const double killed = image.norm();
    if (killed <= tol.eps_eq) return false;
    throw NotMember("Valuation: projection is not a Def(S) member for atom " +
                    std::to_string(atom_index));
}

double ClassicalRepresentation::expectation(const Matrix& p, const TolerancePolicy& tol) const {
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (valuations[i](p, tol)) total += weights[i];
    return total;
}

ClassicalRepresentation classical_representation(const MeasurementContext& ctx,
                                                 const EventSpace& s,
                                                 const std::vector<Matrix>& probes) {
    ClassicalRepresentation rep;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Complex overlap = ctx.state.amplitudes.dot(s.members[i]);
        rep.weights.push_back(std::norm(overlap));
        rep.valuations.push_back(Valuation{i, s.members[i]});
    }
    // Born check on the supplied probes; membership failures propagate.
    for (const Matrix& p : probes) {
        const double classical = rep.expectation(p, ctx.tol);
        const double born = (ctx.state.amplitudes.dot(p * ctx.state.amplitudes)).real();
        if (std::abs(classical - born) > 10.0 * ctx.tol.eps_eq)
            throw ConsistencyError("classical_representation: Born probability " +
                                   std::to_string(born) + " vs mixture value " +
                                   std::to_string(classical));
    }
    return rep;
}

ClassicalityResult is_classical_family(const State& psi, const std::vector<Matrix>& ops,
                                       ClassicalityMode mode, const TolerancePolicy& tol) {
    const Index n = psi.dim();
    for (const Matrix& a : ops) {
        require_square(a, "is_classical_family");
        if (a.rows() != n) throw DimensionMismatch("is_classical_family: operator dimension");
    }

    const std::vector<Matrix>* family = &ops;
    OperatorAlgebra closed;
    if (mode == ClassicalityMode::algebra) {
        closed = algebra_closure(n, ops, tol);
        family = &closed.basis;
    }

    ClassicalityResult out;
    for (std::size_t i = 0; i < family->size(); ++i) {
        for (std::size_t j = i + 1; j < family->size(); ++j) {
            const Matrix& a = (*family)[i];
            const Matrix& b = (*family)[j];
            const Vector comm = a * (b * psi.amplitudes) - b * (a * psi.amplitudes);
            const double res = comm.norm() / (1.0 + a.norm() * b.norm());
            if (res > tol.eps_eq && res > out.residual) {
                out.classical = false;
                out.witness_a = a;
                out.witness_b = b;
                out.residual = res;
            }
        }
    }
    return out;
}

RealityMembership reality_criterion_membership(const MeasurementContext& ctx, const Matrix& p) {
    require_projection(p, ctx.tol, "reality_criterion_membership");
    if (p.rows() != ctx.dim())
        throw DimensionMismatch("reality_criterion_membership: projection dimension");

    RealityMembership out;
    const Vector& psi = ctx.state.amplitudes;

    out.candidate = true;
    for (const Matrix& e : ctx.spectral.eigenprojections) {
        const double res = (p * (e * psi) - e * (p * psi)).norm();
        out.candidacy_residual = std::max(out.candidacy_residual, res);
        if (res > ctx.tol.eps_eq) out.candidate = false;
    }

    // The correlate P' ranges over sums of eigenprojections. Blocks are
    // orthogonal, so the distance ||P' psi - P psi|| is minimized block by
    // block: include E_r exactly when that shrinks the block residual.
    double sq = 0.0;
    const Vector p_psi = p * psi;
    for (std::size_t r = 0; r < ctx.spectral.size(); ++r) {
        const Matrix& e = ctx.spectral.eigenprojections[r];
        const Vector block_p = e * p_psi;
        const Vector block_psi = e * psi;
        const double keep = (block_psi - block_p).squaredNorm();
        const double drop = block_p.squaredNorm();
        if (keep < drop) {
            out.correlate_blocks.push_back(r);
            sq += keep;
        } else {
            sq += drop;
        }
    }
    // component of P psi outside every eigenspace is zero (they resolve I)
    out.correlation_residual = std::sqrt(sq);
    out.correlated = out.correlation_residual <= ctx.tol.eps_eq;
    out.member = out.candidate && out.correlated;
    return out;
}

std::vector<Matrix> def_algebra_generators(const EventSpace& s, const TolerancePolicy& tol) {
    const Index n = s.dim();
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < s.size(); ++i) gens.push_back(s.projector(i));

    // Orthonormal basis of the orthocomplement of the event space: the
    // sublattice below it contributes the full operator block.
    const Matrix complement = Matrix::Identity(n, n) - s.sum_projector();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(complement);
    std::vector<Vector> comp_basis;
    for (Index j = 0; j < n; ++j)
        if (solver.eigenvalues()(j) > 0.5) comp_basis.push_back(solver.eigenvectors().col(j));
    for (std::size_t a = 0; a < comp_basis.size(); ++a)
        for (std::size_t b = 0; b < comp_basis.size(); ++b)
            gens.push_back(comp_basis[a] * comp_basis[b].adjoint());
    (void)tol;
    return gens;
}

Matrix random_def_member(const EventSpace& s, Rng& rng) {
    const Index n = s.dim();
    Matrix p = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (rng.integer(2) == 1) p += s.projector(i);

    const Matrix complement = Matrix::Identity(n, n) - s.sum_projector();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(complement);
    std::vector<Index> comp_cols;
    for (Index j = 0; j < n; ++j)
        if (solver.eigenvalues()(j) > 0.5) comp_cols.push_back(j);
    const Index m = static_cast<Index>(comp_cols.size());
    if (m > 0) {
        Matrix frame(n, m);
        for (Index j = 0; j < m; ++j) frame.col(j) = solver.eigenvectors().col(comp_cols[j]);
        const Index rank = static_cast<Index>(rng.integer(static_cast<std::uint64_t>(m) + 1));
        if (rank > 0) {
            const Matrix rotated = frame * rng.unitary(m).leftCols(rank);
            p += rotated * rotated.adjoint();
        }
    }
    return p;
}

MaximalityProbeReport maximality_probe(const MeasurementContext& ctx, const EventSpace& s,
                                       std::size_t samples, std::uint64_t seed) {
    MaximalityProbeReport report;
    report.samples = samples;
    report.seed = seed;

    const std::vector<Matrix> def_gens = def_algebra_generators(s, ctx.tol);
    Rng rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const Matrix p = rng.rank1_projection(ctx.dim());
        if (def_membership(s, p, ctx.tol).member) {
            ++report.members_hit;
            continue;
        }
        std::vector<Matrix> family = def_gens;
        family.push_back(p);
        const ClassicalityResult c =
            is_classical_family(ctx.state, family, ClassicalityMode::algebra, ctx.tol);
        if (c.classical)
            report.violations.push_back({p, c.residual});
    }
    return report;
}

}  // namespace beables
