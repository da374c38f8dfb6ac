#include "beables/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "beables/errors.hpp"

namespace beables {

namespace {

constexpr int kClosureRoundCap = 64;

// Null-space acceptance threshold for the commutant SVD, relative to the
// largest singular value. True null directions of our exactly-structured
// systems sit at machine level; the first nonzero singular value is set by
// O(1) commutation defects, so the window in between is wide.
constexpr double kNullRel = 1e-10;
constexpr double kNullGapFactor = 1e3;

}  // namespace

// --- SpanBasis ---------------------------------------------------------

Matrix SpanBasis::project(const Matrix& x) const {
    if (basis_.empty()) return Matrix::Zero(n_, n_);
    const Vector coeff = (packed_.conjugate() * vec(x)) / static_cast<double>(n_);
    const Vector proj = packed_.transpose() * coeff;
    return unvec(proj, n_, n_);
}

double SpanBasis::residual(const Matrix& x) const {
    return (x - project(x)).norm();
}

bool SpanBasis::contains(const Matrix& x, double eps) const {
    return residual(x) <= eps * (1.0 + x.norm());
}

bool SpanBasis::append(const Matrix& x, double eps) {
    const double scale = 1.0 + x.norm();
    Matrix r = x - project(x);
    if (r.norm() <= eps * scale) return false;
    // second Gram-Schmidt pass for orthogonality at the eps_eq scale
    r -= project(r);
    if (r.norm() <= eps * scale) return false;
    r *= std::sqrt(static_cast<double>(n_)) / r.norm();
    basis_.push_back(r);
    packed_.conservativeResize(static_cast<Index>(basis_.size()), n_ * n_);
    packed_.row(static_cast<Index>(basis_.size()) - 1) = vec(r).transpose();
    return true;
}

// --- OperatorAlgebra ----------------------------------------------------

double OperatorAlgebra::span_residual(const Matrix& x) const {
    return span().residual(x);
}

bool OperatorAlgebra::contains(const Matrix& x, double eps) const {
    return span().contains(x, eps);
}

SpanBasis OperatorAlgebra::span() const {
    SpanBasis s(dim);
    for (const Matrix& b : basis) s.append(b, 1e-12);
    return s;
}

// --- closure ------------------------------------------------------------

OperatorAlgebra algebra_closure(Index dim, const std::vector<Matrix>& generators,
                                const TolerancePolicy& tol) {
    for (const Matrix& g : generators) {
        require_finite(g, "algebra_closure generator");
        if (g.rows() != dim || g.cols() != dim)
            throw DimensionMismatch("algebra_closure: generator shape " +
                                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                    " does not match dimension " + std::to_string(dim));
    }

    std::vector<Matrix> gens;
    gens.reserve(2 * generators.size());
    for (const Matrix& g : generators) {
        gens.push_back(g);
        gens.push_back(g.adjoint());
    }

    SpanBasis span(dim);
    span.append(Matrix::Identity(dim, dim), tol.eps_eq);
    std::vector<Matrix> frontier;
    for (const Matrix& g : gens)
        if (span.append(g, tol.eps_eq)) frontier.push_back(span.elements().back());

    // Multiplying the frontier by every generator on both sides reaches all
    // words in the generators; stabilization means the span is the algebra.
    int round = 0;
    while (!frontier.empty()) {
        if (++round > kClosureRoundCap)
            throw ConsistencyError("algebra_closure: span failed to stabilize within " +
                                   std::to_string(kClosureRoundCap) + " rounds");
        std::vector<Matrix> next;
        for (const Matrix& b : frontier) {
            for (const Matrix& g : gens) {
                if (span.append(g * b, tol.eps_eq)) next.push_back(span.elements().back());
                if (span.append(b * g, tol.eps_eq)) next.push_back(span.elements().back());
            }
        }
        frontier = std::move(next);
    }

    OperatorAlgebra out;
    out.dim = dim;
    out.basis = span.elements();
    return out;
}

// --- commutant ----------------------------------------------------------

namespace {

// Stacked commutator system for the given operators: rows of blocks
// (I (x) A - A^T (x) I), acting on vec(T).
Matrix stack_commutator_blocks(const std::vector<Matrix>& ops, Index n) {
    Matrix stacked(static_cast<Index>(ops.size()) * n * n, n * n);
    const Matrix eye = Matrix::Identity(n, n);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Matrix block =
            tensor_product(eye, ops[i]) - tensor_product(ops[i].transpose(), eye);
        stacked.middleRows(static_cast<Index>(i) * n * n, n * n) = block;
    }
    return stacked;
}

std::vector<Matrix> null_space_matrices(const Matrix& stacked, Index n) {
    Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cut = kNullRel * std::max(1.0, sigma_max);

    Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > cut) ++rank;
    // guard against an ambiguous spectrum around the cut
    for (Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cut && sigma(i) < kNullGapFactor * cut)
            throw ConsistencyError("commutant: ambiguous singular value " +
                                   std::to_string(sigma(i)) + " near null threshold " +
                                   std::to_string(cut));
    }

    std::vector<Matrix> out;
    const Matrix& v = svd.matrixV();
    const double scale = std::sqrt(static_cast<double>(n));
    for (Index j = rank; j < v.cols(); ++j)
        out.push_back(unvec(v.col(j), n, n) * scale);
    return out;
}

double worst_commutation_residual(const Matrix& t, const std::vector<Matrix>& ops) {
    double worst = 0.0;
    for (const Matrix& a : ops)
        worst = std::max(worst, (a * t - t * a).norm() / (1.0 + a.norm() * t.norm()));
    return worst;
}

}  // namespace

OperatorAlgebra commutant(const OperatorAlgebra& alg, const TolerancePolicy& tol) {
    const Index n = alg.dim;
    if (n <= 0) throw BadDimension("commutant: empty algebra");
    for (const Matrix& b : alg.basis) require_square(b, "commutant basis element");

    // Commuting with a generating subset is equivalent to commuting with the
    // whole basis; start from two deterministic pseudo-random combinations
    // and enlarge until every basis element is verified.
    std::vector<Matrix> probes;
    if (alg.basis.size() <= 8) {
        probes = alg.basis;
    } else {
        Rng rng(0x5eedULL);
        for (int p = 0; p < 2; ++p) {
            Matrix combo = Matrix::Zero(n, n);
            for (const Matrix& b : alg.basis)
                combo += Complex(rng.gaussian(), rng.gaussian()) * b;
            probes.push_back(combo / std::max(1.0, combo.norm()));
        }
    }

    for (int attempt = 0;; ++attempt) {
        std::vector<Matrix> gens;
        for (const Matrix& p : probes) {
            gens.push_back(p);
            gens.push_back(p.adjoint());
        }
        std::vector<Matrix> candidates = null_space_matrices(stack_commutator_blocks(gens, n), n);

        // Verify against the full basis; on failure adjoin the worst offender.
        const Matrix* offender = nullptr;
        double worst = 0.0;
        for (const Matrix& t : candidates) {
            for (const Matrix& a : alg.basis) {
                const double res = (a * t - t * a).norm() / (1.0 + a.norm() * t.norm());
                if (res > worst) {
                    worst = res;
                    offender = &a;
                }
            }
        }
        if (offender == nullptr || worst <= tol.eps_eq) {
            OperatorAlgebra out;
            out.dim = n;
            SpanBasis span(n);
            for (const Matrix& t : candidates) span.append(t, 1e-12);
            out.basis = span.elements();
            if (!contains_identity(out, tol.eps_eq))
                throw ConsistencyError("commutant: identity missing from result span");
            return out;
        }
        if (attempt >= static_cast<int>(alg.basis.size()))
            throw ConsistencyError("commutant: verification loop failed to converge");
        probes.push_back(*offender);
    }
}

// --- diagnostics ---------------------------------------------------------

bool same_span(const OperatorAlgebra& a, const OperatorAlgebra& b, double eps) {
    if (a.dim != b.dim || a.size() != b.size()) return false;
    const SpanBasis sa = a.span();
    const SpanBasis sb = b.span();
    for (const Matrix& m : a.basis)
        if (!sb.contains(m, eps)) return false;
    for (const Matrix& m : b.basis)
        if (!sa.contains(m, eps)) return false;
    return true;
}

bool is_star_closed(const OperatorAlgebra& alg, double eps) {
    const SpanBasis span = alg.span();
    for (const Matrix& b : alg.basis)
        if (!span.contains(b.adjoint(), eps)) return false;
    return true;
}

bool is_product_closed(const OperatorAlgebra& alg, double eps) {
    const SpanBasis span = alg.span();
    for (const Matrix& a : alg.basis)
        for (const Matrix& b : alg.basis)
            if (!span.contains(a * b, eps)) return false;
    return true;
}

bool contains_identity(const OperatorAlgebra& alg, double eps) {
    return alg.span().contains(Matrix::Identity(alg.dim, alg.dim), eps);
}

}  // namespace beables
