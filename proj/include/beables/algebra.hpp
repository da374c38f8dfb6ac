#pragma once

#include <vector>

#include "beables/matrix.hpp"
#include "beables/tolerance.hpp"

namespace beables {

// Orthonormal basis of an operator subspace of B(H), with the normalized
// trace inner product <A,B> = Tr(A†B)/n. Basis elements therefore carry
// Frobenius norm sqrt(n). Supports incremental Gram-Schmidt extension and
// batched projections.
class SpanBasis {
   public:
    explicit SpanBasis(Index dim) : n_(dim) {}

    // Packs an already-orthonormal family without re-orthogonalization.
    SpanBasis(Index dim, std::vector<Matrix> orthonormal);

    Index dim() const { return n_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Matrix>& elements() const { return basis_; }

    // Projection of x onto the span.
    Matrix project(const Matrix& x) const;
    // Frobenius norm of x - project(x).
    double residual(const Matrix& x) const;
    // Membership at the standard relative threshold eps*(1 + ||x||_F).
    bool contains(const Matrix& x, double eps) const;

    // Adjoin x if independent; returns true when the basis grew.
    bool append(const Matrix& x, double eps);

   private:
    Index n_;
    std::vector<Matrix> basis_;
    Matrix packed_;  // size() x n^2, row i = vec(basis_[i])^T
};

// Finite-dimensional *-closed, identity-containing operator space, stored as
// an orthonormal basis under the normalized trace inner product.
struct OperatorAlgebra {
    Index dim = 0;
    std::vector<Matrix> basis;

    std::size_t size() const { return basis.size(); }

    double span_residual(const Matrix& x) const;
    bool contains(const Matrix& x, double eps) const;
    SpanBasis span() const;
};

// Smallest *-closed, identity-containing span containing the generators.
// Grows the span of words in the generators (and their adjoints) until
// multiplication by every generator stabilizes, which in finite dimension
// yields exactly the generated algebra.
OperatorAlgebra algebra_closure(Index dim, const std::vector<Matrix>& generators,
                                const TolerancePolicy& tol);

// {T : TA = AT for every basis element A of alg}. Computed from the null
// space of the stacked commutator system; every returned element is verified
// against the full basis.
OperatorAlgebra commutant(const OperatorAlgebra& alg, const TolerancePolicy& tol);

// True when the spans coincide: equal dimension and mutual containment.
bool same_span(const OperatorAlgebra& a, const OperatorAlgebra& b, double eps);

// Diagnostic checks for the algebra invariants (used by validation paths
// and tests): adjoint-closure, product-closure, identity membership.
bool is_star_closed(const OperatorAlgebra& alg, double eps);
bool is_product_closed(const OperatorAlgebra& alg, double eps);
bool contains_identity(const OperatorAlgebra& alg, double eps);

}  // namespace beables
