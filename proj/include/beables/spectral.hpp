#pragma once

#include <vector>

#include "beables/matrix.hpp"
#include "beables/tolerance.hpp"

namespace beables {

// Spectral resolution of a self-adjoint matrix into distinct eigenvalues
// (ascending) and the matching orthogonal eigenprojections.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Matrix> eigenprojections;

    std::size_t size() const { return eigenvalues.size(); }
    Index dim() const {
        return eigenprojections.empty() ? 0 : eigenprojections.front().rows();
    }

    // sum_r r * E_r
    Matrix reconstruct() const;
    // rank of E_r, rounded from its trace
    Index rank(std::size_t r) const;
    // orthonormal basis of the r-th eigenspace (columns)
    Matrix eigenbasis(std::size_t r) const;
};

// Eigenvalues closer than eps_eig are merged into a single eigenprojection
// (single-linkage clustering on the sorted spectrum; the reported eigenvalue
// is the cluster mean).
SpectralDecomposition spectral_decomposition(const Matrix& h, const TolerancePolicy& tol);

}  // namespace beables
