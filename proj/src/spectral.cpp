#include "beables/spectral.hpp"

#include <cmath>

#include "beables/errors.hpp"

namespace beables {

Matrix SpectralDecomposition::reconstruct() const {
    if (eigenprojections.empty()) return Matrix();
    Matrix out = Matrix::Zero(dim(), dim());
    for (std::size_t r = 0; r < size(); ++r)
        out += eigenvalues[r] * eigenprojections[r];
    return out;
}

Index SpectralDecomposition::rank(std::size_t r) const {
    return static_cast<Index>(std::llround(eigenprojections.at(r).trace().real()));
}

Matrix SpectralDecomposition::eigenbasis(std::size_t r) const {
    const Matrix& proj = eigenprojections.at(r);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(proj);
    const Index m = rank(r);
    // eigenvalues ascending, so the eigenspace basis sits in the last m columns
    return solver.eigenvectors().rightCols(m);
}

SpectralDecomposition spectral_decomposition(const Matrix& h, const TolerancePolicy& tol) {
    require_finite(h, "spectral_decomposition");
    require_square(h, "spectral_decomposition");
    const double defect = hermitian_defect(h);
    if (defect > tol.eq(h.norm()))
        throw NotSelfAdjoint("spectral_decomposition: ||H - H*|| = " + std::to_string(defect));

    const Matrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw Error("spectral_decomposition: eigensolver failed to converge");

    const Eigen::VectorXd values = solver.eigenvalues();
    const Matrix vectors = solver.eigenvectors();
    const Index n = sym.rows();

    SpectralDecomposition out;
    Index start = 0;
    while (start < n) {
        Index stop = start + 1;
        while (stop < n && values(stop) - values(stop - 1) < tol.eps_eig) ++stop;
        const Index count = stop - start;
        const Matrix block = vectors.middleCols(start, count);
        out.eigenvalues.push_back(values.segment(start, count).mean());
        out.eigenprojections.push_back(block * block.adjoint());
        start = stop;
    }
    return out;
}

}  // namespace beables
