#include "beables/matrix.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "beables/errors.hpp"

namespace beables {

bool entries_finite(const Matrix& a) {
    return a.allFinite();
}

void require_finite(const Matrix& a, const char* what) {
    if (!a.allFinite())
        throw Error(std::string(what) + ": non-finite entries");
}

void require_square(const Matrix& a, const char* what) {
    if (a.rows() != a.cols())
        throw NotSquare(std::string(what) + ": expected a square matrix, got " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

double hermitian_defect(const Matrix& a) {
    return (a - a.adjoint()).norm();
}

bool is_projection(const Matrix& a, double eps) {
    if (a.rows() != a.cols()) return false;
    if (hermitian_defect(a) > eps) return false;
    return (a * a - a).norm() <= eps;
}

double unitary_defect(const Matrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

Matrix identity(Index n) {
    return Matrix::Identity(n, n);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    require_finite(a, "tensor_product lhs");
    require_finite(b, "tensor_product rhs");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Matrix rank1(const Vector& v) {
    return v * v.adjoint();
}

Vector fix_phase(const Vector& v) {
    const double cutoff = 0.5 / std::sqrt(static_cast<double>(std::max<Index>(v.size(), 1)));
    Index pivot = -1;
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > cutoff) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) {
        // fall back to the largest entry
        double best = 0.0;
        for (Index i = 0; i < v.size(); ++i)
            if (std::abs(v(i)) > best) {
                best = std::abs(v(i));
                pivot = i;
            }
        if (pivot < 0) return v;
    }
    Complex phase = v(pivot) / std::abs(v(pivot));
    return v / phase;
}

Complex trace_inner(const Matrix& a, const Matrix& b) {
    return a.conjugate().cwiseProduct(b).sum() / static_cast<double>(a.rows());
}

Vector vec(const Matrix& a) {
    return Eigen::Map<const Vector>(a.data(), a.size());
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
    return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on raw 53-bit uniforms.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::integer(std::uint64_t bound) {
    if (bound == 0) return 0;
    // rejection-free modulo is fine for probe bookkeeping
    return eng_() % bound;
}

Vector Rng::gaussian_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(gaussian(), gaussian());
    return v;
}

Vector Rng::unit_vector(Index n) {
    Vector v = gaussian_vector(n);
    double norm = v.norm();
    while (norm < 1e-12) {
        v = gaussian_vector(n);
        norm = v.norm();
    }
    return v / norm;
}

Matrix Rng::gaussian_matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = Complex(gaussian(), gaussian());
    return m;
}

Matrix Rng::rank1_projection(Index n) {
    return rank1(unit_vector(n));
}

Matrix Rng::unitary(Index n) {
    const Matrix g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // normalize column phases so the factorization is unique
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step on seed xor golden-ratio multiple of the index
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace beables
