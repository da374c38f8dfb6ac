#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "beables/tolerance.hpp"

namespace beables {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// --- basic predicates -------------------------------------------------

bool entries_finite(const Matrix& a);
void require_finite(const Matrix& a, const char* what);
void require_square(const Matrix& a, const char* what);

// ||A - A*||_F
double hermitian_defect(const Matrix& a);

// ||A - A*||_F and ||A^2 - A||_F combined; true iff both within eps.
bool is_projection(const Matrix& a, double eps);

double unitary_defect(const Matrix& u);

// --- constructions ----------------------------------------------------

Matrix identity(Index n);

// Kronecker product with (i,j)-block a(i,j) * b.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(const Vector& a, const Vector& b);

// |v><v|
Matrix rank1(const Vector& v);

// Multiply v by a unit phase so that its first entry of significant
// modulus becomes real and positive. Deterministic representative of
// the ray through v.
Vector fix_phase(const Vector& v);

// Tr(a† b) / n  (normalized trace inner product; O(n^2))
Complex trace_inner(const Matrix& a, const Matrix& b);

// vec / unvec with Eigen's column-major layout.
Vector vec(const Matrix& a);
Matrix unvec(const Vector& v, Index rows, Index cols);

// --- seeded randomness -------------------------------------------------

// Deterministic random source for probe sampling. Gaussian variates are
// produced by an explicit Box-Muller transform so that streams depend
// only on the mt19937_64 bit sequence.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double gaussian();
    double uniform();  // [0, 1)
    std::uint64_t integer(std::uint64_t bound);  // [0, bound)

    Vector gaussian_vector(Index n);
    Vector unit_vector(Index n);
    Matrix gaussian_matrix(Index rows, Index cols);
    // Random rank-1 orthogonal projection from a normalized Gaussian vector.
    Matrix rank1_projection(Index n);
    // Haar-like unitary via QR of a Gaussian matrix.
    Matrix unitary(Index n);

   private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Sub-stream seed for partitioned probes: mixes the base seed with the
// partition index so ranges can be evaluated independently.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace beables
