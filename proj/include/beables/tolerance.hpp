#pragma once

#include <stdexcept>

namespace beables {

// Numerical thresholds shared by every operation in the library.
//   eps_eq  : matrix/vector equality threshold (Frobenius / 2-norm)
//   eps_eig : eigenvalue grouping threshold
struct TolerancePolicy {
    double eps_eq = 1e-9;
    double eps_eig = 1e-8;

    void validate() const {
        if (!(eps_eq > 0.0) || !(eps_eig > 0.0))
            throw std::invalid_argument("TolerancePolicy: thresholds must be positive");
        if (eps_eq > eps_eig)
            throw std::invalid_argument("TolerancePolicy: eps_eq must not exceed eps_eig");
    }

    // Scaled equality threshold: eps_eq * (1 + scale), used for residual
    // tests that should not be sensitive to the overall size of the input.
    double eq(double scale = 0.0) const { return eps_eq * (1.0 + scale); }
};

}  // namespace beables
