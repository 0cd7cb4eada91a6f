#pragma once

// Simultaneous complex root finding (Aberth-Ehrlich) in double precision.

#include <complex>
#include <vector>

namespace joinpi {

using Complex = std::complex<double>;

// Coefficients lowest degree first.
Complex horner(const std::vector<Complex>& coeffs, Complex z);
// p(z) and p'(z) together.
std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& coeffs, Complex z);

// All roots of the polynomial, with multiplicity. The leading coefficient
// must be non-zero.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, int max_iterations = 500);

}  // namespace joinpi
