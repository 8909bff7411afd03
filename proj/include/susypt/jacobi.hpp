#ifndef SUSYPT_JACOBI_HPP
#define SUSYPT_JACOBI_HPP

#include "susypt/types.hpp"

namespace susypt {

// Degree-n Jacobi polynomial with complex parameters and argument.
struct JacobiParams {
    int n = 0;
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
};

// Three-term recurrence; when a+b sits on a negative integer that zeroes a
// leading recurrence coefficient the evaluation falls back to the finite
// series, which has no degenerate denominators.
Complex jacobi_polynomial(const JacobiParams& p, Complex z);

// Generalized Laguerre L_n^{(m)} with complex m and argument; the recurrence
// is nondegenerate for all n.
Complex laguerre_polynomial(int n, Complex m, Complex xi);

}  // namespace susypt

#endif
