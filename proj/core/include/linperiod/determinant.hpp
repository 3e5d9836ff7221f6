#pragma once

#include "linperiod/matrix.hpp"
#include "linperiod/rational.hpp"

namespace linperiod {

// Fraction-free (Bareiss) elimination. Each row is first scaled by the lcm of
// its denominators so the elimination runs over mpz_class with exact
// divisions; the scale factors are divided out at the end.
Rational bareiss_determinant(const SquareMatrix<Rational>& m);

// Plain Gaussian elimination over Q with first-nonzero pivoting.
Rational gaussian_determinant(const SquareMatrix<Rational>& m);

} // namespace linperiod
