#include "linperiod/determinant.hpp"

#include <utility>
#include <vector>

namespace linperiod {

Rational bareiss_determinant(const SquareMatrix<Rational>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;

    // Clear denominators row by row.
    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
        scale *= row_lcm;
    }

    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }

    Rational det(sign * at(n - 1, n - 1), scale);
    det.canonicalize();
    return det;
}

Rational gaussian_determinant(const SquareMatrix<Rational>& m)
{
    SquareMatrix<Rational> a = m;
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

} // namespace linperiod
