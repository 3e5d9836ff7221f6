#include "linperiod/schur.hpp"

#include "linperiod/determinant.hpp"
#include "linperiod/errors.hpp"
#include "linperiod/group.hpp"

#include <algorithm>

namespace linperiod {

CompleteHomogeneousTable::CompleteHomogeneousTable(std::span<const Rational> z, std::size_t max_degree)
    : variables_(z.size()), h_(max_degree + 1, Rational(0))
{
    // h_k(z_1..z_j) = h_k(z_1..z_{j-1}) + z_j h_{k-1}(z_1..z_j), starting from
    // h_0 = 1, h_k = 0 (k > 0) in zero variables.
    h_[0] = 1;
    for (const auto& zj : z)
        for (std::size_t k = 1; k <= max_degree; ++k)
            h_[k] += zj * h_[k - 1];
}

Rational CompleteHomogeneousTable::operator()(long k) const
{
    if (k < 0)
        return 0;
    if (static_cast<std::size_t>(k) >= h_.size())
        throw InvalidArgument("complete homogeneous table too small for degree " + std::to_string(k));
    return h_[static_cast<std::size_t>(k)];
}

Rational schur_jacobi_trudi(const DominantWeight& lambda, const CompleteHomogeneousTable& h)
{
    if (!lambda.is_nonnegative())
        throw InvalidArgument("schur_jacobi_trudi needs λ_n >= 0, got " + to_string(lambda));
    if (h.variables() != lambda.size())
        throw InvalidArgument("number of variables differs from number of parts");

    // Trailing zero parts contribute an identity block.
    std::size_t len = lambda.size();
    while (len > 0 && lambda[len - 1] == 0)
        --len;
    if (len == 0)
        return 1;

    SquareMatrix<Rational> m(len);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j)
            m(i, j) = h(lambda[i] - static_cast<long>(i) + static_cast<long>(j));
    return bareiss_determinant(m);
}

Rational schur_jacobi_trudi(const DominantWeight& lambda, std::span<const Rational> z)
{
    if (z.size() != lambda.size())
        throw InvalidArgument("number of variables differs from number of parts");
    const long max_degree = lambda.size() == 0 ? 0 : std::max(0L, lambda[0] + static_cast<long>(lambda.size()) - 1);
    return schur_jacobi_trudi(lambda, CompleteHomogeneousTable(z, static_cast<std::size_t>(max_degree)));
}

Rational schur_alternant(const DominantWeight& lambda, std::span<const Rational> z)
{
    if (!lambda.is_nonnegative())
        throw InvalidArgument("schur_alternant needs λ_n >= 0, got " + to_string(lambda));
    const std::size_t n = lambda.size();
    if (z.size() != n)
        throw InvalidArgument("number of variables differs from number of parts");

    // Vandermonde det(z_i^{n-j}) = ∏_{i<j} (z_i - z_j).
    Rational vandermonde = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            vandermonde *= z[i] - z[j];
    if (vandermonde == 0)
        throw SingularDenominator("alternant denominator vanishes: repeated variables");

    SquareMatrix<Rational> num(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            num(i, j) = pow(z[i], lambda[j] + static_cast<long>(n - 1 - j));
    return gaussian_determinant(num) / vandermonde;
}

Rational schur_laurent(const DominantWeight& lambda, std::span<const Rational> z)
{
    if (z.size() != lambda.size())
        throw InvalidArgument("number of variables differs from number of parts");
    const long shift = lambda[lambda.size() - 1];
    if (shift == 0)
        return schur_jacobi_trudi(lambda, z);
    Rational det = 1;
    for (const auto& zi : z)
        det *= zi;
    return pow(det, shift) * schur_jacobi_trudi(lambda.shifted(shift), z);
}

WhittakerValue whittaker_value(const DominantWeight& lambda, const SatakeData& data)
{
    if (data.rank() != lambda.size())
        throw InvalidArgument("weight and Satake data have different rank");
    // δ_{B_n}^{1/2}(ϖ^λ) = q^{-E/2} = v^{-E}.
    const long e = -static_cast<long>(borel_modulus_exponent(TorusExponents{{lambda.parts().begin(), lambda.parts().end()}}));
    return {schur_laurent(lambda, data.z), e};
}

} // namespace linperiod
