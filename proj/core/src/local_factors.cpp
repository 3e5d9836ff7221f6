#include "linperiod/local_factors.hpp"

#include "linperiod/errors.hpp"
#include "linperiod/parallel.hpp"
#include "linperiod/schur.hpp"

namespace linperiod {

namespace {

using Poly = std::vector<Rational>;

// p · (1 - c t^shift)
Poly times_linear(const Poly& p, const Rational& c, std::size_t shift)
{
    Poly out(p.size() + shift, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + shift] -= c * p[i];
    }
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

TruncatedSeries EulerFactor::as_series(std::size_t order) const
{
    return TruncatedSeries(order, Poly(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(std::min(poly.size(), order + 1))));
}

TruncatedSeries EulerFactor::inverse_series(std::size_t order) const
{
    return series_invert(as_series(order));
}

EulerFactor standard_factor(const SatakeData& data)
{
    Poly p{Rational(1)};
    for (const auto& zi : data.z)
        p = times_linear(p, data.u * zi, 1);
    return {std::move(p), 1};
}

EulerFactor exterior_square_factor(const SatakeData& data, ExteriorConvention convention)
{
    const std::size_t shift = convention == ExteriorConvention::doubled ? 2 : 1;
    Poly p{Rational(1)};
    for (std::size_t j = 0; j < data.z.size(); ++j)
        for (std::size_t k = j + 1; k < data.z.size(); ++k)
            p = times_linear(p, data.z[j] * data.z[k], shift);
    return {std::move(p), static_cast<int>(shift)};
}

EulerFactor linear_local_factor(const SatakeData& data)
{
    return {poly_mul(standard_factor(data).poly, exterior_square_factor(data).poly), 1};
}

TruncatedSeries weight_sum_integral(const SatakeData& data, std::size_t order)
{
    return weight_sum_integral(data, order, thread_limit());
}

TruncatedSeries weight_sum_integral(const SatakeData& data, std::size_t order, unsigned threads)
{
    const std::size_t n = data.rank();
    if (n == 0)
        throw InvalidArgument("Satake data must have rank >= 1");
    // Largest h index in a Jacobi–Trudi matrix for |λ| <= order is λ_1 + n - 1.
    const CompleteHomogeneousTable h(data.z, order + n - 1);

    std::vector<Rational> coeffs(order + 1, Rational(0));
    parallel_for(order + 1, threads, [&](std::size_t k) {
        Rational acc = 0;
        for (const auto& lambda : enumerate_weights(n, static_cast<long>(k)))
            acc += schur_jacobi_trudi(lambda, h) * pow(data.u, alt_statistic(lambda));
        coeffs[k] = std::move(acc);
    });
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries product_side(const SatakeData& data, std::size_t order, ExteriorConvention convention)
{
    const TruncatedSeries denominator
        = series_mul(standard_factor(data).as_series(order), exterior_square_factor(data, convention).as_series(order));
    return series_invert(denominator);
}

IdentityReport verify_macdonald(const SatakeData& data, std::size_t order, ExteriorConvention convention)
{
    const TruncatedSeries lhs = weight_sum_integral(data, order);
    const TruncatedSeries rhs = product_side(data, order, convention);
    for (std::size_t k = 0; k <= order; ++k)
        if (lhs[k] != rhs[k])
            return {order, Discrepancy{k, lhs[k], rhs[k]}};
    return {order, std::nullopt};
}

} // namespace linperiod
