#include "linperiod/group.hpp"

#include "linperiod/errors.hpp"

#include <cmath>
#include <numeric>

namespace linperiod {

InterleavePerm::InterleavePerm(std::vector<std::size_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (auto w : images_) {
        if (w < 1 || w > images_.size() || seen[w])
            throw InvalidArgument("image vector is not a permutation of {1..n}");
        seen[w] = true;
    }
}

InterleavePerm InterleavePerm::identity(std::size_t n)
{
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{1});
    return InterleavePerm(std::move(id));
}

InterleavePerm InterleavePerm::inverse() const
{
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i] - 1] = i + 1;
    return InterleavePerm(std::move(inv));
}

SquareMatrix<Rational> InterleavePerm::matrix() const
{
    SquareMatrix<Rational> m(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        m(images_[j] - 1, j) = 1;
    return m;
}

InterleavePerm InterleavePerm::restricted(std::size_t k) const
{
    if (k > images_.size())
        throw InvalidArgument("restriction size exceeds permutation size");
    std::vector<std::size_t> kept;
    kept.reserve(k);
    for (auto w : images_)
        if (w <= k)
            kept.push_back(w);
    return InterleavePerm(std::move(kept));
}

InterleavePerm build_wn(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("w_n needs n >= 1");
    const std::size_t first = (n + 1) / 2; // m or m+1
    std::vector<std::size_t> images(n);
    for (std::size_t i = 1; i <= first; ++i)
        images[i - 1] = 2 * i - 1;
    for (std::size_t i = 1; first + i <= n; ++i)
        images[first + i - 1] = 2 * i;
    return InterleavePerm(std::move(images));
}

InterleavePerm build_wn_prime(std::size_t n)
{
    if (n < 2)
        throw InvalidArgument("w'_n needs n >= 2");
    const std::size_t m = n / 2;
    std::vector<std::size_t> images(n);
    if (n % 2 == 0) {
        for (std::size_t i = 1; i <= m; ++i)
            images[i - 1] = 2 * i - 1;
        images[m] = 2 * m;
        for (std::size_t i = 1; i + 1 <= m; ++i)
            images[m + i] = 2 * i;
    } else {
        for (std::size_t i = 1; i <= m; ++i)
            images[i - 1] = 2 * i;
        images[m] = 2 * m + 1;
        for (std::size_t i = 1; i <= m; ++i)
            images[m + i] = 2 * i - 1;
    }
    return InterleavePerm(std::move(images));
}

std::pair<std::size_t, std::size_t> levi_block_sizes(std::size_t n)
{
    return {(n + 1) / 2, n / 2};
}

SquareMatrix<Rational> interleave(const SquareMatrix<Rational>& g1, const SquareMatrix<Rational>& g2)
{
    const std::size_t a = g1.size();
    const std::size_t b = g2.size();
    if (a != b && a != b + 1)
        throw InvalidArgument("interleave needs block sizes (m, m) or (m+1, m)");
    const std::size_t n = a + b;
    const InterleavePerm w = build_wn(n);

    SquareMatrix<Rational> h(n);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            h(w(i + 1) - 1, w(j + 1) - 1) = g1(i, j);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            h(w(a + i + 1) - 1, w(a + j + 1) - 1) = g2(i, j);
    return h;
}

bool is_in_Hn(const SquareMatrix<Rational>& g)
{
    const std::size_t n = g.size();
    if (n == 0)
        return true;
    const InterleavePerm w = build_wn(n);
    const std::size_t a = levi_block_sizes(n).first;
    // (w^{-1} g w)(i, j) = g(w(i), w(j)); must vanish across blocks.
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if ((i <= a) != (j <= a) && g(w(i) - 1, w(j) - 1) != 0)
                return false;
    return true;
}

SquareMatrix<Rational> embed_with_one(const SquareMatrix<Rational>& g)
{
    const std::size_t n = g.size();
    SquareMatrix<Rational> e(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e(i, j) = g(i, j);
    e(n, n) = 1;
    return e;
}

std::pair<TorusExponents, TorusExponents> torus_split(const TorusExponents& a)
{
    TorusExponents odd, even;
    for (std::size_t i = 0; i < a.size(); ++i)
        (i % 2 == 0 ? odd : even).exps.push_back(a.exps[i]);
    return {std::move(odd), std::move(even)};
}

std::int64_t borel_modulus_exponent(const TorusExponents& a)
{
    const auto n = static_cast<std::int64_t>(a.size());
    std::int64_t e = 0;
    for (std::int64_t i = 1; i <= n; ++i)
        e += a.exps[static_cast<std::size_t>(i - 1)] * (n + 1 - 2 * i);
    return e;
}

std::int64_t delta_character_exponent(const TorusExponents& a)
{
    const auto [odd, even] = torus_split(a);
    return std::accumulate(odd.exps.begin(), odd.exps.end(), std::int64_t{0})
        - std::accumulate(even.exps.begin(), even.exps.end(), std::int64_t{0});
}

ModulusSplit modulus_split(const TorusExponents& a)
{
    const auto [odd, even] = torus_split(a);
    // δ_{B_k}(x) = q^{-E} = v^{-2E}; δ_{B_n}^{1/2}(a) = v^{-E_n(a)}; δ(a)^{1/2} = v^{-D}.
    std::int64_t lhs = -2 * borel_modulus_exponent(odd) - 2 * borel_modulus_exponent(even);
    if (a.size() % 2 == 0)
        lhs -= delta_character_exponent(a);
    return {lhs, -borel_modulus_exponent(a)};
}

bool modulus_split_check(std::size_t n, const TorusExponents& a)
{
    if (a.size() != n)
        throw InvalidArgument("exponent vector length differs from n");
    return modulus_split(a).holds();
}

double real_part(const UnramifiedCharacter& chi)
{
    if (chi.value_at_uniformizer == 0)
        throw InvalidArgument("character value at the uniformizer must be nonzero");
    if (chi.q <= 1)
        throw InvalidArgument("residue cardinality q must exceed 1");
    const Rational abs_u = abs(chi.value_at_uniformizer);
    // log of a rational as log(num) - log(den) keeps precision for large parts.
    auto log_rational = [](const Rational& x) {
        long num_exp = 0, den_exp = 0;
        const double num = mpz_get_d_2exp(&num_exp, x.get_num_mpz_t());
        const double den = mpz_get_d_2exp(&den_exp, x.get_den_mpz_t());
        return std::log(num) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
    };
    const double r = -log_rational(abs_u) / log_rational(chi.q);
    return r == 0.0 ? 0.0 : r;
}

} // namespace linperiod
