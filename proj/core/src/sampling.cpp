#include "linperiod/sampling.hpp"

#include <algorithm>
#include <array>

namespace linperiod {

Rational sample_small_rational(Rng& rng)
{
    static const std::array<std::pair<long, long>, 5> magnitudes{{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {1, 3}}};
    std::uniform_int_distribution<std::size_t> pick(0, magnitudes.size() - 1);
    std::bernoulli_distribution negative(0.5);
    const auto [num, den] = magnitudes[pick(rng)];
    return make_rational(negative(rng) ? -num : num, den);
}

SatakeData sample_satake(std::size_t n, Rng& rng)
{
    std::vector<Rational> z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        z.push_back(sample_small_rational(rng));
    Rational u = sample_small_rational(rng);
    return SatakeData(std::move(z), std::move(u));
}

std::vector<Rational> sample_distinct_rationals(std::size_t n, Rng& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> out;
    while (out.size() < n) {
        const long a = num(rng);
        if (a == 0)
            continue;
        Rational candidate = make_rational(a, den(rng));
        if (std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(std::move(candidate));
    }
    return out;
}

TorusExponents sample_exponents(std::size_t n, std::int64_t range, Rng& rng)
{
    std::uniform_int_distribution<std::int64_t> dist(-range, range);
    TorusExponents a;
    a.exps.resize(n);
    for (auto& e : a.exps)
        e = dist(rng);
    return a;
}

} // namespace linperiod
