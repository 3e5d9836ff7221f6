#include "linperiod/series.hpp"

#include "linperiod/errors.hpp"

#include <nlohmann/json.hpp>

namespace linperiod {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        throw OrderMismatch(a.order(), b.order());
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<Rational> coeffs)
    : TruncatedSeries(order, std::vector<Rational>(coeffs))
{
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& value)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order())
        throw OrderMismatch(order, this->order());
    return TruncatedSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b);
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k)
        c[k] = a[k] + b[k];
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b);
    std::vector<Rational> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k)
        c[k] = a[k] - b[k];
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_order(a, b);
    const std::size_t order = a.order();
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c)
{
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out)
        x *= c;
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries series_invert(const TruncatedSeries& a)
{
    if (a[0] == 0)
        throw NotAUnit();
    const std::size_t order = a.order();
    const Rational inv0 = 1 / a[0];
    std::vector<Rational> b(order + 1);
    b[0] = inv0;
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            if (a[j] != 0)
                acc += a[j] * b[k - j];
        b[k] = -acc * inv0;
    }
    return TruncatedSeries(order, std::move(b));
}

nlohmann::json to_json(const TruncatedSeries& s)
{
    auto j = nlohmann::json::array();
    for (const auto& c : s.coeffs())
        j.push_back(to_string(c));
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw ParseError(0, "series must be a nonempty JSON array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError(0, "series coefficients must be strings");
        coeffs.push_back(parse_rational(item.get<std::string>()));
    }
    const std::size_t order = coeffs.size() - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

} // namespace linperiod
