#pragma once

#include "linperiod/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace linperiod {

/// Power series in one formal variable t, truncated after t^order.
///
/// Coefficient k of any ring operation only depends on coefficients <= k of
/// the operands, so results are exact modulo t^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    // Missing coefficients are zero; coefficients beyond order are dropped.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);
    TruncatedSeries(std::size_t order, std::initializer_list<Rational> coeffs);

    static TruncatedSeries constant(std::size_t order, const Rational& value);
    static TruncatedSeries one(std::size_t order) { return constant(order, 1); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    // Drops everything above t^order (order must not exceed this->order()).
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);

// b with a*b = 1 mod t^(order+1), via b_0 = 1/a_0,
// b_k = -(a_1 b_{k-1} + ... + a_k b_0) / a_0. Throws NotAUnit if a_0 = 0.
TruncatedSeries series_invert(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

// JSON array of "num/den" strings, index = power of t.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

} // namespace linperiod
