#pragma once

#include "linperiod/rational.hpp"
#include "linperiod/series.hpp"
#include "linperiod/weights.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace linperiod {

/// Local L-factor L = 1/P(t), t = q^{-s}, with P(0) = 1.
///
/// poly is always recorded in powers of t; t_scale says P is really a
/// polynomial in t^{t_scale} (2 for the exterior square at 2s).
struct EulerFactor {
    std::vector<Rational> poly;
    int t_scale = 1;

    std::size_t degree() const noexcept { return poly.size() - 1; }
    // P as a truncated series (not its inverse).
    TruncatedSeries as_series(std::size_t order) const;
    // 1/P truncated at order.
    TruncatedSeries inverse_series(std::size_t order) const;
};

// Which argument the exterior-square factor is taken at. doubled is
// L(2s, Λ²) (factor in t²); literal is L(s, Λ²) (factor in t).
enum class ExteriorConvention { doubled, literal };

// ∏_i (1 - u z_i t)
EulerFactor standard_factor(const SatakeData& data);

// ∏_{j<k} (1 - z_j z_k t²), or t instead of t² under the literal convention.
// The constant 1 for rank < 2.
EulerFactor exterior_square_factor(const SatakeData& data,
                                   ExteriorConvention convention = ExteriorConvention::doubled);

// standard_factor · exterior_square_factor; degree n + n(n-1).
EulerFactor linear_local_factor(const SatakeData& data);

// Σ_{k<=order} (Σ_{λ_n>=0, |λ|=k} s_λ(z) u^{c(λ)}) t^k, the unramified
// Rankin–Selberg integral in t = q^{-s}. Degrees are evaluated in parallel
// (see thread_limit()); the result does not depend on scheduling.
TruncatedSeries weight_sum_integral(const SatakeData& data, std::size_t order);
TruncatedSeries weight_sum_integral(const SatakeData& data, std::size_t order, unsigned threads);

// 1 / (standard_factor · exterior_square_factor), expanded to order.
TruncatedSeries product_side(const SatakeData& data, std::size_t order,
                             ExteriorConvention convention = ExteriorConvention::doubled);

struct Discrepancy {
    std::size_t order;
    Rational weight_sum;
    Rational product;
};

struct IdentityReport {
    std::size_t order;
    std::optional<Discrepancy> first_discrepancy;

    bool holds() const noexcept { return !first_discrepancy; }
};

// Compares weight_sum_integral and product_side coefficientwise up to order.
IdentityReport verify_macdonald(const SatakeData& data, std::size_t order,
                                ExteriorConvention convention = ExteriorConvention::doubled);

} // namespace linperiod
