#pragma once

#include "linperiod/rational.hpp"
#include "linperiod/weights.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace linperiod {

/// Complete homogeneous symmetric polynomials h_0..h_max_degree evaluated at a
/// fixed point z. Built once per (z, degree) and passed explicitly to
/// schur_jacobi_trudi when many weights share the same z.
class CompleteHomogeneousTable {
public:
    CompleteHomogeneousTable(std::span<const Rational> z, std::size_t max_degree);

    std::size_t variables() const noexcept { return variables_; }
    std::size_t max_degree() const noexcept { return h_.size() - 1; }

    // h_k for k <= max_degree; zero for k < 0.
    Rational operator()(long k) const;

private:
    std::size_t variables_;
    std::vector<Rational> h_;
};

// s_λ(z) = det(h_{λ_i - i + j}). Requires λ_n >= 0 (InvalidArgument otherwise)
// and z.size() == λ.size().
Rational schur_jacobi_trudi(const DominantWeight& lambda, std::span<const Rational> z);
Rational schur_jacobi_trudi(const DominantWeight& lambda, const CompleteHomogeneousTable& h);

// det(z_i^{λ_j + n - j}) / det(z_i^{n - j}). Throws SingularDenominator when
// two z_i coincide.
Rational schur_alternant(const DominantWeight& lambda, std::span<const Rational> z);

// Any dominant λ: s_λ(z) = (z_1···z_n)^{λ_n} s_{λ - λ_n(1,...,1)}(z).
Rational schur_laurent(const DominantWeight& lambda, std::span<const Rational> z);

/// W⁰(ϖ^λ) = δ_{B_n}^{1/2}(ϖ^λ) s_λ(z), reported with the half-integral
/// power of q kept as an integer exponent of v = q^{1/2}.
struct WhittakerValue {
    Rational schur_part;
    long v_exponent;

    friend bool operator==(const WhittakerValue&, const WhittakerValue&) = default;
};

WhittakerValue whittaker_value(const DominantWeight& lambda, const SatakeData& data);

} // namespace linperiod
