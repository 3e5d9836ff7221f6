#pragma once

#include "linperiod/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace linperiod {

/// Dominant integral weight λ = (λ_1 >= ... >= λ_n), n >= 1.
///
/// The index set of torus values of the spherical Whittaker function and of
/// Schur polynomials. is_nonnegative() picks out the weights with λ_n >= 0,
/// which are the support of the unramified weight sum.
class DominantWeight {
public:
    // Throws InvalidArgument if parts is empty or not non-increasing.
    explicit DominantWeight(std::vector<long> parts);

    static DominantWeight zero(std::size_t n) { return DominantWeight(std::vector<long>(n, 0)); }

    std::size_t size() const noexcept { return parts_.size(); }
    long operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<long>& parts() const noexcept { return parts_; }

    bool is_nonnegative() const noexcept { return parts_.back() >= 0; }
    long total() const noexcept;

    // λ - c·(1,...,1)
    DominantWeight shifted(long c) const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<long> parts_;
};

std::string to_string(const DominantWeight& w);

/// Local data at an unramified place: Satake parameters z_i = χ_i(ϖ) and the
/// twist value u = α(ϖ). All entries nonzero.
struct SatakeData {
    std::vector<Rational> z;
    Rational u;

    SatakeData(std::vector<Rational> z_, Rational u_);
    std::size_t rank() const noexcept { return z.size(); }
};

// Weights with n parts, λ_n >= 0 and |λ| = total, lexicographically descending.
std::vector<DominantWeight> enumerate_weights(std::size_t n, long total);

// Σ_i (-1)^{i+1} λ_i. For even n this is Σ_{i<=n/2} (λ_{2i-1} - λ_{2i}); for
// odd n the trailing +λ_n is kept. For λ_n >= 0 it is the number of columns of
// odd length in the Young diagram of λ.
long alt_statistic(const DominantWeight& w);

} // namespace linperiod
