#pragma once

#include "linperiod/matrix.hpp"
#include "linperiod/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace linperiod {

/// Permutation of {1,...,n} stored as its image vector: images()[i-1] = w(i).
///
/// The matrix realization has a 1 in row w(j), column j, so it sends the
/// basis vector e_j to e_{w(j)}.
class InterleavePerm {
public:
    // Throws InvalidArgument unless images is a bijection of {1,...,n}.
    explicit InterleavePerm(std::vector<std::size_t> images);

    static InterleavePerm identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    // 1-based: operator()(i) = w(i).
    std::size_t operator()(std::size_t i) const { return images_[i - 1]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    InterleavePerm inverse() const;
    SquareMatrix<Rational> matrix() const;

    // Pattern restriction to {1,...,k}: keep the positions i with w(i) <= k and
    // relabel them 1..k in increasing order. For a permutation fixing
    // k+1,...,n this is the upper-left k x k block of the matrix.
    InterleavePerm restricted(std::size_t k) const;

    friend bool operator==(const InterleavePerm&, const InterleavePerm&) = default;

private:
    std::vector<std::size_t> images_;
};

// n = 2m:   i -> 2i-1 (i <= m),   m+i -> 2i (i <= m).
// n = 2m+1: i -> 2i-1 (i <= m+1), m+1+i -> 2i (i <= m).
// H_n = w_n M_n w_n^{-1} is then "odd indices x odd indices" times
// "even indices x even indices", and H_n ∩ G_{n-1} = H_{n-1}.
InterleavePerm build_wn(std::size_t n);

// n = 2m:   i -> 2i-1 (i <= m), m+1 -> 2m, m+1+i -> 2i (i <= m-1).
// n = 2m+1: i -> 2i (i <= m),   m+1 -> 2m+1, m+1+i -> 2i-1 (i <= m).
// Requires n >= 2.
InterleavePerm build_wn_prime(std::size_t n);

// Sizes (a, b) of the Levi blocks of M_n: (m, m) or (m+1, m).
std::pair<std::size_t, std::size_t> levi_block_sizes(std::size_t n);

// h(g1, g2) = w_n diag(g1, g2) w_n^{-1} with n = a + b, computed by index
// relabeling: result(w(i), w(j)) = diag(g1, g2)(i, j).
SquareMatrix<Rational> interleave(const SquareMatrix<Rational>& g1, const SquareMatrix<Rational>& g2);

// True iff w_n^{-1} g w_n is block diagonal with blocks levi_block_sizes(n).
bool is_in_Hn(const SquareMatrix<Rational>& g);

// diag(g, 1)
SquareMatrix<Rational> embed_with_one(const SquareMatrix<Rational>& g);

/// Torus element diag(ϖ^{e_1}, ..., ϖ^{e_n}), or equivalently the exponent
/// profile of an unramified character of the diagonal torus.
struct TorusExponents {
    std::vector<std::int64_t> exps;

    std::size_t size() const noexcept { return exps.size(); }
    friend bool operator==(const TorusExponents&, const TorusExponents&) = default;
};

// a' = (a_1, a_3, ...), a'' = (a_2, a_4, ...).
std::pair<TorusExponents, TorusExponents> torus_split(const TorusExponents& a);

// E with δ_{B_n}(ϖ^a) = q^{-E}: E = Σ_i a_i (n + 1 - 2i), n = a.size().
std::int64_t borel_modulus_exponent(const TorusExponents& a);

// Σ a'_i - Σ a''_j, so that δ(ϖ^a) = |det a'| / |det a''| = q^{-result}.
std::int64_t delta_character_exponent(const TorusExponents& a);

/// Both sides of the torus-level modulus splitting, as exponents of
/// v = q^{1/2}.
///   even n = 2m:   δ_{B_m}(a') δ_{B_m}(a'') δ(a)^{1/2} = δ_{B_n}^{1/2}(a)
///   odd  n = 2m+1: δ_{B_{m+1}}(a') δ_{B_m}(a'')        = δ_{B_n}^{1/2}(a)
struct ModulusSplit {
    std::int64_t lhs_v_exponent;
    std::int64_t rhs_v_exponent;
    bool holds() const noexcept { return lhs_v_exponent == rhs_v_exponent; }
};

ModulusSplit modulus_split(const TorusExponents& a);

// Throws InvalidArgument when a.size() != n.
bool modulus_split_check(std::size_t n, const TorusExponents& a);

/// Unramified character of F^*, determined by u = χ(ϖ), on a field with
/// residue cardinality q > 1.
struct UnramifiedCharacter {
    Rational value_at_uniformizer;
    Rational q;
};

// Re(χ) = r with |χ(x)| = |x|^r, i.e. |u| = q^{-r}: returns -log|u| / log q.
double real_part(const UnramifiedCharacter& chi);

} // namespace linperiod
