#pragma once

#include "linperiod/local_factors.hpp"
#include "linperiod/rational.hpp"
#include "linperiod/weights.hpp"

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace linperiod {

/// Satake data at the unramified places of Q (one place per prime p, q = p).
struct SatakeTable {
    std::size_t n = 0;
    std::string label;
    std::map<std::uint64_t, SatakeData> entries;
};

// Line format:
//   n=<rank> label=<string>        header, first non-comment line
//   p | z_1 z_2 ... z_n | u        one line per place
// '#' starts a comment. Rationals are "a" or "a/b".
// Throws ParseError (bad syntax) or ValidationError (duplicate or non-prime p,
// wrong z length, zero parameter), both carrying the 1-based line number.
SatakeTable ingest(std::istream& in);
SatakeTable ingest_file(const std::filesystem::path& path);

enum class FactorSelection { full, standard_only, exterior_only };

/// Dirichlet series Σ_{m<=bound} a_m m^{-s} of the partial L-function
/// ∏_p L(s, α_p ⊗ π_p) L(2s, Λ², π_p) over the table's places.
struct DirichletSeries {
    std::size_t n = 0;
    std::string label;
    std::uint64_t bound = 0;
    FactorSelection selection = FactorSelection::full;
    // coeffs[m] for 1 <= m <= bound; coeffs[0] is unused and zero.
    std::vector<Rational> coeffs;
    // Primes <= bound with no table entry, treated as excluded places.
    std::vector<std::uint64_t> skipped_primes;
    // All table places, including those above bound; evaluate() uses them for
    // the tail majorant.
    std::map<std::uint64_t, SatakeData> places;

    const Rational& operator[](std::uint64_t m) const { return coeffs[m]; }
};

// Expands each local 1/P_p(t) to order floor(log_p bound) and merges them
// multiplicatively. Per-prime expansions run in parallel (thread_limit());
// the merge is sequential in increasing m.
DirichletSeries assemble(const SatakeTable& table, std::uint64_t bound,
                         FactorSelection selection = FactorSelection::full);
DirichletSeries assemble(const SatakeTable& table, std::uint64_t bound,
                         FactorSelection selection, unsigned threads);

// Local polynomial used for one place under a selection.
EulerFactor selected_local_factor(const SatakeData& data, FactorSelection selection);

// Dirichlet convolution of two series with the same bound.
std::vector<Rational> dirichlet_convolve(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct Evaluation {
    std::complex<double> value;
    // Upper bound for |Σ_{m>bound} a_m m^{-s}|; +inf when the majorant diverges.
    double tail_bound;
    // Re(s) > 1 + θ, θ = max over places of log_p|u z_i| and log_p|z_j z_k| / 2.
    bool convergence_verified;
};

Evaluation evaluate(const DirichletSeries& series, std::complex<double> s);

// ∏_p 1/P_p(p^{-s}) over every place of the table (no truncation).
std::complex<double> euler_product(const std::map<std::uint64_t, SatakeData>& places,
                                   std::complex<double> s,
                                   FactorSelection selection = FactorSelection::full);

// {label, n, X, skipped_primes, coeffs: {"m": "a/b"}} with nonzero coeffs only.
nlohmann::json to_json(const DirichletSeries& series);

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

} // namespace linperiod
