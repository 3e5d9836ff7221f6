#include "linperiod/partial_l.hpp"

#include "linperiod/errors.hpp"
#include "linperiod/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace linperiod {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i > start)
            out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <typename Int>
bool parse_integer(std::string_view s, Int& out)
{
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

Rational parse_rational_at(std::size_t line, std::string_view text)
{
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(line, e.what());
    }
}

void parse_header(std::size_t line, std::string_view text, SatakeTable& table)
{
    if (text.substr(0, 2) != "n=")
        throw ParseError(line, "expected header 'n=<rank> label=<string>'");
    text.remove_prefix(2);
    std::size_t end = 0;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
        ++end;
    std::size_t n = 0;
    if (!parse_integer(text.substr(0, end), n))
        throw ParseError(line, "rank in header is not an integer");
    if (n == 0)
        throw ValidationError(line, "rank must be at least 1");
    table.n = n;

    std::string_view rest = trim(text.substr(end));
    if (!rest.empty()) {
        if (rest.substr(0, 6) != "label=")
            throw ParseError(line, "expected 'label=<string>' after the rank");
        table.label = std::string(trim(rest.substr(6)));
    }
}

void parse_entry(std::size_t line, std::string_view text, SatakeTable& table)
{
    const auto bar1 = text.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || text.find('|', bar2 + 1) != std::string_view::npos)
        throw ParseError(line, "expected 'p | z_1 ... z_n | u'");

    const std::string_view p_text = trim(text.substr(0, bar1));
    std::uint64_t p = 0;
    if (!parse_integer(p_text, p))
        throw ParseError(line, "prime '" + std::string(p_text) + "' is not an integer");

    std::vector<Rational> z;
    for (auto tok : split_whitespace(text.substr(bar1 + 1, bar2 - bar1 - 1)))
        z.push_back(parse_rational_at(line, tok));

    const auto u_tokens = split_whitespace(text.substr(bar2 + 1));
    if (u_tokens.size() != 1)
        throw ParseError(line, "expected exactly one twist value u");
    Rational u = parse_rational_at(line, u_tokens.front());

    if (!is_prime(p))
        throw ValidationError(line, std::to_string(p) + " is not a prime");
    if (table.entries.contains(p))
        throw ValidationError(line, "duplicate prime " + std::to_string(p));
    if (z.size() != table.n)
        throw ValidationError(line, "expected " + std::to_string(table.n) + " Satake parameters, got "
                                        + std::to_string(z.size()));
    if (std::any_of(z.begin(), z.end(), [](const Rational& x) { return x == 0; }))
        throw ValidationError(line, "Satake parameters must be nonzero");
    if (u == 0)
        throw ValidationError(line, "twist value u must be nonzero");

    table.entries.emplace(p, SatakeData(std::move(z), std::move(u)));
}

// Largest e with p^e <= bound.
std::size_t max_exponent(std::uint64_t p, std::uint64_t bound)
{
    std::size_t e = 0;
    std::uint64_t power = 1;
    while (power <= bound / p) {
        power *= p;
        ++e;
    }
    return e;
}

std::vector<std::uint64_t> smallest_prime_factors(std::uint64_t bound)
{
    std::vector<std::uint64_t> spf(bound + 1, 0);
    for (std::uint64_t i = 2; i <= bound; ++i)
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= bound; j += i)
                if (spf[j] == 0)
                    spf[j] = i;
    return spf;
}

// Merges per-prime local coefficient lists into a_m for m <= bound.
// local(p) returns nullptr for primes without a local factor.
template <typename T, typename Local>
std::vector<T> multiplicative_merge(std::uint64_t bound, const Local& local)
{
    std::vector<T> a(bound + 1, T(0));
    if (bound >= 1)
        a[1] = T(1);
    const auto spf = smallest_prime_factors(bound);
    for (std::uint64_t m = 2; m <= bound; ++m) {
        const std::uint64_t p = spf[m];
        std::uint64_t rest = m;
        std::size_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        const std::vector<T>* coeffs = local(p);
        if (coeffs == nullptr || (*coeffs)[e] == T(0))
            continue;
        a[m] = (*coeffs)[e] * a[rest];
    }
    return a;
}

struct MajorantTerm {
    double radius;
    int degree;
};

std::vector<MajorantTerm> majorant_terms(const SatakeData& data, FactorSelection selection)
{
    std::vector<MajorantTerm> terms;
    if (selection != FactorSelection::exterior_only)
        for (const auto& zi : data.z)
            terms.push_back({std::abs(Rational(data.u * zi).get_d()), 1});
    if (selection != FactorSelection::standard_only)
        for (std::size_t j = 0; j < data.z.size(); ++j)
            for (std::size_t k = j + 1; k < data.z.size(); ++k)
                terms.push_back({std::abs(Rational(data.z[j] * data.z[k]).get_d()), 2});
    return terms;
}

std::complex<double> evaluate_poly(const std::vector<Rational>& poly, std::complex<double> t)
{
    std::complex<double> acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * t + it->get_d();
    return acc;
}

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

SatakeTable ingest(std::istream& in)
{
    SatakeTable table;
    bool have_header = false;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        text = trim(text);
        if (text.empty())
            continue;
        if (!have_header) {
            parse_header(line, text, table);
            have_header = true;
        } else {
            parse_entry(line, text, table);
        }
    }
    if (!have_header)
        throw ParseError(line, "missing header 'n=<rank> label=<string>'");
    return table;
}

SatakeTable ingest_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    return ingest(in);
}

EulerFactor selected_local_factor(const SatakeData& data, FactorSelection selection)
{
    switch (selection) {
    case FactorSelection::standard_only:
        return standard_factor(data);
    case FactorSelection::exterior_only:
        return exterior_square_factor(data);
    case FactorSelection::full:
        break;
    }
    return linear_local_factor(data);
}

DirichletSeries assemble(const SatakeTable& table, std::uint64_t bound, FactorSelection selection)
{
    return assemble(table, bound, selection, thread_limit());
}

DirichletSeries assemble(const SatakeTable& table, std::uint64_t bound, FactorSelection selection, unsigned threads)
{
    DirichletSeries out;
    out.n = table.n;
    out.label = table.label;
    out.bound = bound;
    out.selection = selection;
    out.places = table.entries;

    const auto primes = primes_up_to(bound);
    std::vector<std::uint64_t> included;
    for (auto p : primes) {
        if (table.entries.contains(p))
            included.push_back(p);
        else
            out.skipped_primes.push_back(p);
    }

    std::vector<std::vector<Rational>> local(included.size());
    parallel_for(included.size(), threads, [&](std::size_t i) {
        const std::uint64_t p = included[i];
        const auto& data = table.entries.at(p);
        local[i] = selected_local_factor(data, selection).inverse_series(max_exponent(p, bound)).coeffs();
    });

    std::vector<const std::vector<Rational>*> by_prime(bound + 1, nullptr);
    for (std::size_t i = 0; i < included.size(); ++i)
        by_prime[included[i]] = &local[i];

    out.coeffs = multiplicative_merge<Rational>(bound, [&](std::uint64_t p) { return by_prime[p]; });
    return out;
}

std::vector<Rational> dirichlet_convolve(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size())
        throw InvalidArgument("Dirichlet convolution needs series with the same bound");
    const std::size_t bound = a.empty() ? 0 : a.size() - 1;
    std::vector<Rational> c(a.size(), Rational(0));
    for (std::size_t d = 1; d <= bound; ++d) {
        if (a[d] == 0)
            continue;
        for (std::size_t e = 1; d * e <= bound; ++e)
            if (b[e] != 0)
                c[d * e] += a[d] * b[e];
    }
    return c;
}

Evaluation evaluate(const DirichletSeries& series, std::complex<double> s)
{
    const double sigma = s.real();
    Evaluation result{0.0, 0.0, true};

    for (std::uint64_t m = 1; m <= series.bound; ++m) {
        if (series.coeffs[m] == 0)
            continue;
        result.value += series.coeffs[m].get_d() * std::exp(-s * std::log(static_cast<double>(m)));
    }

    // Majorant B(σ) = ∏_p ∏ 1/(1 - r p^{-dσ}) dominates Σ |a_m| m^{-σ}.
    double theta = -std::numeric_limits<double>::infinity();
    double majorant_total = 1.0;
    bool majorant_finite = true;
    std::vector<std::vector<double>> local_majorants(series.bound + 1);
    for (const auto& [p, data] : series.places) {
        const double logp = std::log(static_cast<double>(p));
        const auto terms = majorant_terms(data, series.selection);
        for (const auto& term : terms) {
            theta = std::max(theta, std::log(term.radius) / (term.degree * logp));
            const double x = term.radius * std::exp(-term.degree * sigma * logp);
            if (x >= 1.0)
                majorant_finite = false;
            else
                majorant_total /= (1.0 - x);
        }
        if (p > series.bound)
            continue;
        // Coefficients of ∏ 1/(1 - r t^d), t = p^{-s}, up to p^e <= bound.
        const std::size_t e = max_exponent(p, series.bound);
        std::vector<double> local(e + 1, 0.0);
        local[0] = 1.0;
        for (const auto& term : terms)
            for (std::size_t k = static_cast<std::size_t>(term.degree); k <= e; ++k)
                local[k] += term.radius * local[k - static_cast<std::size_t>(term.degree)];
        local_majorants[p] = std::move(local);
    }
    result.convergence_verified = !(theta > -std::numeric_limits<double>::infinity()) || sigma > 1.0 + theta;

    if (!majorant_finite) {
        result.tail_bound = std::numeric_limits<double>::infinity();
        result.convergence_verified = false;
        return result;
    }

    const auto b = multiplicative_merge<double>(series.bound, [&](std::uint64_t p) -> const std::vector<double>* {
        return local_majorants[p].empty() ? nullptr : &local_majorants[p];
    });
    double partial = 0.0;
    for (std::uint64_t m = 1; m <= series.bound; ++m)
        if (b[m] != 0.0)
            partial += b[m] * std::exp(-sigma * std::log(static_cast<double>(m)));
    result.tail_bound = std::max(0.0, majorant_total - partial) + 1e-12 * majorant_total;
    return result;
}

std::complex<double> euler_product(const std::map<std::uint64_t, SatakeData>& places, std::complex<double> s,
                                   FactorSelection selection)
{
    std::complex<double> product = 1.0;
    for (const auto& [p, data] : places) {
        const std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
        product /= evaluate_poly(selected_local_factor(data, selection).poly, t);
    }
    return product;
}

nlohmann::json to_json(const DirichletSeries& series)
{
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::uint64_t m = 1; m <= series.bound; ++m)
        if (series.coeffs[m] != 0)
            coeffs[std::to_string(m)] = to_string(series.coeffs[m]);
    return {
        {"label", series.label},
        {"n", series.n},
        {"X", series.bound},
        {"skipped_primes", series.skipped_primes},
        {"coeffs", std::move(coeffs)},
    };
}

} // namespace linperiod
