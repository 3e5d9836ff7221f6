#include "cli/cli.hpp"

#include "linperiod/errors.hpp"
#include "linperiod/group.hpp"
#include "linperiod/local_factors.hpp"
#include "linperiod/partial_l.hpp"
#include "linperiod/sampling.hpp"
#include "linperiod/schur.hpp"
#include "linperiod/weights.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <complex>
#include <iomanip>
#include <ostream>
#include <regex>

namespace linperiod::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "human";

    std::string lambda;
    std::string z;
    std::string u = "1";
    std::string q;
    std::string method = "jacobi-trudi";
    std::size_t n = 0;
    long total = 0;
    std::string which = "w";
    std::int64_t range = 3;
    std::size_t random_count = 0;
    std::uint64_t seed = default_seed;
    std::size_t order = 8;
    bool literal_exterior = false;
    std::string side = "weight";
    std::string input;
    std::uint64_t bound = 10000;
    std::string eval;
};

std::vector<long> parse_long_list(const std::string& text)
{
    std::vector<long> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(0, "not an integer list: '" + text + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::complex<double> parse_complex(const std::string& text)
{
    // a, a+bi, a-bi, bi
    static const std::regex pattern(R"(^\s*([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?\s*(?:([+-])\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?i)?\s*$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, pattern) || (!m[1].matched && !m[2].matched))
        throw ParseError(0, "not a complex number: '" + text + "'");
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
        im = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-")
            im = -im;
    }
    return {re, im};
}

SatakeData satake_from(const Options& o)
{
    auto z = parse_rational_list(o.z);
    if (o.n != 0 && o.n != z.size())
        throw InvalidArgument("--n is " + std::to_string(o.n) + " but --z has " + std::to_string(z.size()) + " entries");
    return SatakeData(std::move(z), parse_rational(o.u));
}

json to_json_poly(const std::vector<Rational>& poly)
{
    json j = json::array();
    for (const auto& c : poly)
        j.push_back(to_string(c));
    return j;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<std::int64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_schur(const Options& o, std::ostream& out)
{
    const DominantWeight lambda(parse_long_list(o.lambda));
    const auto z = parse_rational_list(o.z);
    Rational value;
    if (o.method == "alternant")
        value = schur_alternant(lambda, z);
    else if (lambda.is_nonnegative())
        value = schur_jacobi_trudi(lambda, z);
    else
        value = schur_laurent(lambda, z);

    if (o.format == "json")
        out << json{{"lambda", lambda.parts()}, {"value", to_string(value)}}.dump() << '\n';
    else
        out << to_string(value) << '\n';
    return success;
}

int cmd_weights(const Options& o, std::ostream& out)
{
    const auto weights = enumerate_weights(o.n, o.total);
    if (o.format == "json") {
        json j = json::array();
        for (const auto& w : weights)
            j.push_back(w.parts());
        out << j.dump() << '\n';
        return success;
    }
    for (const auto& w : weights) {
        for (std::size_t i = 0; i < w.size(); ++i)
            out << (i ? " " : "") << w[i];
        out << '\n';
    }
    return success;
}

int cmd_perm(const Options& o, std::ostream& out)
{
    const InterleavePerm w = o.which == "wprime" ? build_wn_prime(o.n) : build_wn(o.n);
    const auto m = w.matrix();
    if (o.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.size(); ++j)
                row.push_back(m(i, j) == 0 ? 0 : 1);
            rows.push_back(std::move(row));
        }
        out << json{{"which", o.which}, {"n", o.n}, {"images", w.images()}, {"matrix", rows}}.dump() << '\n';
        return success;
    }
    out << join(w.images()) << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
            out << (j ? " " : "") << (m(i, j) == 0 ? 0 : 1);
        out << '\n';
    }
    return success;
}

int cmd_split_check(const Options& o, std::ostream& out)
{
    if (o.n == 0)
        throw InvalidArgument("--n must be positive");
    std::size_t checked = 0;
    auto report_failure = [&](const TorusExponents& a) {
        const auto split = modulus_split(a);
        out << "FAIL n=" << o.n << " a=(" << join(a.exps) << ") lhs=v^" << split.lhs_v_exponent << " rhs=v^"
            << split.rhs_v_exponent << '\n';
        return verification_failed;
    };

    if (o.random_count > 0) {
        Rng rng(o.seed);
        for (; checked < o.random_count; ++checked) {
            const auto a = sample_exponents(o.n, o.range, rng);
            if (!modulus_split_check(o.n, a))
                return report_failure(a);
        }
    } else {
        TorusExponents a{std::vector<std::int64_t>(o.n, -o.range)};
        while (true) {
            ++checked;
            if (!modulus_split_check(o.n, a))
                return report_failure(a);
            std::size_t i = 0;
            while (i < o.n && a.exps[i] == o.range)
                a.exps[i++] = -o.range;
            if (i == o.n)
                break;
            ++a.exps[i];
        }
    }
    out << "PASS n=" << o.n << " vectors=" << checked << '\n';
    return success;
}

int cmd_verify_identity(const Options& o, std::ostream& out)
{
    const SatakeData data = satake_from(o);
    const auto convention = o.literal_exterior ? ExteriorConvention::literal : ExteriorConvention::doubled;
    const IdentityReport report = verify_macdonald(data, o.order, convention);
    if (o.format == "json") {
        json j{{"holds", report.holds()}, {"order", report.order}};
        if (report.first_discrepancy) {
            const auto& d = *report.first_discrepancy;
            j["discrepancy"] = {{"order", d.order},
                                {"weight_sum", to_string(d.weight_sum)},
                                {"product", to_string(d.product)}};
        }
        out << j.dump() << '\n';
    } else if (report.holds()) {
        out << "PASS\n";
    } else {
        const auto& d = *report.first_discrepancy;
        out << "FAIL first discrepancy at t^" << d.order << ": weight sum " << to_string(d.weight_sum)
            << " != product " << to_string(d.product) << '\n';
    }
    return report.holds() ? success : verification_failed;
}

int cmd_local_factor(const Options& o, std::ostream& out)
{
    const SatakeData data = satake_from(o);
    const json j{
        {"standard", to_json_poly(standard_factor(data).poly)},
        {"exterior_square", to_json_poly(exterior_square_factor(data).poly)},
        {"combined", to_json_poly(linear_local_factor(data).poly)},
    };
    out << j.dump() << '\n';
    return success;
}

int cmd_unramified_integral(const Options& o, std::ostream& out)
{
    const SatakeData data = satake_from(o);
    const auto convention = o.literal_exterior ? ExteriorConvention::literal : ExteriorConvention::doubled;
    const TruncatedSeries s = o.side == "product" ? product_side(data, o.order, convention)
                                                  : weight_sum_integral(data, o.order);
    out << to_json(s).dump() << '\n';
    return success;
}

int cmd_partial_l(const Options& o, std::ostream& out)
{
    const SatakeTable table = ingest_file(o.input);
    const DirichletSeries series = assemble(table, o.bound);
    json j = to_json(series);
    if (!o.eval.empty()) {
        const Evaluation e = evaluate(series, parse_complex(o.eval));
        j["evaluation"] = {
            {"s", o.eval},
            {"re", e.value.real()},
            {"im", e.value.imag()},
            {"tail_bound", std::isfinite(e.tail_bound) ? json(e.tail_bound) : json("inf")},
            {"convergence_verified", e.convergence_verified},
        };
    }
    out << j.dump() << '\n';
    return success;
}

int cmd_real_part(const Options& o, std::ostream& out)
{
    const double r = real_part({parse_rational(o.u), parse_rational(o.q)});
    if (o.format == "json")
        out << json{{"u", o.u}, {"q", o.q}, {"re", r}}.dump() << '\n';
    else
        out << std::setprecision(15) << r << '\n';
    return success;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact unramified local theory of the Bump-Friedberg L-function", "linperiod"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));

    auto* schur = app.add_subcommand("schur", "Exact Schur polynomial value s_lambda(z)");
    schur->add_option("--lambda", o.lambda, "Dominant weight, e.g. 2,1 (use --lambda=-1,-1 for negative first part)")->required();
    schur->add_option("--z", o.z, "Comma separated rationals")->required();
    schur->add_option("--method", o.method, "jacobi-trudi (Laurent shift for negative parts) or alternant")
        ->check(CLI::IsMember({"jacobi-trudi", "alternant"}));

    auto* weights = app.add_subcommand("weights", "Dominant weights with lambda_n >= 0 of a given size");
    weights->add_option("--n", o.n, "Number of parts")->required();
    weights->add_option("--total", o.total, "Sum of parts")->required();

    auto* perm = app.add_subcommand("perm", "Interleaving permutation w_n or w'_n");
    perm->add_option("--n", o.n)->required();
    perm->add_option("--which", o.which)->check(CLI::IsMember({"w", "wprime"}));

    auto* split = app.add_subcommand("split-check", "Check the modulus splitting on exponent vectors");
    split->add_option("--n", o.n)->required();
    split->add_option("--range", o.range, "Entries range over [-range, range]");
    split->add_option("--random", o.random_count, "Check this many random vectors instead of all");
    split->add_option("--seed", o.seed);

    auto* verify = app.add_subcommand("verify-identity", "Compare weight sum with the Euler product");
    verify->add_option("--n", o.n, "Rank (must match --z)");
    verify->add_option("--z", o.z)->required();
    verify->add_option("--u", o.u);
    verify->add_option("--order", o.order);
    verify->add_flag("--literal-exterior", o.literal_exterior, "Use L(s, Lambda^2) instead of L(2s, Lambda^2)");

    auto* local = app.add_subcommand("local-factor", "Standard, exterior-square and combined factor polynomials");
    local->add_option("--z", o.z)->required();
    local->add_option("--u", o.u);

    auto* integral = app.add_subcommand("unramified-integral", "Truncated unramified integral as a series in t");
    integral->add_option("--z", o.z)->required();
    integral->add_option("--u", o.u);
    integral->add_option("--order", o.order);
    integral->add_option("--side", o.side, "weight (weight sum) or product (inverted Euler factor)")
        ->check(CLI::IsMember({"weight", "product"}));
    integral->add_flag("--literal-exterior", o.literal_exterior);

    auto* partial = app.add_subcommand("partial-l", "Assemble the partial L-function as a Dirichlet series");
    partial->add_option("--input", o.input, "Satake table file")->required();
    partial->add_option("--X", o.bound, "Coefficient bound");
    partial->add_option("--eval", o.eval, "Evaluate at s, e.g. 2.0+0.0i");

    auto* real = app.add_subcommand("real-part", "Re of an unramified character from u = chi(varpi)");
    real->add_option("--u", o.u)->required();
    real->add_option("--q", o.q)->required();

    std::vector<std::string> argv_storage{"linperiod"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return usage_error;
    }

    try {
        if (schur->parsed())
            return cmd_schur(o, out);
        if (weights->parsed())
            return cmd_weights(o, out);
        if (perm->parsed())
            return cmd_perm(o, out);
        if (split->parsed())
            return cmd_split_check(o, out);
        if (verify->parsed())
            return cmd_verify_identity(o, out);
        if (local->parsed())
            return cmd_local_factor(o, out);
        if (integral->parsed())
            return cmd_unramified_integral(o, out);
        if (partial->parsed())
            return cmd_partial_l(o, out);
        if (real->parsed())
            return cmd_real_part(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace linperiod::cli
