#include "linperiod/rational.hpp"

#include "linperiod/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace linperiod {

namespace {

bool is_decimal(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    if (!is_decimal(num, true) || (slash != std::string_view::npos && !is_decimal(den, false)))
        throw ParseError(0, "not a rational number: '" + std::string(text) + "'");

    if (!num.empty() && num.front() == '+')
        num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos)
        d = mpz_class(std::string(den), 10);
    if (d == 0)
        throw ParseError(0, "zero denominator in '" + std::string(text) + "'");

    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_rational(text.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw InvalidArgument("negative power of zero");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // base is canonical, so num/den already is.
    return Rational(num, den);
}

} // namespace linperiod
