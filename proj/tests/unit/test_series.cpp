#include <doctest.h>

#include "linperiod/errors.hpp"
#include "linperiod/sampling.hpp"
#include "linperiod/series.hpp"

#include <nlohmann/json.hpp>

using namespace linperiod;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

TruncatedSeries random_series(std::size_t order, Rng& rng)
{
    std::vector<Rational> c;
    std::uniform_int_distribution<int> zero(0, 4);
    for (std::size_t k = 0; k <= order; ++k)
        c.push_back(zero(rng) == 0 ? Rational(0) : sample_small_rational(rng));
    return TruncatedSeries(order, std::move(c));
}

} // namespace

TEST_CASE("rational parse and format")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-6/3")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("+5")) == "5");
    CHECK(parse_rational("123456789012345678901234567890/3") == Rational(mpz_class("41152263004115226300411522630")));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);

    const auto list = parse_rational_list("1,2,1/2,-3");
    REQUIRE(list.size() == 4);
    CHECK(list[2] == q(1, 2));
    CHECK(list[3] == -3);
}

TEST_CASE("rational exactness: (a + b) - b == a")
{
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Rational a = sample_small_rational(rng) / 7;
        const Rational b = sample_small_rational(rng) * 11 / 13;
        CHECK(Rational(a + b - b) == a);
        CHECK(a.get_den() > 0);
    }
}

TEST_CASE("series_add")
{
    CHECK(TruncatedSeries(2, {1, 1}) + TruncatedSeries(2, {1, -1}) == TruncatedSeries(2, {2, 0, 0}));
    const TruncatedSeries a(3, {q(1, 2), q(-3), q(5, 7)});
    CHECK(a + TruncatedSeries(3) == a);
    CHECK(TruncatedSeries(1, {q(1, 2), q(1, 3)}) + TruncatedSeries(1, {q(1, 2), q(2, 3)}) == TruncatedSeries(1, {1, 1}));
    CHECK_THROWS_AS(TruncatedSeries(1) + TruncatedSeries(2), OrderMismatch);
}

TEST_CASE("series_mul")
{
    CHECK(TruncatedSeries(2, {1, 1}) * TruncatedSeries(2, {1, -1}) == TruncatedSeries(2, {1, 0, -1}));
    const TruncatedSeries a(3, {q(2), q(-1, 3), 0, q(4)});
    CHECK(a * TruncatedSeries::one(3) == a);
    // (1 + t + t²)(1 - t) = 1 - t³, and t³ is dropped at order 2.
    CHECK(TruncatedSeries(2, {1, 1, 1}) * TruncatedSeries(2, {1, -1}) == TruncatedSeries(2, {1, 0, 0}));
    CHECK_THROWS_AS(TruncatedSeries(2) * TruncatedSeries(3), OrderMismatch);
}

TEST_CASE("series_invert")
{
    CHECK(series_invert(TruncatedSeries(3, {1, -1})) == TruncatedSeries(3, {1, 1, 1, 1}));
    CHECK(series_invert(TruncatedSeries::one(4)) == TruncatedSeries::one(4));
    // 1/((1-t)(1-2t)) = 2/(1-2t) - 1/(1-t): coefficients 2^{k+1} - 1.
    const TruncatedSeries d = TruncatedSeries(2, {1, -1}) * TruncatedSeries(2, {1, -2});
    CHECK(series_invert(d) == TruncatedSeries(2, {1, 3, 7}));
    CHECK(series_invert(TruncatedSeries(2, {q(1, 2)})) == TruncatedSeries::constant(2, 2));
    CHECK_THROWS_AS(series_invert(TruncatedSeries(3, {0, 1})), NotAUnit);
}

TEST_CASE("ring axioms hold exactly on random series")
{
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = 1 + trial % 9;
        const auto a = random_series(order, rng);
        const auto b = random_series(order, rng);
        const auto c = random_series(order, rng);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == TruncatedSeries(order));
    }
}

TEST_CASE("inverse of a unit multiplies back to one")
{
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = trial % 10;
        std::vector<Rational> c = random_series(order, rng).coeffs();
        c[0] = sample_small_rational(rng);
        const TruncatedSeries a(order, c);
        CHECK(a * series_invert(a) == TruncatedSeries::one(order));
    }
}

TEST_CASE("truncation coherence")
{
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t big = 8, small = trial % 8;
        auto a = random_series(big, rng);
        auto b = random_series(big, rng);
        std::vector<Rational> ac = a.coeffs();
        ac[0] = 1;
        a = TruncatedSeries(big, ac);
        CHECK((a * b).truncated(small) == a.truncated(small) * b.truncated(small));
        CHECK((a + b).truncated(small) == a.truncated(small) + b.truncated(small));
        CHECK(series_invert(a).truncated(small) == series_invert(a.truncated(small)));
    }
}

TEST_CASE("series JSON round trip")
{
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(trial % 7, rng);
        const auto j = to_json(a);
        CHECK(series_from_json(nlohmann::json::parse(j.dump())) == a);
    }
    CHECK(to_json(TruncatedSeries(2, {1, q(-1, 2)})).dump() == R"(["1","-1/2","0"])");
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse("[1, 2]")), ParseError);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse("[]")), ParseError);
}
