#include <doctest.h>

#include <dalg/carriers.hpp>
#include <dalg/diff_laws.hpp>
#include <dalg/text.hpp>

#include <algorithm>

using namespace dalg;

namespace
{

template <typename F>
syntax_error syntax_failure(F &&f)
{
    try {
        f();
    } catch (const syntax_error &e) {
        return e;
    }
    FAIL("no syntax error");
    throw;
}

bool mentions(const syntax_error &e, const std::string &token)
{
    return std::find(e.expected.begin(), e.expected.end(), token) != e.expected.end();
}

} // namespace

TEST_CASE("parse trees")
{
    const auto e = parse("x'^2 + 2*x*x''", parse_mode::diffpoly);
    REQUIRE(e.type == expr::kind::sum);
    REQUIRE(e.args.size() == 2);
    const auto &sq = e.args[0];
    REQUIRE(sq.type == expr::kind::power);
    CHECK(sq.count == 2);
    CHECK(sq.args[0].var == dvar{"x", 1});
    const auto &prod = e.args[1];
    REQUIRE(prod.type == expr::kind::product);
    REQUIRE(prod.args.size() == 3);
    CHECK(prod.args[0].value == Rational(2));
    CHECK(prod.args[1].var == dvar{"x", 0});
    CHECK(prod.args[2].var == dvar{"x", 2});
    CHECK(parse_diff_poly("x'^2 + 2*x*x''") == dv("x", 1) * dv("x", 1) + Rational(2) * dv("x") * dv("x", 2));
}

TEST_CASE("derivative applications")
{
    CHECK(parse_diff_poly("D(x^2)") == parse_diff_poly("2*x*x'"));
    CHECK(parse_diff_poly("D^2(x^2)") == parse_diff_poly("2*x'^2 + 2*x*x''"));
    CHECK(parse_diff_poly("D^0(x*y)") == parse_diff_poly("x*y"));
    CHECK(parse_diff_poly("D(D(x))") == dv("x", 2));
    CHECK(parse_diff_poly("x^(5)") == dv("x", 5));
    CHECK(parse_diff_poly("D*x") == dv("D") * dv("x"));
    CHECK(parse_poly("D^2") == parse_poly("D*D"));
}

TEST_CASE("whitespace, signs and rationals")
{
    CHECK(parse_poly("  x  *  y + 3/1 ") == parse_poly("x*y+3"));
    CHECK(parse_poly("-x - (-1)") == parse_poly("1 - x"));
    CHECK_THROWS_AS(parse_poly("3 / 1"), syntax_error);
    CHECK_THROWS_AS(parse_poly("-x - -1"), syntax_error);
    CHECK(parse_poly("-(x + y)^2") == parse_poly("-x^2 - 2*x*y - y^2"));
    CHECK(parse_poly("4/6*x") == parse_poly("2/3*x"));
    CHECK(parse_poly("x - x").is_zero());
    CHECK(parse_poly("0").is_zero());
}

TEST_CASE("syntax errors carry offsets and expected tokens")
{
    const auto end = syntax_failure([] { parse_poly("x^"); });
    CHECK(end.offset == 3);
    CHECK(mentions(end, "natural number"));

    const auto trailing = syntax_failure([] { parse_poly("x y"); });
    CHECK(trailing.offset == 3);
    CHECK(mentions(trailing, "end of input"));
    CHECK(mentions(trailing, "'+'"));

    const auto empty = syntax_failure([] { parse_poly(""); });
    CHECK(empty.offset == 1);
    CHECK(mentions(empty, "variable"));

    const auto paren = syntax_failure([] { parse_poly("(x + 1"); });
    CHECK(paren.offset == 7);
    CHECK(mentions(paren, "')'"));

    const auto zero_den = syntax_failure([] { parse_poly("1/0"); });
    CHECK(zero_den.offset == 3);

    const auto star = syntax_failure([] { parse_diff_poly("x * * y"); });
    CHECK(star.offset == 5);
    CHECK(mentions(star, "'('"));
}

TEST_CASE("primes and D are rejected for plain polynomials")
{
    CHECK_THROWS_AS(parse_poly("x'"), mode_error);
    CHECK_THROWS_AS(parse_poly("D(x)"), mode_error);
    CHECK_THROWS_AS(parse_poly("x^(2)"), mode_error);
    try {
        parse_poly("y + x'");
        FAIL("no mode error");
    } catch (const mode_error &e) {
        CHECK(e.offset == 6);
    }
    CHECK_NOTHROW(parse_diff_poly("x'"));
}

TEST_CASE("printing order")
{
    CHECK(to_string(parse_poly("1 + y + x + x^2 + x*y")) == "x^2 + x*y + x + y + 1");
    CHECK(to_string(parse_poly("-x + 1/2")) == "-x + 1/2");
    CHECK(to_string(parse_poly("3 - 2*y*x^2")) == "-2*x^2*y + 3");
    CHECK(to_string(parse_poly("0")) == "0");
    CHECK(to_string(parse_diff_poly("x*x'' + x'^2")) == "x'^2 + x*x''");
    CHECK(to_string(dv("x", 4)) == "x^(4)");
    CHECK(to_string(parse_rational_list("[ 1, -2/4 ,3]")) == "[1,-1/2,3]");
    CHECK_THROWS_AS(parse_rational_list("[1,"), syntax_error);
    CHECK(parse_rational_list("[]").empty());
}

TEST_CASE("print then parse is the identity")
{
    const std::vector<var_name> vars = {"w", "x", "y", "z"};
    const splitmix64 root(51);
    for (std::uint64_t t = 0; t < 300; ++t) {
        auto rng = root.split(t);
        const auto d = random_diff_poly(rng, 5);
        INFO(to_string(d));
        CHECK(parse_diff_poly(to_string(d)) == d);
        CHECK(to_string(parse_diff_poly(to_string(d))) == to_string(d));
        const auto p = random_poly(rng, vars, 6, 5);
        CHECK(parse_poly(to_string(p)) == p);
        const auto high = d_shift_n(d, 5);
        CHECK(parse_diff_poly(to_string(high)) == high);
    }
}
