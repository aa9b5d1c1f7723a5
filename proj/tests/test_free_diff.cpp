#include <doctest.h>

#include <dalg/carriers.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/law_suite.hpp>
#include <dalg/series.hpp>
#include <dalg/text.hpp>

#include "oracles.hpp"

using namespace dalg;

namespace
{

diff_poly D(const char *s) { return parse_diff_poly(s); }

} // namespace

TEST_CASE("d_shift")
{
    CHECK(d_shift(D("x*y'")) == D("x'*y' + x*y''"));
    CHECK(d_shift(D("5")).is_zero());
    CHECK(d_shift_n(D("x^2"), 3) == D("6*x'*x'' + 2*x*x'''"));
    CHECK(d_shift_n(D("x^2"), 0) == D("x^2"));
    CHECK(to_string(d_shift_n(D("x^2"), 2)) == "2*x'^2 + 2*x*x''");
}

TEST_CASE("d_shift through the sharp construction")
{
    CHECK(d_shift_via_sharp(D("x*y'")) == d_shift(D("x*y'")));
    CHECK(d_shift_via_sharp(D("1")).is_zero());
    CHECK(d_shift_via_sharp(D("x^3")) == D("3*x^2*x'"));
}

TEST_CASE("d_shift agrees with position-wise bumping")
{
    const splitmix64 root(21);
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = root.split(t);
        const auto p = random_diff_poly(rng, 4);
        INFO("p = " << to_string(p));
        auto expected = oracle::from_diff_poly(p);
        for (std::size_t n = 1; n <= 3; ++n) {
            expected = oracle::bump_each(expected);
            CHECK(d_shift_n(p, n) == oracle::to_diff_poly(expected));
        }
        CHECK(d_shift_via_sharp(p) == d_shift(p));
    }
}

TEST_CASE("alpha")
{
    CHECK(alpha(parse_poly("x")) == dv("x", 0));
    CHECK(alpha(parse_poly("x^2*y")) == dv("x") * dv("x") * dv("y"));
    CHECK(alpha(parse_poly("1")) == diff_poly(1));
    CHECK(alpha(parse_poly("x - 1/2")) == D("x - 1/2"));
}

TEST_CASE("natural_map")
{
    CHECK(natural_map(d_shift, dv("x"), 2) == std::vector<diff_poly>{D("x"), D("x'"), D("x''")});
    CHECK(natural_map(d_shift, D("x*y"), 0) == std::vector<diff_poly>{D("x*y")});
    const auto zero = natural_map([](const diff_poly &) { return diff_poly{}; }, D("x + 2"), 3);
    CHECK(zero == std::vector<diff_poly>{D("x + 2"), diff_poly{}, diff_poly{}, diff_poly{}});
}

TEST_CASE("nesting encodes canonically")
{
    const auto p = D("3*x*y' - 1/2*z''^2");
    CHECK(decode_nested(encode_nested(p)) == p);
    CHECK(encode_nested(p) == encode_nested(D("-1/2*z''^2 + 3*y'*x")));
    CHECK(encode_nested(D("x")) != encode_nested(D("y")));
    CHECK_THROWS_AS(decode_nested("not json"), malformed_nesting);
    CHECK_THROWS_AS(decode_nested("[[\"1\"]]"), malformed_nesting);
    CHECK_THROWS_AS(decode_nested("{\"a\": 1}"), malformed_nesting);
    CHECK_THROWS_AS(beta(dv("plain")), malformed_nesting);
}

TEST_CASE("beta")
{
    const auto inner = D("x*y");
    const auto v1 = diff_poly::variable(dvar{encode_nested(inner), 1});
    const auto v0 = diff_poly::variable(dvar{encode_nested(inner), 0});
    CHECK(beta(v1) == D("x'*y + x*y'"));
    CHECK(beta(v0) == inner);
    CHECK(beta(nest_generator(inner)) == inner);
    CHECK(beta(map_alpha(D("x*y' + 2"))) == D("x*y' + 2"));
    CHECK(map_alpha(D("x*y'")) == diff_poly::variable(dvar{encode_nested(D("x")), 0})
                                     * diff_poly::variable(dvar{encode_nested(D("y")), 1}));
    // Products of outer variables multiply the flattened inner polynomials.
    const auto two = diff_poly::variable(dvar{encode_nested(D("x + 1")), 2}) * v0;
    CHECK(beta(two) == D("x''*x*y"));
}

TEST_CASE("monad laws")
{
    for (const auto &r : {check_monad_left_unit(50, 8), check_monad_right_unit(50, 8), check_monad_assoc(50, 8)}) {
        INFO(r.law);
        CHECK(r.pass);
    }
}

TEST_CASE("beta commutes with the derivation")
{
    const splitmix64 root(22);
    for (std::uint64_t t = 0; t < 50; ++t) {
        auto rng = root.split(t);
        const auto q = random_nested(rng, 2);
        CHECK(beta(d_shift(q)) == d_shift(beta(q)));
    }
}

TEST_CASE("extend")
{
    const auto c = series_carrier(8, flavor::hurwitz);
    const series<Rational> s({1, -2, 3, Rational(1, 2), 0, 5, 7, -1, 2}, flavor::hurwitz);
    const std::map<var_name, series<Rational>> f{{"x", s}};
    CHECK(extend(f, c, D("x'")) == sderive(s));
    const auto prod = extend(f, c, D("x*x'"));
    CHECK(prod == smul(s.truncated(7), sderive(s)));
    CHECK(extend(f, c, D("2")) == sscale(Rational(2), sunit(8, flavor::hurwitz)));
    CHECK_THROWS_AS(extend(f, c, D("y")), unbound_variable);

    const auto r = check_extend_morphism(100, 4);
    CHECK(r.pass);

    // Into the free algebra itself, extend along generators is substitution
    // of derivative chains.
    const auto dp = diffpoly_carrier();
    const std::map<var_name, diff_poly> g{{"x", D("y^2")}};
    CHECK(extend(g, dp, D("x'")) == D("2*y*y'"));
    CHECK(extend(g, dp, D("x''*x")) == D("2*y'^2*y^2 + 2*y''*y^3"));
}

TEST_CASE("grading")
{
    CHECK(check_dshift_grading(100, 1).pass);
    for (const auto &[m, c] : d_shift(D("x^2*y'")).terms()) {
        CHECK(m.degree() == 3);
        CHECK(order_weight(m) == 2);
    }
}
